#pragma once

#include "ptorus/fan.hpp"

#include <string>

namespace ptorus {

// Stereographic picture of the fan: each cone meets the unit sphere in a
// point, arc or spherical triangle, projected from a configurable pole to
// the plane tangent at the antipode. Floating point is confined to this
// renderer; nothing flows back into the exact layers.
struct ProjectionConfig {
    std::array<double, 3> pole{-0.5773502691896258, -0.5773502691896258, -0.5773502691896258};
    double scale = 210.0;
    int max_height = 4;  // flip-depth census bound
    double stroke = 1.0;
    bool labels = true;
    int arc_samples = 64;
};

struct RenderStats {
    long cells3 = 0;
    long cells2 = 0;
    long ray_points = 0;
    long labels = 0;
};

std::string render_fan_svg(const ProjectionConfig& cfg, RenderStats* stats = nullptr);

}  // namespace ptorus
