#include "ptorus/cli.hpp"

#include "ptorus/fan.hpp"
#include "ptorus/render.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace ptorus {

namespace {

using nlohmann::json;

json vec_json(const Vec3& v) {
    return json::array({format_rat(v[0]), format_rat(v[1]), format_rat(v[2])});
}

json matrix_json(const ExchangeMatrix3& m) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int j = 0; j < 3; ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

std::string matrix_text(const ExchangeMatrix3& m) {
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (i) s += "; ";
        for (int j = 0; j < 3; ++j) {
            if (j) s += ",";
            s += m.at(i, j).str();
        }
    }
    return s;
}

std::string cone_tag(Cone::Kind kind) {
    switch (kind) {
        case Cone::Kind::PositiveOrthant: return "PositiveOrthant";
        case Cone::Kind::NegativeOrthant: return "NegativeOrthant";
        case Cone::Kind::TriangleImage: return "TriangleImage";
        case Cone::Kind::RayImage: return "RayImage";
        case Cone::Kind::PlaneRay: return "PlaneRay";
        case Cone::Kind::Face: return "Face";
    }
    return "?";
}

json cone_json(const Cone& c) {
    json j;
    j["cone"] = cone_tag(c.kind);
    if (c.kind == Cone::Kind::Face) j["parent"] = cone_tag(c.parent);
    if (c.family) j["family"] = c.family;
    j["dim"] = c.dim;
    json gens = json::array();
    for (const Vec3& g : c.generators) gens.push_back(vec_json(g));
    j["generators"] = gens;
    json base = json::array();
    for (const FareyPoint& p : c.base) base.push_back(json::array({p.a.str(), p.b.str()}));
    if (!base.empty()) j["base"] = base;
    json prov = json::array();
    for (const Curve& cv : c.provenance) prov.push_back(format_curve(cv));
    j["provenance"] = prov;
    return j;
}

MutationSequence parse_seq(const std::string& text) {
    MutationSequence seq;
    if (text.empty()) return seq;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok != "1" && tok != "2" && tok != "3")
            throw std::invalid_argument("mutation indices must be in {1,2,3}, got '" + tok + "'");
        seq.push_back(tok[0] - '0');
    }
    return seq;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LinearRelation parse_relation(const std::string& text) {
    LinearRelation rel;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::replace(line.begin(), line.end(), '=', ' ');
        std::istringstream ls(line);
        std::string vec_text, coeff_text;
        if (!(ls >> vec_text)) continue;
        if (!(ls >> coeff_text))
            throw std::invalid_argument("malformed relation line '" + line + "'");
        rel.terms.push_back({parse_vec3(vec_text), parse_rat(coeff_text)});
    }
    return rel;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact universal coefficients, shear coordinates and the mutation fan "
                 "of the once-punctured torus"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit one JSON object instead of text");

    std::string seq_text, row_text, curve_text, flips_text, vec_text, ring_text = "Z";
    std::string relation_file, tangle_file, out_file = "fan.svg";
    int max_height = 5, depth = 6, max_depth = 10, samples = 1000, sanity_height = 6;
    double scale = 210.0;

    CLI::App* c_mutate = app.add_subcommand("mutate", "mutate the exchange matrix, optionally a coefficient row");
    c_mutate->add_option("--seq", seq_text, "comma-separated mutation indices, applied left to right");
    c_mutate->add_option("--row", row_text, "coefficient row x,y,z (exact rationals)");

    CLI::App* c_shear = app.add_subcommand("shear", "shear coordinates of a curve");
    c_shear->add_option("--curve", curve_text, "cl:a/b | cw:a/b | ccw:a/b | cl:inf | line:p/q | line:inf")
        ->required();
    c_shear->add_option("--flips", flips_text, "flip positions defining the triangulation");

    CLI::App* c_locate = app.add_subcommand("locate", "minimal fan cone containing a vector");
    c_locate->add_option("--vector", vec_text)->required();

    CLI::App* c_expand = app.add_subcommand("expand", "expand a vector in the universal coefficient rows");
    c_expand->add_option("--vector", vec_text)->required();

    CLI::App* c_coeffs = app.add_subcommand("coeffs", "enumerate universal coefficient rows");
    c_coeffs->add_option("--max-height", max_height)->check(CLI::PositiveNumber);
    c_coeffs->add_option("--ring", ring_text)->check(CLI::IsMember({"Z", "Q", "R"}));

    CLI::App* c_gvec = app.add_subcommand("gvectors", "g-vectors of cluster variables");
    c_gvec->add_option("--max-height", max_height)->check(CLI::PositiveNumber);

    CLI::App* c_verify = app.add_subcommand("verify", "depth-bounded coherence check of a linear relation");
    c_verify->add_option("--relation", relation_file, "file with lines '<x,y,z> <coeff>'")->required();
    c_verify->add_option("--depth", depth)->check(CLI::NonNegativeNumber);

    CLI::App* c_tangle = app.add_subcommand("tangle", "search for a triangulation with nonzero tangle shear");
    c_tangle->add_option("--spec", tangle_file, "file with lines '<curve>=<weight>'")->required();
    c_tangle->add_option("--max-depth", max_depth)->check(CLI::NonNegativeNumber);

    CLI::App* c_render = app.add_subcommand("render", "stereographic SVG picture of the fan");
    c_render->add_option("--max-height", max_height)->check(CLI::PositiveNumber);
    c_render->add_option("--out", out_file);
    c_render->add_option("--scale", scale);

    CLI::App* c_sanity = app.add_subcommand("sanity", "random location and fan consistency sweep");
    c_sanity->add_option("--samples", samples)->check(CLI::PositiveNumber);
    c_sanity->add_option("--max-height", sanity_height)->check(CLI::PositiveNumber);

    args.insert(args.begin(), "ptorus");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_mutate->parsed()) {
            MutationSequence seq = parse_seq(seq_text);
            ExchangeMatrix3 m = mutate_all(ExchangeMatrix3::base(), seq);
            json j;
            j["seq"] = seq;
            j["matrix"] = matrix_json(m);
            std::string row_out;
            if (!row_text.empty()) {
                Vec3 row = mutation_map(ExchangeMatrix3::base(), seq, parse_vec3(row_text));
                j["row"] = vec_json(row);
                row_out = format_vec3(row);
            }
            if (as_json)
                out << j.dump() << "\n";
            else {
                if (!row_out.empty()) out << row_out << "\n";
                out << "matrix: " << matrix_text(m) << "\n";
            }
            return 0;
        }

        if (c_shear->parsed()) {
            Curve curve = parse_curve(curve_text);
            Triangulation t = base_triangulation();
            for (int k : parse_seq(flips_text)) t = flip(t, k);
            Vec3 v = shear_wrt(t, curve);
            if (as_json) {
                json j;
                j["curve"] = format_curve(curve);
                j["flips"] = t.path;
                j["shear"] = vec_json(v);
                out << j.dump() << "\n";
            } else {
                out << format_vec3(v) << "\n";
            }
            return 0;
        }

        if (c_locate->parsed()) {
            Cone cone = locate_in_fan(parse_vec3(vec_text));
            if (as_json)
                out << cone_json(cone).dump() << "\n";
            else {
                out << format_cone(cone) << "\n";
                for (const Vec3& g : cone.generators) out << "  generator " << format_vec3(g) << "\n";
            }
            return 0;
        }

        if (c_expand->parsed()) {
            Expansion ex = basis_expand(parse_vec3(vec_text));
            if (as_json) {
                json j = cone_json(ex.cone);
                json coeffs = json::array();
                for (const auto& [elem, c] : ex.terms) coeffs.push_back(format_rat(c));
                j["coefficients"] = coeffs;
                out << j.dump() << "\n";
            } else {
                out << format_cone(ex.cone) << "\n";
                for (const auto& [elem, c] : ex.terms)
                    out << format_rat(c) << " * " << format_vec3(elem.vector) << "  ("
                        << format_curve(elem.provenance) << ")\n";
            }
            return 0;
        }

        if (c_coeffs->parsed()) {
            Ring ring = ring_text == "Z" ? Ring::Z : ring_text == "Q" ? Ring::Q : Ring::R;
            auto rows = enumerate_universal_coeffs(max_height, ring);
            if (as_json) {
                json j;
                j["ring"] = ring_text;
                j["max_height"] = max_height;
                json arr = json::array();
                for (const auto& r : rows)
                    arr.push_back({{"vector", vec_json(r.vector)}, {"curve", format_curve(r.provenance)}});
                j["rows"] = arr;
                if (ring == Ring::R)
                    j["note"] = "irrational plane rays are represented by caller-supplied directions";
                out << j.dump() << "\n";
            } else {
                for (const auto& r : rows)
                    out << format_vec3(r.vector) << "  (" << format_curve(r.provenance) << ")\n";
            }
            return 0;
        }

        if (c_gvec->parsed()) {
            auto gv = g_vectors(max_height);
            if (as_json) {
                json arr = json::array();
                for (const auto& [s, v] : gv)
                    arr.push_back({{"slope", format_slope(s)}, {"g", vec_json(v)}});
                out << json{{"max_height", max_height}, {"gvectors", arr}}.dump() << "\n";
            } else {
                for (const auto& [s, v] : gv) out << format_slope(s) << "  " << format_vec3(v) << "\n";
            }
            return 0;
        }

        if (c_verify->parsed()) {
            LinearRelation rel = parse_relation(read_file(relation_file));
            CoherenceResult res = is_b_coherent(rel, depth);
            if (as_json) {
                json j;
                j["coherent"] = res.coherent;
                j["depth"] = res.depth;
                j["sequences_checked"] = res.sequences_checked;
                if (res.witness) j["witness"] = *res.witness;
                out << j.dump() << "\n";
            } else if (res.coherent) {
                out << "coherent to depth " << res.depth << " (" << res.sequences_checked
                    << " sequences)\n";
            } else {
                out << "violated at sequence [";
                for (size_t i = 0; i < res.witness->size(); ++i)
                    out << (i ? "," : "") << (*res.witness)[i];
                out << "]\n";
            }
            return res.coherent ? 0 : 1;
        }

        if (c_tangle->parsed()) {
            Tangle tangle = parse_tangle(read_file(tangle_file));
            FalsifyResult res = falsify_null_tangle(tangle, max_depth);
            if (as_json) {
                json j;
                j["witness_found"] = res.found;
                j["explored"] = res.explored;
                if (res.found) {
                    j["depth"] = res.depth;
                    j["flips"] = res.witness.path;
                    j["shear"] = vec_json(res.shear);
                } else {
                    j["max_depth"] = max_depth;
                }
                out << j.dump() << "\n";
            } else if (res.found) {
                out << "witness at depth " << res.depth << ", flips [";
                for (size_t i = 0; i < res.witness.path.size(); ++i)
                    out << (i ? "," : "") << res.witness.path[i];
                out << "], shear " << format_vec3(res.shear) << "\n";
            } else {
                out << "exhausted to depth " << max_depth << " (" << res.explored
                    << " triangulations), inconclusive\n";
            }
            return res.found ? 1 : 0;
        }

        if (c_render->parsed()) {
            ProjectionConfig cfg;
            cfg.max_height = max_height;
            cfg.scale = scale;
            RenderStats stats;
            std::string svg = render_fan_svg(cfg, &stats);
            std::ofstream f(out_file, std::ios::binary);
            if (!f) throw std::invalid_argument("cannot write '" + out_file + "'");
            f << svg;
            if (as_json) {
                json j;
                j["out"] = out_file;
                j["cells3"] = stats.cells3;
                j["cells2"] = stats.cells2;
                j["ray_points"] = stats.ray_points;
                j["labels"] = stats.labels;
                out << j.dump() << "\n";
            } else {
                out << "wrote " << out_file << " (" << stats.cells3 << " filled cells, "
                    << stats.cells2 << " arcs, " << stats.ray_points << " rays)\n";
            }
            return 0;
        }

        if (c_sanity->parsed()) {
            SanityReport r = fan_sanity(samples, sanity_height);
            if (as_json) {
                json j;
                j["samples"] = r.samples;
                j["located"] = r.located;
                j["membership_failures"] = r.membership_failures;
                j["simplicial_failures"] = r.simplicial_failures;
                j["pairs_checked"] = r.pairs_checked;
                j["pair_failures"] = r.pair_failures;
                j["unimodular_checked"] = r.unimodular_checked;
                j["unimodular_failures"] = r.unimodular_failures;
                j["ok"] = r.ok();
                out << j.dump() << "\n";
            } else {
                out << "located " << r.located << "/" << r.samples << ", membership failures "
                    << r.membership_failures << ", simplicial failures " << r.simplicial_failures
                    << "\n"
                    << "cone pairs checked " << r.pairs_checked << ", failures " << r.pair_failures
                    << "\n"
                    << "unimodular " << (r.unimodular_checked - r.unimodular_failures) << "/"
                    << r.unimodular_checked << "\n";
            }
            return r.ok() ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace ptorus
