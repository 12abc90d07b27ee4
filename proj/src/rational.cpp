#include "ptorus/rational.hpp"

#include <cctype>
#include <sstream>

namespace ptorus {

std::string format_rat(const Rat& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) {
        s += '/';
        s += rat_den(q).str();
    }
    return s;
}

std::string format_vec3(const Vec3& v) {
    return format_rat(v[0]) + "," + format_rat(v[1]) + "," + format_rat(v[2]);
}

Rat parse_rat(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("malformed rational '" + text + "'"); };
    if (text.empty()) throw bad();
    size_t slash = text.find('/');
    auto parse_int = [&](const std::string& part) {
        if (part.empty() || part == "-" || part == "+") throw bad();
        size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) throw bad();
        for (size_t i = start; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw bad();
        return Int(part);
    };
    if (slash == std::string::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rat(num, den);
}

Vec3 parse_vec3(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) parts.push_back(cur);
    if (parts.size() != 3)
        throw std::invalid_argument("malformed vector '" + text + "' (want x,y,z)");
    return {parse_rat(parts[0]), parse_rat(parts[1]), parse_rat(parts[2])};
}

}  // namespace ptorus
