#include "avb/report.hpp"

#include <json.hpp>

#include <cstdio>

namespace avb {

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string to_json_line(const CheckReport& r) {
    std::string out = "{\"name\":";
    out += nlohmann::json(r.name).dump();
    out += ",\"instance\":";
    out += nlohmann::json(r.instance).dump();
    out += ",\"lhs\":" + fmt12(r.lhs);
    out += ",\"rhs\":" + fmt12(r.rhs);
    out += ",\"slack\":" + fmt12(r.slack);
    out += ",\"pass\":";
    out += r.pass ? "true" : "false";
    out += ",\"seed\":" + std::to_string(r.seed);
    out += "}";
    return out;
}

}  // namespace avb
