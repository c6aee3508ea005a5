#include "gauge_radii/tolerances.hpp"

#include <charconv>
#include <string>

#include "gauge_radii/error.hpp"

namespace gauge_radii {

namespace {

double parse_positive(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw Error(ErrorCode::InvalidArgument, "malformed tolerance '" + std::string(text) + "'");
    if (!(value > 0.0))
        throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
    return value;
}

}  // namespace

Tolerances apply_tolerance_override(Tolerances base, std::string_view spec) {
    if (spec.find('=') == std::string_view::npos) {
        const double v = parse_positive(spec);
        base.inequality = v;
        base.classify = v;
        return base;
    }
    while (!spec.empty()) {
        const auto comma = spec.find(',');
        const auto item = spec.substr(0, comma);
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorCode::InvalidArgument, "expected key=value in '" + std::string(item) + "'");
        const auto key = item.substr(0, eq);
        const double value = parse_positive(item.substr(eq + 1));
        if (key == "geo") base.geo = value;
        else if (key == "lp") base.lp = value;
        else if (key == "cert") base.cert = value;
        else if (key == "classify") base.classify = value;
        else if (key == "inequality") base.inequality = value;
        else throw Error(ErrorCode::InvalidArgument, "unknown tolerance key '" + std::string(key) + "'");
    }
    return base;
}

}  // namespace gauge_radii
