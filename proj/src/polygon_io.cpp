#include "gauge_radii/polygon_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gauge_radii/error.hpp"

namespace gauge_radii {

ConvexPolygon parse_polygon(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::Parse, std::string("malformed polygon json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw Error(ErrorCode::Parse, "polygon json needs a \"vertices\" array");
    std::vector<Point> pts;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw Error(ErrorCode::Parse, "each vertex must be a pair of numbers");
        const Point p{v[0].get<double>(), v[1].get<double>()};
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw Error(ErrorCode::Parse, "vertex is not finite");
        pts.push_back(p);
    }
    if (pts.empty()) throw Error(ErrorCode::Parse, "empty point set");
    return ConvexPolygon::from_ccw(std::move(pts));
}

ConvexPolygon read_polygon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot read polygon: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_polygon(buf.str());
}

std::string polygon_to_json(const ConvexPolygon& p) {
    nlohmann::json doc;
    doc["vertices"] = nlohmann::json::array();
    for (const auto& v : p.vertices()) doc["vertices"].push_back({v.x, v.y});
    return doc.dump();
}

}  // namespace gauge_radii
