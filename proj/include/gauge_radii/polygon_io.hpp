#pragma once

#include <string>
#include <string_view>

#include "gauge_radii/geometry.hpp"

namespace gauge_radii {

/// {"vertices": [[x, y], ...]}; clockwise input is accepted and reversed.
ConvexPolygon parse_polygon(std::string_view json_text);
/// Throws Error(Io, "cannot read polygon: <path>") when the file is unreadable.
ConvexPolygon read_polygon(const std::string& path);
std::string polygon_to_json(const ConvexPolygon& p);

}  // namespace gauge_radii
