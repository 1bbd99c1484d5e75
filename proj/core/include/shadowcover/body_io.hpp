#ifndef SHADOWCOVER_BODY_IO_HPP
#define SHADOWCOVER_BODY_IO_HPP

#include <string>

#include <json.hpp>

#include "shadowcover/polytope.hpp"

namespace shadowcover {

/// Body file format: {"dim": n, "vertices": [[...], ...]} with an
/// optional {"name": "..."}. Input vertices are re-irredundated on load.
Body body_from_json(const nlohmann::json& j);
nlohmann::json body_to_json(const Body& b);

Body load_body(const std::string& path);
void save_body(const Body& b, const std::string& path);

/// Rounds a double through "%.12g" so serialized reports are byte-stable
/// with 12 significant digits.
double round12(double x);
nlohmann::json json_num(double x);

}  // namespace shadowcover

#endif
