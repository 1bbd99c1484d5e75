#include "shadowcover/body_io.hpp"

#include <cstdio>
#include <fstream>

namespace shadowcover {

using nlohmann::json;

double round12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

json json_num(double x) { return json(round12(x)); }

Body body_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw BadParameter("body json: expected {\"dim\": n, \"vertices\": [[...]]}");
  const int dim = j.at("dim").get<int>();
  if (dim < 1) throw BadParameter("body json: dim must be >= 1");
  std::vector<Vec> pts;
  for (const auto& row : j.at("vertices")) {
    Vec v;
    for (const auto& x : row) v.push_back(x.get<double>());
    if (static_cast<int>(v.size()) != dim)
      throw BadParameter("body json: vertex length does not match dim");
    pts.push_back(std::move(v));
  }
  if (pts.empty()) throw BadParameter("body json: empty vertex list");
  std::string name = j.value("name", std::string());
  return Body::from_points(std::move(pts), dim, std::move(name));
}

json body_to_json(const Body& b) {
  json j;
  j["dim"] = b.dim();
  json verts = json::array();
  for (const Vec& v : b.vertices()) {
    json row = json::array();
    for (double x : v) row.push_back(json_num(x));
    verts.push_back(std::move(row));
  }
  j["vertices"] = std::move(verts);
  if (!b.name().empty()) j["name"] = b.name();
  return j;
}

Body load_body(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParameter("cannot open body file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw BadParameter("malformed body json in " + path + ": " + e.what());
  }
  return body_from_json(j);
}

void save_body(const Body& b, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw BadParameter("cannot write body file: " + path);
  out << body_to_json(b).dump(2) << "\n";
}

}  // namespace shadowcover
