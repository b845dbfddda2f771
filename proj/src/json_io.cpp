#include "polytoric/json_io.hpp"

#include <fstream>
#include <sstream>

#include "polytoric/errors.hpp"

namespace polytoric {
namespace {

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Rational coordinate(const Json& c) {
  if (c.is_number_integer()) {
    // Re-render the integer so values beyond 64 bits are not truncated.
    return parse_rational(c.dump());
  }
  if (c.is_string()) return parse_rational(c.get<std::string>());
  throw ParseError("coordinate must be an integer or a \"p/q\" string, got " + c.dump());
}

}  // namespace

Polygon parse_polygon(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // nlohmann reports the byte just past the offending token.
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(e.what(), line, column);
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError("expected an object with a \"vertices\" array");
  }
  std::vector<Point> pts;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_array() || v.size() != 2) throw ParseError("each vertex must be a pair [x, y]");
    pts.push_back({coordinate(v[0]), coordinate(v[1])});
  }
  if (pts.empty()) throw DegenerateInput("polygon has no vertices");
  return Polygon::canonicalize(pts);
}

Polygon parse_polygon_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_polygon(buf.str());
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Json to_json(const Polygon& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  return Json{{"vertices", std::move(verts)}};
}

Json to_json(const WidthCertificate& c) {
  return Json{{"width", to_json(c.width)},
              {"direction", Json::array({c.direction.a, c.direction.b})},
              {"search_bound", c.search_bound},
              {"evaluated_count", c.evaluated_count}};
}

Json to_json(const EquivalenceWitness& w) {
  const auto& g = w.map;
  return Json{{"t", to_json(w.t)},
              {"matrix", Json::array({Json::array({g.m11, g.m12}), Json::array({g.m21, g.m22})})},
              {"translation", Json::array({to_string(g.tx), to_string(g.ty)})}};
}

Json to_json(const NormalFan& f) {
  Json rays = Json::array();
  for (const auto& r : f.rays) {
    rays.push_back(Json{{"normal", Json::array({r.normal.a, r.normal.b})},
                        {"support", to_json(r.support)}});
  }
  return Json{{"rays", std::move(rays)}};
}

Json to_json(const DelzantReport& d) {
  auto cone = [](const VertexCone& c) {
    return Json{{"vertex", to_json(c.vertex)},
                {"edges", Json::array({Json::array({c.next_edge.a, c.next_edge.b}),
                                       Json::array({c.prev_edge.a, c.prev_edge.b})})},
                {"determinant", c.determinant}};
  };
  Json all = Json::array(), failing = Json::array();
  for (const auto& c : d.vertices) {
    all.push_back(cone(c));
    if (!c.smooth()) failing.push_back(cone(c));
  }
  return Json{{"delzant", d.delzant}, {"vertices", std::move(all)}, {"failing", std::move(failing)}};
}

Json to_json(const BoundsReport& r) {
  auto opt = [](const std::optional<Rational>& v) { return v ? to_json(*v) : Json(nullptr); };
  Json j{{"width", to_json(r.width.width)},
         {"direction", Json::array({r.width.direction.a, r.width.direction.b})},
         {"area", to_json(r.area)},
         {"seshadri_lower", to_json(r.seshadri_lower)},
         {"seshadri_upper", to_json(r.seshadri_upper)}};
  if (r.seshadri_exact) {
    j["seshadri_exact"] = Json{{"value", to_json(r.seshadri_exact->value)},
                               {"source", to_string(r.seshadri_exact->source)}};
  } else {
    j["seshadri_exact"] = nullptr;
  }
  j["equality_case"] = r.equality_case ? to_json(*r.equality_case) : Json(nullptr);
  j["delzant"] = r.delzant;
  j["gromov_lower"] = opt(r.gromov_lower);
  j["gromov_lower_strict"] = r.gromov_lower.has_value();
  j["gromov_upper"] = opt(r.gromov_upper);
  j["gromov_exact"] = opt(r.gromov_exact);
  j["volume_gap_holds"] = r.volume_gap_holds;
  return j;
}

Json to_json(const SeshadriChain& c) {
  return Json{{"k", c.k},
              {"curve_value", to_json(c.curve_value)},
              {"other_curve_bound", to_json(c.other_curve_bound)},
              {"exact", to_json(c.exact)}};
}

Json to_json(const QkInstance& q) {
  Json j{{"k", q.k}, {"polygon", to_json(q.polygon)}, {"width", to_json(q.width)}};
  j["gromov_exact"] = q.gromov_exact ? to_json(*q.gromov_exact) : Json(nullptr);
  j["ratio"] = q.ratio ? to_json(*q.ratio) : Json(nullptr);
  return j;
}

Json to_json(const VolumeGap& g) {
  return Json{{"equivalent", g.equivalent},
              {"strict_inequality", g.strict_inequality},
              {"width", to_json(g.width)},
              {"area", to_json(g.area)}};
}

}  // namespace polytoric
