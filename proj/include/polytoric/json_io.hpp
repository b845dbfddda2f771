#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "polytoric/bounds.hpp"
#include "polytoric/equivalence.hpp"
#include "polytoric/geometry.hpp"
#include "polytoric/lattice_width.hpp"
#include "polytoric/toric.hpp"

namespace polytoric {

using Json = nlohmann::ordered_json;

/// Parses `{"vertices": [[x, y], ...]}` where each coordinate is a JSON
/// integer or a "p/q" string. The result is canonicalized. Throws ParseError
/// (with line/column for syntax errors) or DegenerateInput.
Polygon parse_polygon(std::string_view text);
Polygon parse_polygon_file(const std::filesystem::path& path);

Json to_json(const Rational& r);
Json to_json(const Point& p);
Json to_json(const Polygon& p);
Json to_json(const WidthCertificate& c);
Json to_json(const EquivalenceWitness& w);
Json to_json(const NormalFan& f);
Json to_json(const DelzantReport& d);
Json to_json(const BoundsReport& r);
Json to_json(const SeshadriChain& c);
Json to_json(const QkInstance& q);
Json to_json(const VolumeGap& g);

}  // namespace polytoric
