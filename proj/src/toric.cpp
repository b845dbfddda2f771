#include "polytoric/toric.hpp"

#include <algorithm>
#include <stdexcept>

#include "polytoric/equivalence.hpp"
#include "polytoric/errors.hpp"

namespace polytoric {

const Polygon& q0() {
  static const Polygon octagon_like = Polygon::canonicalize(
      {{2, 0}, {2, 1}, {1, 2}, {0, 2}, {-1, 1}, {-2, -1}, {-2, -2}, {-1, -2}, {1, -1}});
  return octagon_like;
}

NormalFan normal_fan(const Polygon& p) {
  NormalFan fan;
  fan.rays.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point d = p.vertex(i + 1) - p.vertex(i);
    // Rotating a CCW edge by +90 degrees points into the polygon.
    const DualVector n = primitive_direction(Point{-d.y, d.x});
    fan.rays.push_back({n, -n(p.vertex(i))});
  }
  return fan;
}

std::vector<VertexCone> DelzantReport::failing() const {
  std::vector<VertexCone> out;
  for (const auto& v : vertices) {
    if (!v.smooth()) out.push_back(v);
  }
  return out;
}

DelzantReport delzant_check(const Polygon& p) {
  DelzantReport report;
  report.delzant = true;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& v = p.vertex(i);
    VertexCone cone{v, primitive_direction(p.vertex(i + 1) - v),
                    primitive_direction(p.vertex(i + n - 1) - v), 0};
    cone.determinant = cone.next_edge.a * cone.prev_edge.b - cone.next_edge.b * cone.prev_edge.a;
    report.delzant = report.delzant && cone.smooth();
    report.vertices.push_back(std::move(cone));
  }
  return report;
}

Rational degree(const Polygon& p) { return area(p) * 2; }

Rational mixed_degree(const Polygon& p, const Polygon& q) {
  return area(minkowski_sum(p, q)) - area(p) - area(q);
}

Rational projection_degree(const Polygon& p, const DualVector& v) {
  if (!v.is_primitive()) {
    throw NonPrimitiveDirection("direction (" + std::to_string(v.a) + "," + std::to_string(v.b) +
                                ") is not primitive");
  }
  return length_along(p, v);
}

SeshadriChain qk_seshadri_chain(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("the Q_k chain needs k >= 1");
  SeshadriChain chain;
  chain.k = k;
  chain.curve_value = (mixed_degree(p0(), p0()) * k + mixed_degree(p0(), q0())) /
                      kCubicSectionMultiplicity;
  chain.other_curve_bound = Rational(2 * (k + 2));

  if (!contains(q0(), scale(p0(), 2))) {
    throw VerificationError(VerificationError::Kind::ChainBroken, "Q_0 does not contain 2 P_0");
  }
  if (chain.other_curve_bound < chain.curve_value) {
    throw VerificationError(VerificationError::Kind::ChainBroken,
                            "bound 2(k+2) is below the cubic-section value at k = " +
                                std::to_string(k));
  }
  chain.exact = std::min(chain.curve_value, chain.other_curve_bound);
  if (chain.exact != chain.curve_value) {
    throw VerificationError(VerificationError::Kind::ChainBroken,
                            "minimum is not attained by the cubic section");
  }
  return chain;
}

}  // namespace polytoric
