#pragma once

#include <cstdint>
#include <vector>

#include "polytoric/geometry.hpp"

namespace polytoric {

/// Edge inequality <normal, u> >= -support of the moment polygon; the
/// support number is the coefficient of the boundary divisor in L_P.
struct FanRay {
  DualVector normal;  // primitive, inward
  Rational support;

  friend bool operator==(const FanRay&, const FanRay&) = default;
};

/// One ray per edge, in counter-clockwise edge order starting with the edge
/// leaving the first canonical vertex.
struct NormalFan {
  std::vector<FanRay> rays;
};

NormalFan normal_fan(const Polygon& p);

struct VertexCone {
  Point vertex;
  DualVector next_edge;  // primitive direction toward the next vertex
  DualVector prev_edge;  // primitive direction toward the previous vertex
  std::int64_t determinant = 0;

  bool smooth() const { return determinant == 1 || determinant == -1; }
};

struct DelzantReport {
  bool delzant = false;
  std::vector<VertexCone> vertices;

  std::vector<VertexCone> failing() const;
};

/// Smooth iff at every vertex the primitive edge directions form a basis
/// of Z^2.
DelzantReport delzant_check(const Polygon& p);

/// Self-intersection (L_P^2) = 2 * area.
Rational degree(const Polygon& p);

/// Intersection number (L_P . L_Q) = area(P+Q) - area(P) - area(Q).
Rational mixed_degree(const Polygon& p, const Polygon& q);

/// Degree of L_P on a fiber of the toric fibration along `v`.
/// Throws NonPrimitiveDirection unless v is primitive.
Rational projection_degree(const Polygon& p, const DualVector& v);

/// The curve bound for the Seshadri constant of (X_{Q_k}, L_{Q_k}) at the
/// torus identity: the pulled-back cubic section has multiplicity 2 there,
/// every other curve is bounded below by 2(k+2), and the minimum is exact.
struct SeshadriChain {
  std::int64_t k = 0;
  Rational curve_value;
  Rational other_curve_bound;
  Rational exact;
};

/// Multiplicity at the identity of the hyperplane section x+y+z = 3w of the
/// cubic surface xyz = w^3.
inline constexpr int kCubicSectionMultiplicity = 2;

/// Throws std::invalid_argument for k < 1 and VerificationError(ChainBroken)
/// if any link of the chain fails.
SeshadriChain qk_seshadri_chain(std::int64_t k);

/// conv{(2,0),(2,1),(1,2),(0,2),(-1,1),(-2,-1),(-2,-2),(-1,-2),(1,-1)}.
const Polygon& q0();

}  // namespace polytoric
