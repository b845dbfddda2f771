#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polytoric/equivalence.hpp"
#include "polytoric/geometry.hpp"
#include "polytoric/lattice_width.hpp"

namespace polytoric {

enum class ExactSource { EqualityCase, QkFamily };

const char* to_string(ExactSource s);

struct ExactValue {
  Rational value;
  ExactSource source;
};

/// Seshadri constant at the torus identity and (for Delzant polygons) the
/// Gromov width, as certified intervals plus exact values where known.
struct BoundsReport {
  WidthCertificate width;
  Rational area;
  Rational seshadri_lower;  // 3/4 * width
  Rational seshadri_upper;  // width
  std::optional<ExactValue> seshadri_exact;
  std::optional<EquivalenceWitness> equality_case;
  bool delzant = false;
  // Present only for Delzant polygons; the lower end is strict.
  std::optional<Rational> gromov_lower;
  std::optional<Rational> gromov_upper;
  std::optional<Rational> gromov_exact;
  bool volume_gap_holds = false;
};

struct QkInstance {
  std::int64_t k = 0;
  Polygon polygon;
  WidthCertificate width;
  std::optional<Rational> gromov_exact;  // (3k+9)/2, k >= 1
  std::optional<Rational> ratio;         // gromov_exact / width, k >= 1
};

/// Closed-form vertex list of Q_k = k P_0 + Q_0.
std::vector<Point> qk_vertices(std::int64_t k);

/// Builds Q_k by Minkowski sum and cross-checks it against the closed form
/// and (for k >= 1) the width 2k+4. Mismatches raise VerificationError.
QkInstance qk(std::int64_t k);

BoundsReport bounds_report(const Polygon& p);

struct VolumeGap {
  bool equivalent = false;
  /// 3 w^2 < 8 area
  bool strict_inequality = false;
  Rational width;
  Rational area;

  /// Equivalent polygons sit on the boundary 3 w^2 = 8 area; all others are
  /// strictly inside.
  bool consistent() const;
};

VolumeGap volume_gap_check(const Polygon& p);

struct RatioRow {
  std::int64_t k;
  Rational gromov;
  Rational width;
  Rational ratio;
};

/// Gromov-width-to-width ratios of Q_1 .. Q_{k_max}.
std::vector<RatioRow> ratio_table(std::int64_t k_max);

/// Smallest k in the table with ratio < 3/4 + eps.
std::optional<std::int64_t> first_k_below(const std::vector<RatioRow>& table,
                                          const Rational& eps);

struct RandomPolygonParams {
  std::int64_t box = 6;          // coordinates drawn from [0, box]
  std::int64_t points = 5;       // lattice points per hull
  std::uint64_t seed = 0;
};

/// Hull of `points` uniform lattice points in the box; degenerate draws are
/// redrawn from the same stream.
Polygon random_lattice_polygon(const RandomPolygonParams& params);

}  // namespace polytoric
