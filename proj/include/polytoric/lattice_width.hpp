#pragma once

#include <cstdint>

#include "polytoric/geometry.hpp"

namespace polytoric {

/// Lattice width of a polygon together with the data proving it minimal:
/// every primitive v with max(|a|,|b|) <= search_bound was evaluated, and
/// every primitive v outside that box has length_along > width.
struct WidthCertificate {
  Rational width;
  DualVector direction;  // primitive, sign-normalized
  std::int64_t search_bound = 0;
  std::int64_t evaluated_count = 0;

  friend bool operator==(const WidthCertificate&, const WidthCertificate&) = default;
};

/// Max absolute row sum of the inverse of the matrix with rows e, f.
/// Any v satisfies max(|a|,|b|) <= kappa * max(|<v,e>|, |<v,f>|).
/// Throws std::invalid_argument if e, f are linearly dependent.
Rational inverse_row_sum_norm(const Point& e, const Point& f);

/// Smallest kappa over all pairs of independent vertex differences of `p`.
Rational search_kappa(const Polygon& p);

/// B such that every primitive v with max(|a|,|b|) > B has
/// length_along(p, v) > upper.
std::int64_t search_bound(const Polygon& p, const Rational& upper);
std::int64_t search_bound(const Point& e, const Point& f, const Rational& upper);

WidthCertificate lattice_width(const Polygon& p);

/// Unpruned scan of every primitive sign-normalized v in the box. Throws
/// BoxTooSmall when `box` is below the certified search bound of `p`.
Rational width_oracle(const Polygon& p, std::int64_t box);

/// Calls `fn(v)` for each primitive sign-normalized v with max(|a|,|b|) == r,
/// in lexicographic order of (a, b).
template <typename Fn>
void for_each_primitive_on_ring(std::int64_t r, Fn&& fn);

}  // namespace polytoric

#include "polytoric/detail/ring.hpp"
