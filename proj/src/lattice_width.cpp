#include "polytoric/lattice_width.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "polytoric/errors.hpp"

namespace polytoric {
namespace {

// Longest vertex differences tend to give the smallest kappa; the edges are
// always included so that an independent pair exists.
constexpr std::size_t kLongDifferences = 24;

std::vector<Point> kappa_candidates(const Polygon& p) {
  std::vector<Point> diffs;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) diffs.push_back(p.vertex(j) - p.vertex(i));
  }
  auto norm = [](const Point& d) -> Rational { return abs(d.x) + abs(d.y); };
  std::stable_sort(diffs.begin(), diffs.end(),
                   [&](const Point& u, const Point& v) { return norm(u) > norm(v); });
  if (diffs.size() > kLongDifferences) diffs.resize(kLongDifferences);
  for (std::size_t i = 0; i < p.size(); ++i) diffs.push_back(p.vertex(i + 1) - p.vertex(i));
  return diffs;
}

std::int64_t to_bound(const Rational& kappa, const Rational& upper) {
  Integer b = ceil(kappa * upper);
  if (b < 1) b = 1;
  if (!b.fits_slong_p()) throw std::overflow_error("search bound exceeds 64-bit range");
  return b.get_si();
}

}  // namespace

Rational inverse_row_sum_norm(const Point& e, const Point& f) {
  const Rational det = e.x * f.y - e.y * f.x;
  if (det == 0) throw std::invalid_argument("vertex differences are parallel");
  // inverse of [[e.x, e.y], [f.x, f.y]] is [[f.y, -e.y], [-f.x, e.x]] / det
  const Rational row0 = (abs(f.y) + abs(e.y)) / abs(det);
  const Rational row1 = (abs(f.x) + abs(e.x)) / abs(det);
  return std::max(row0, row1);
}

Rational search_kappa(const Polygon& p) {
  const auto cands = kappa_candidates(p);
  std::optional<Rational> best;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      if (orient({0, 0}, cands[i], cands[j]) == 0) continue;
      Rational k = inverse_row_sum_norm(cands[i], cands[j]);
      if (!best || k < *best) best = std::move(k);
    }
  }
  // Consecutive edges of a canonical polygon are never parallel.
  return *best;
}

std::int64_t search_bound(const Polygon& p, const Rational& upper) {
  return to_bound(search_kappa(p), upper);
}

std::int64_t search_bound(const Point& e, const Point& f, const Rational& upper) {
  return to_bound(inverse_row_sum_norm(e, f), upper);
}

WidthCertificate lattice_width(const Polygon& p) {
  const Rational kappa = search_kappa(p);
  WidthCertificate cert;
  bool have = false;
  std::int64_t bound = 1;
  for (std::int64_t r = 1; r <= bound; ++r) {
    for_each_primitive_on_ring(r, [&](const DualVector& v) {
      ++cert.evaluated_count;
      Rational len = length_along(p, v);
      if (!have || len < cert.width || (len == cert.width && v < cert.direction)) {
        cert.width = std::move(len);
        cert.direction = v;
        have = true;
      }
    });
    bound = to_bound(kappa, cert.width);
  }
  cert.search_bound = bound;
  return cert;
}

Rational width_oracle(const Polygon& p, std::int64_t box) {
  const auto certified = lattice_width(p).search_bound;
  if (box < certified) {
    throw BoxTooSmall("box " + std::to_string(box) + " is below the certified search bound " +
                      std::to_string(certified));
  }
  std::optional<Rational> best;
  for (std::int64_t a = 0; a <= box; ++a) {
    for (std::int64_t b = -box; b <= box; ++b) {
      const DualVector v{a, b};
      if (!v.is_sign_normalized() || !v.is_primitive()) continue;
      Rational len = length_along(p, v);
      if (!best || len < *best) best = std::move(len);
    }
  }
  return *best;
}

}  // namespace polytoric
