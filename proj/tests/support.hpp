#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "polytoric/geometry.hpp"

namespace polytoric::testing {

inline Polygon unit_square() { return Polygon::canonicalize({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

inline std::vector<Point> pts(std::initializer_list<std::pair<Rational, Rational>> xs) {
  std::vector<Point> out;
  for (const auto& [x, y] : xs) out.push_back({x, y});
  return out;
}

inline Rational q(long num, long den = 1) { return frac(num, den); }

/// Random convex polygon with small rational (or integral) vertices.
inline Polygon random_polygon(std::mt19937_64& rng, bool rational_coords) {
  std::uniform_int_distribution<int> count(3, 9);
  std::uniform_int_distribution<long> coord(-6, 6);
  std::uniform_int_distribution<long> den(1, rational_coords ? 3 : 1);
  for (;;) {
    std::vector<Point> v;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      const long x = coord(rng), dx = den(rng), y = coord(rng), dy = den(rng);
      v.push_back({frac(x, dx), frac(y, dy)});
    }
    try {
      return Polygon::canonicalize(v);
    } catch (...) {
    }
  }
}

/// Brute-force width over a fixed box, no pruning and no certificate.
/// Also returns the lexicographically smallest minimizer.
struct BruteWidth {
  Rational width;
  DualVector direction;
};

inline BruteWidth brute_width(const Polygon& p, std::int64_t box) {
  std::optional<BruteWidth> best;
  for (std::int64_t a = 0; a <= box; ++a) {
    for (std::int64_t b = -box; b <= box; ++b) {
      if (a == 0 && b <= 0) continue;
      if (std::gcd(a, b) != 1) continue;
      Rational lo = p.vertex(0).x * a + p.vertex(0).y * b, hi = lo;
      for (const auto& v : p.vertices()) {
        Rational val = v.x * a + v.y * b;
        if (val < lo) lo = val;
        if (val > hi) hi = val;
      }
      Rational len = hi - lo;
      if (!best || len < best->width) best = BruteWidth{len, {a, b}};
    }
  }
  return *best;
}

/// Shoelace over an explicit vertex list in the given (cyclic) order.
inline Rational shoelace(const std::vector<Point>& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return abs(s) / 2;
}

}  // namespace polytoric::testing
