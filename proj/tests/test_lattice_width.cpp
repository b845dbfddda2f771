#include <doctest.h>

#include <random>

#include "polytoric/bounds.hpp"
#include "polytoric/equivalence.hpp"
#include "polytoric/errors.hpp"
#include "polytoric/lattice_width.hpp"
#include "polytoric/toric.hpp"
#include "support.hpp"

using namespace polytoric;
using namespace polytoric::testing;

TEST_CASE("ring enumeration yields each primitive sign-normalized vector once") {
  std::vector<DualVector> seen;
  for (std::int64_t r = 1; r <= 6; ++r) {
    for_each_primitive_on_ring(r, [&](const DualVector& v) {
      CHECK(v.is_primitive());
      CHECK(v.is_sign_normalized());
      CHECK(std::max(std::abs(v.a), std::abs(v.b)) == r);
      seen.push_back(v);
    });
  }
  std::vector<DualVector> expected;
  for (std::int64_t a = 0; a <= 6; ++a) {
    for (std::int64_t b = -6; b <= 6; ++b) {
      const DualVector v{a, b};
      if (v.is_sign_normalized() && v.is_primitive()) expected.push_back(v);
    }
  }
  std::sort(seen.begin(), seen.end());
  CHECK(seen == expected);
}

TEST_CASE("search bound for P_0 with the explicit edge pair") {
  // inverse of [[-1,1],[-2,-1]] is [[-1,-1],[2,-1]] / 3: row sums 2/3 and 1
  CHECK(inverse_row_sum_norm({-1, 1}, {-2, -1}) == 1);
  CHECK(search_bound(Point{-1, 1}, Point{-2, -1}, Rational(2)) == 2);
  CHECK(search_bound(p0(), Rational(2)) == 2);
  CHECK_THROWS_AS(inverse_row_sum_norm({1, 1}, {2, 2}), std::invalid_argument);
}

TEST_CASE("search bound for the unit square excludes everything past the box") {
  const Polygon sq = unit_square();
  const auto b = search_bound(sq, Rational(1));
  CHECK(b >= 1);
  for (std::int64_t a = -12; a <= 12; ++a) {
    for (std::int64_t c = -12; c <= 12; ++c) {
      const DualVector v{a, c};
      if (!v.is_primitive() || std::max(std::abs(a), std::abs(c)) <= b) continue;
      CHECK(length_along(sq, v) > 1);
    }
  }
}

TEST_CASE("search bound is finite for every polygon") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Polygon p = random_polygon(rng, true);
    CHECK(search_bound(p, length_along(p, {1, 0})) >= 1);
  }
}

TEST_CASE("lattice_width of P_0 picks (0,1) among the minimizers") {
  const auto c = lattice_width(p0());
  CHECK(c.width == 2);
  CHECK(c.direction == DualVector{0, 1});
  // the other minimizers found by exhaustive scan
  CHECK(length_along(p0(), {1, -1}) == 2);
  CHECK(length_along(p0(), {1, 0}) == 2);
  CHECK(c.search_bound >= 1);
  CHECK(c.evaluated_count >= 3);
}

TEST_CASE("lattice_width of the unit square") {
  const auto c = lattice_width(unit_square());
  CHECK(c.width == 1);
  CHECK(c.direction == DualVector{0, 1});
}

TEST_CASE("lattice_width of Q_k is 2k+4") {
  for (std::int64_t k = 1; k <= 10; ++k) {
    CAPTURE(k);
    const Polygon qk = minkowski_sum(scale(p0(), k), q0());
    const auto c = lattice_width(qk);
    CHECK(c.width == 2 * k + 4);
    CHECK(c.direction == DualVector{0, 1});
  }
  CHECK(lattice_width(q0()).width == 4);
}

TEST_CASE("width_oracle") {
  CHECK(width_oracle(p0(), 20) == 2);
  CHECK(width_oracle(minkowski_sum(p0(), q0()), 20) == 6);
  CHECK(width_oracle(unit_square(), 5) == 1);

  // a thin rational sliver whose certified bound exceeds 1
  const Polygon sliver = Polygon::canonicalize({{0, 0}, {7, 1}, {q(1, 2), q(1, 3)}});
  const auto bound = lattice_width(sliver).search_bound;
  if (bound > 1) CHECK_THROWS_AS(width_oracle(sliver, bound - 1), BoxTooSmall);
  CHECK(width_oracle(sliver, bound) == lattice_width(sliver).width);
}

TEST_CASE("certificate agrees with an independent brute-force scan") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    const Polygon p = random_polygon(rng, i % 2 == 0);
    CAPTURE(to_string(p));
    const auto c = lattice_width(p);
    const auto brute = brute_width(p, std::max<std::int64_t>(c.search_bound, 12));
    CHECK(c.width == brute.width);
    CHECK(c.direction == brute.direction);
    CHECK(length_along(p, c.direction) == c.width);
    CHECK(c.direction.is_primitive());
    CHECK(c.direction.is_sign_normalized());
    CHECK(c.width == width_oracle(p, c.search_bound));
  }
}

TEST_CASE("width invariants") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const Polygon p = random_polygon(rng, i % 3 == 0);
    const Polygon r = random_polygon(rng, false);
    const Rational w = lattice_width(p).width;
    CAPTURE(to_string(p));

    const auto g = random_unimodular(static_cast<std::uint64_t>(1000 + i), 4);
    CHECK(lattice_width(apply_map(p, g)).width == w);
    CHECK(lattice_width(translate(p, {q(i, 7), q(-i, 3)})).width == w);

    const Rational t = q(i % 5 + 1, i % 4 + 1);
    CHECK(lattice_width(scale(p, t)).width == t * w);

    // lengths add under Minkowski sum, so width is superadditive and bounded
    // above by the sum's length along either summand's optimal direction
    const auto cp = lattice_width(p);
    const auto cr = lattice_width(r);
    const Polygon sum = minkowski_sum(p, r);
    const Rational ws = lattice_width(sum).width;
    CHECK(std::max(w, cr.width) <= ws);
    CHECK(w + cr.width <= ws);
    CHECK(ws <= length_along(sum, cp.direction));
    CHECK(ws <= length_along(sum, cr.direction));
    CHECK(length_along(sum, cp.direction) == w + length_along(r, cp.direction));
  }
}
