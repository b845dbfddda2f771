#include "polytoric/equivalence.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

namespace polytoric {
namespace {

// Solves M * src_k = dst_k (k = 0, 1) for an integral unimodular M.
std::optional<std::array<std::int64_t, 4>> integral_unimodular_solution(
    const std::array<Point, 2>& src, const std::array<Point, 2>& dst) {
  const Rational det = src[0].x * src[1].y - src[1].x * src[0].y;
  // M = D * S^{-1}, S = [src0 src1] column-wise.
  const Rational i11 = src[1].y / det, i12 = -src[1].x / det;
  const Rational i21 = -src[0].y / det, i22 = src[0].x / det;
  const std::array<Rational, 4> m = {
      dst[0].x * i11 + dst[1].x * i21, dst[0].x * i12 + dst[1].x * i22,
      dst[0].y * i11 + dst[1].y * i21, dst[0].y * i12 + dst[1].y * i22};
  std::array<std::int64_t, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (!is_integer(m[i]) || !m[i].get_num().fits_slong_p()) return std::nullopt;
    out[i] = m[i].get_num().get_si();
  }
  const auto d = out[0] * out[3] - out[1] * out[2];
  if (d != 1 && d != -1) return std::nullopt;
  return out;
}

template <typename Visit>
void scan_correspondences(const Polygon& p, Visit&& visit) {
  if (p.size() != 3) return;
  const auto t = rational_sqrt(area(p) * 2 / 3);
  if (!t) return;
  const Polygon src = scale(p0(), *t);

  std::array<std::size_t, 3> perm = {0, 1, 2};
  do {
    const Point& s0 = src.vertex(0);
    const Point& d0 = p.vertex(perm[0]);
    const std::array<Point, 2> from = {src.vertex(1) - s0, src.vertex(2) - s0};
    const std::array<Point, 2> to = {p.vertex(perm[1]) - d0, p.vertex(perm[2]) - d0};
    if (auto m = integral_unimodular_solution(from, to)) {
      UnimodularAffineMap g{(*m)[0], (*m)[1], (*m)[2], (*m)[3], 0, 0};
      const Point image = g(s0);
      g.tx = d0.x - image.x;
      g.ty = d0.y - image.y;
      if (!visit(EquivalenceWitness{*t, std::move(g)})) return;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

const Polygon& p0() {
  static const Polygon triangle = Polygon::canonicalize({{1, 0}, {0, 1}, {-1, -1}});
  return triangle;
}

std::optional<EquivalenceWitness> equiv_scaled_p0(const Polygon& p) {
  std::optional<EquivalenceWitness> found;
  scan_correspondences(p, [&](EquivalenceWitness w) {
    found = std::move(w);
    return false;
  });
  return found;
}

std::vector<EquivalenceWitness> equiv_scaled_p0_all(const Polygon& p) {
  std::vector<EquivalenceWitness> all;
  scan_correspondences(p, [&](EquivalenceWitness w) {
    all.push_back(std::move(w));
    return true;
  });
  return all;
}

UnimodularAffineMap random_unimodular(std::uint64_t seed, std::int64_t size) {
  if (size < 1) throw std::invalid_argument("size must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> op_dist(0, 5);
  constexpr int kSteps = 12;

  std::array<std::array<std::int64_t, 2>, 2> m = {{{1, 0}, {0, 1}}};
  auto within = [&](const std::array<std::int64_t, 2>& row) {
    return std::abs(row[0]) <= size && std::abs(row[1]) <= size;
  };
  for (int step = 0; step < kSteps; ++step) {
    const int op = op_dist(rng);
    const std::size_t i = op & 1;
    const std::size_t j = 1 - i;
    if (op < 2) {
      std::array<std::int64_t, 2> row = {m[i][0] + m[j][0], m[i][1] + m[j][1]};
      if (within(row)) m[i] = row;
    } else if (op < 4) {
      std::array<std::int64_t, 2> row = {m[i][0] - m[j][0], m[i][1] - m[j][1]};
      if (within(row)) m[i] = row;
    } else if (op == 4) {
      std::swap(m[0], m[1]);
    } else {
      m[i][0] = -m[i][0];
      m[i][1] = -m[i][1];
    }
  }

  std::uniform_int_distribution<std::int64_t> num_dist(-10 * size, 10 * size);
  std::uniform_int_distribution<std::int64_t> den_dist(1, 4);
  auto draw = [&] {
    const std::int64_t num = num_dist(rng);
    const std::int64_t den = den_dist(rng);
    Rational r{Integer(num), Integer(den)};
    r.canonicalize();
    return r;
  };
  Rational tx = draw();
  Rational ty = draw();
  return UnimodularAffineMap::make(m[0][0], m[0][1], m[1][0], m[1][1], tx, ty);
}

}  // namespace polytoric
