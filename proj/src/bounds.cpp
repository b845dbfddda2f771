#include "polytoric/bounds.hpp"

#include <random>
#include <stdexcept>

#include "polytoric/errors.hpp"
#include "polytoric/toric.hpp"

namespace polytoric {

const char* to_string(ExactSource s) {
  switch (s) {
    case ExactSource::EqualityCase:
      return "EqualityCase";
    case ExactSource::QkFamily:
      return "QkFamily";
  }
  return "?";
}

std::vector<Point> qk_vertices(std::int64_t k) {
  const Rational n(k);
  return {{n + 2, 0},      {n + 2, 1},      {1, n + 2},      {0, n + 2},     {-1, n + 1},
          {-n - 2, -n - 1}, {-n - 2, -n - 2}, {-n - 1, -n - 2}, {n + 1, -1}};
}

QkInstance qk(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  Polygon poly = k == 0 ? q0() : minkowski_sum(scale(p0(), k), q0());
  if (poly != Polygon::canonicalize(qk_vertices(k))) {
    throw VerificationError(VerificationError::Kind::VertexMismatch,
                            "Minkowski sum " + to_string(poly) +
                                " differs from the closed-form Q_" + std::to_string(k));
  }
  WidthCertificate cert = lattice_width(poly);
  QkInstance inst{k, std::move(poly), std::move(cert), std::nullopt, std::nullopt};
  if (k >= 1) {
    if (inst.width.width != 2 * k + 4) {
      throw VerificationError(VerificationError::Kind::WidthMismatch,
                              "width(Q_" + std::to_string(k) + ") = " +
                                  to_string(inst.width.width) + ", expected 2k+4");
    }
    inst.gromov_exact = frac(3 * k + 9, 2);
    inst.ratio = *inst.gromov_exact / inst.width.width;
  }
  return inst;
}

namespace {

// Q_k membership by exact polygon equality; only k = (w - 4) / 2 can match.
std::optional<std::int64_t> qk_index(const Polygon& p, const Rational& width) {
  if (p.size() != 9 || !is_integer(width)) return std::nullopt;
  const Integer w = width.get_num();
  if (w < 6 || w % 2 != 0) return std::nullopt;
  const Integer k = (w - 4) / 2;
  if (!k.fits_slong_p()) return std::nullopt;
  if (p != Polygon::canonicalize(qk_vertices(k.get_si()))) return std::nullopt;
  return k.get_si();
}

}  // namespace

BoundsReport bounds_report(const Polygon& p) {
  BoundsReport r;
  r.width = lattice_width(p);
  r.area = area(p);
  const Rational& w = r.width.width;
  r.seshadri_lower = w * frac(3, 4);
  r.seshadri_upper = w;
  r.equality_case = equiv_scaled_p0(p);
  r.delzant = delzant_check(p).delzant;

  std::optional<std::int64_t> k;
  if (r.equality_case) {
    r.seshadri_exact = ExactValue{r.seshadri_lower, ExactSource::EqualityCase};
  } else if ((k = qk_index(p, w))) {
    r.seshadri_exact = ExactValue{qk_seshadri_chain(*k).exact, ExactSource::QkFamily};
  }

  if (r.delzant) {
    r.gromov_lower = r.seshadri_lower;
    r.gromov_upper = w;
    if (k) r.gromov_exact = frac(3 * *k + 9, 2);
  }

  const Rational lhs = w * w * 3;
  const Rational rhs = r.area * 8;
  r.volume_gap_holds = r.equality_case ? lhs == rhs : lhs < rhs;
  return r;
}

bool VolumeGap::consistent() const {
  const Rational lhs = width * width * 3;
  const Rational rhs = area * 8;
  return equivalent ? lhs == rhs : strict_inequality;
}

VolumeGap volume_gap_check(const Polygon& p) {
  VolumeGap gap;
  gap.equivalent = equiv_scaled_p0(p).has_value();
  gap.width = lattice_width(p).width;
  gap.area = area(p);
  gap.strict_inequality = gap.width * gap.width * 3 < gap.area * 8;
  return gap;
}

std::vector<RatioRow> ratio_table(std::int64_t k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be positive");
  std::vector<RatioRow> rows;
  rows.reserve(static_cast<std::size_t>(k_max));
  for (std::int64_t k = 1; k <= k_max; ++k) {
    QkInstance inst = qk(k);
    rows.push_back({k, *inst.gromov_exact, inst.width.width, *inst.ratio});
  }
  return rows;
}

std::optional<std::int64_t> first_k_below(const std::vector<RatioRow>& table,
                                          const Rational& eps) {
  const Rational threshold = frac(3, 4) + eps;
  for (const auto& row : table) {
    if (row.ratio < threshold) return row.k;
  }
  return std::nullopt;
}

Polygon random_lattice_polygon(const RandomPolygonParams& params) {
  if (params.box < 1 || params.points < 3) {
    throw std::invalid_argument("need box >= 1 and at least 3 points");
  }
  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<std::int64_t> coord(0, params.box);
  std::vector<Point> pts;
  for (;;) {
    pts.clear();
    for (std::int64_t i = 0; i < params.points; ++i) {
      const std::int64_t x = coord(rng);
      const std::int64_t y = coord(rng);
      pts.push_back({x, y});
    }
    try {
      return Polygon::canonicalize(pts);
    } catch (const DegenerateInput&) {
    }
  }
}

}  // namespace polytoric
