#include "polytoric/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "polytoric/errors.hpp"

namespace polytoric {

bool lex_less(const Point& p, const Point& q) {
  if (p.x != q.x) return p.x < q.x;
  return p.y < q.y;
}

Rational orient(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool DualVector::is_primitive() const {
  return std::gcd(a, b) == 1;
}

DualVector primitive_direction(const Point& d) {
  if (d.x == 0 && d.y == 0) throw std::invalid_argument("zero direction");
  Integer l;
  mpz_lcm(l.get_mpz_t(), d.x.get_den_mpz_t(), d.y.get_den_mpz_t());
  Integer a = d.x.get_num() * (l / d.x.get_den());
  Integer b = d.y.get_num() * (l / d.y.get_den());
  Integer g = gcd(a, b);
  a /= g;
  b /= g;
  if (!a.fits_slong_p() || !b.fits_slong_p()) {
    throw std::overflow_error("primitive direction exceeds 64-bit range");
  }
  return {a.get_si(), b.get_si()};
}

UnimodularAffineMap UnimodularAffineMap::make(std::int64_t m11, std::int64_t m12,
                                              std::int64_t m21, std::int64_t m22,
                                              Rational tx, Rational ty) {
  UnimodularAffineMap g{m11, m12, m21, m22, std::move(tx), std::move(ty)};
  const auto d = g.det();
  if (d != 1 && d != -1) throw std::invalid_argument("linear part is not unimodular");
  return g;
}

Point UnimodularAffineMap::operator()(const Point& p) const {
  return {p.x * m11 + p.y * m12 + tx, p.x * m21 + p.y * m22 + ty};
}

UnimodularAffineMap UnimodularAffineMap::inverse() const {
  const auto d = det();
  UnimodularAffineMap inv{m22 * d, -m12 * d, -m21 * d, m11 * d, 0, 0};
  const Point t = inv(Point{tx, ty});
  inv.tx = -t.x;
  inv.ty = -t.y;
  return inv;
}

DualVector UnimodularAffineMap::dual_image(const DualVector& v) const {
  // (M^{-1})^T v with M^{-1} = det * [[m22, -m12], [-m21, m11]].
  const auto d = det();
  return {d * (m22 * v.a - m21 * v.b), d * (-m12 * v.a + m11 * v.b)};
}

Polygon Polygon::canonicalize(std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw DegenerateInput("fewer than three distinct points");

  // Monotone chain; strict turns only, so collinear points are dropped.
  std::vector<Point> hull;
  hull.reserve(2 * pts.size());
  for (const auto& p : pts) {
    while (hull.size() >= 2 && orient(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  const auto lower = hull.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (hull.size() >= lower && orient(hull[hull.size() - 2], hull.back(), *it) <= 0) {
      hull.pop_back();
    }
    hull.push_back(*it);
  }
  hull.pop_back();
  if (hull.size() < 3) throw DegenerateInput("points are collinear");
  return Polygon(std::move(hull));
}

Rational area(const Polygon& p) {
  Rational twice = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& a = p.vertex(i);
    const auto& b = p.vertex(i + 1);
    twice += a.x * b.y - b.x * a.y;
  }
  return twice / 2;
}

Polygon minkowski_sum(const Polygon& p, const Polygon& q) {
  std::vector<Point> sums;
  sums.reserve(p.size() * q.size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  }
  return Polygon::canonicalize(sums);
}

Polygon scale(const Polygon& p, const Rational& t) {
  if (t <= 0) throw NonpositiveScale("scale factor must be positive, got " + to_string(t));
  std::vector<Point> out;
  out.reserve(p.size());
  for (const auto& v : p.vertices()) out.push_back({v.x * t, v.y * t});
  return Polygon::canonicalize(out);
}

Polygon translate(const Polygon& p, const Point& u) {
  std::vector<Point> out;
  out.reserve(p.size());
  for (const auto& v : p.vertices()) out.push_back(v + u);
  return Polygon::canonicalize(out);
}

Polygon apply_map(const Polygon& p, const UnimodularAffineMap& g) {
  std::vector<Point> out;
  out.reserve(p.size());
  for (const auto& v : p.vertices()) out.push_back(g(v));
  return Polygon::canonicalize(out);
}

Rational support(const Polygon& p, const DualVector& v) {
  Rational best = v(p.vertex(0));
  for (const auto& u : p.vertices().subspan(1)) {
    Rational val = v(u);
    if (val > best) best = std::move(val);
  }
  return best;
}

Rational length_along(const Polygon& p, const DualVector& v) {
  return support(p, v) + support(p, -v);
}

bool contains(const Polygon& outer, const Polygon& inner) {
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const auto& a = outer.vertex(i);
    const auto& b = outer.vertex(i + 1);
    for (const auto& q : inner.vertices()) {
      if (orient(a, b, q) < 0) return false;
    }
  }
  return true;
}

std::string to_string(const Point& p) {
  return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

std::string to_string(const Polygon& p) {
  std::string s = "conv{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += to_string(p.vertex(i));
  }
  return s + "}";
}

}  // namespace polytoric
