#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polytoric/rational.hpp"

namespace polytoric {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
};

/// Lexicographic (x, then y).
bool lex_less(const Point& p, const Point& q);

/// z-component of (b - a) x (c - a); positive for a left turn.
Rational orient(const Point& a, const Point& b, const Point& c);

/// Integer linear functional (a, b) on the plane, never (0, 0).
struct DualVector {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const DualVector&, const DualVector&) = default;
  friend auto operator<=>(const DualVector&, const DualVector&) = default;

  DualVector operator-() const { return {-a, -b}; }
  Rational operator()(const Point& p) const { return p.x * a + p.y * b; }

  bool is_primitive() const;
  /// a > 0, or a == 0 and b > 0.
  bool is_sign_normalized() const { return a > 0 || (a == 0 && b > 0); }
  DualVector sign_normalized() const { return is_sign_normalized() ? *this : -*this; }
};

/// Primitive integer vector along a nonzero rational direction.
DualVector primitive_direction(const Point& d);

/// x -> M x + t with M integral and det M = +-1.
struct UnimodularAffineMap {
  std::int64_t m11 = 1, m12 = 0, m21 = 0, m22 = 1;
  Rational tx = 0, ty = 0;

  static UnimodularAffineMap identity() { return {}; }

  /// Throws std::invalid_argument unless |det| == 1.
  static UnimodularAffineMap make(std::int64_t m11, std::int64_t m12, std::int64_t m21,
                                  std::int64_t m22, Rational tx = 0, Rational ty = 0);

  std::int64_t det() const { return m11 * m22 - m12 * m21; }
  Point operator()(const Point& p) const;
  UnimodularAffineMap inverse() const;
  /// Image of a dual vector under the transpose-inverse of the linear part,
  /// so that image(g(p)) == v(p) + const.
  DualVector dual_image(const DualVector& v) const;

  friend bool operator==(const UnimodularAffineMap&, const UnimodularAffineMap&) = default;
};

/// Convex polygon with non-empty interior, stored canonically: vertices in
/// counter-clockwise order, no three consecutive collinear, starting at the
/// lexicographically smallest vertex. Two polygons are equal as sets iff
/// their vertex lists compare equal.
class Polygon {
 public:
  /// Convex hull of `points` in canonical form. Throws DegenerateInput if
  /// the hull has zero area (including empty input).
  static Polygon canonicalize(std::span<const Point> points);
  static Polygon canonicalize(std::initializer_list<Point> points) {
    return canonicalize(std::span<const Point>(points.begin(), points.size()));
  }

  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  explicit Polygon(std::vector<Point> v) : vertices_(std::move(v)) {}
  std::vector<Point> vertices_;
};

Rational area(const Polygon& p);
Polygon minkowski_sum(const Polygon& p, const Polygon& q);
/// Throws NonpositiveScale for t <= 0.
Polygon scale(const Polygon& p, const Rational& t);
Polygon translate(const Polygon& p, const Point& u);
Polygon apply_map(const Polygon& p, const UnimodularAffineMap& g);

Rational support(const Polygon& p, const DualVector& v);
/// Length of the image interval v(P).
Rational length_along(const Polygon& p, const DualVector& v);
/// True iff every vertex of `inner` lies in `outer`.
bool contains(const Polygon& outer, const Polygon& inner);

std::string to_string(const Point& p);
std::string to_string(const Polygon& p);

}  // namespace polytoric
