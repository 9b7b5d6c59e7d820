#pragma once

// The curve E_(M,N): y^2 - Mxy - Ny = x^3, i.e. the long Weierstrass model
// with a1 = -M, a3 = -N and a2 = a4 = a6 = 0, and its exact group law.

#include <iosfwd>

#include "emn/arith.hpp"

namespace emn {

/// A rational point: either the point at infinity or an affine pair kept in
/// lowest terms, so equality is structural.
class Point {
 public:
  Point() = default;  // infinity
  Point(Rat x, Rat y);

  static Point infinity() { return Point(); }

  bool is_infinity() const noexcept { return infinity_; }
  const Rat& x() const noexcept { return x_; }
  const Rat& y() const noexcept { return y_; }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.infinity_ || b.infinity_) return a.infinity_ == b.infinity_;
    return a.x_ == b.x_ && a.y_ == b.y_;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  // Arbitrary but total; lets points live in ordered containers.
  friend bool operator<(const Point& a, const Point& b);

 private:
  bool infinity_ = true;
  Rat x_, y_;
};

std::ostream& operator<<(std::ostream& os, const Point& p);
std::string to_string(const Point& p);

class Curve {
 public:
  /// Throws SingularCurve when N = 0 or M^3 = 27N.
  Curve(Int M, Int N);

  const Int& M() const noexcept { return m_; }
  const Int& N() const noexcept { return n_; }

  /// N^3 (M^3 - 27N), from the usual b-invariants of the long model.
  const Int& discriminant() const noexcept { return disc_; }

  Int b2() const { return m_ * m_; }
  Int b4() const { return m_ * n_; }
  Int b6() const { return n_ * n_; }
  Int b8() const { return 0; }

  friend bool operator==(const Curve& a, const Curve& b) {
    return a.m_ == b.m_ && a.n_ == b.n_;
  }

 private:
  Int m_, n_, disc_;
};

Curve make_curve(const Int& M, const Int& N);

bool is_on_curve(const Curve& c, const Point& p);

/// -(x, y) = (x, Mx + N - y).
Point negate(const Curve& c, const Point& p);

Point add(const Curve& c, const Point& p, const Point& q);

inline Point subtract(const Curve& c, const Point& p, const Point& q) {
  return add(c, p, negate(c, q));
}

Point scalar_mul(const Curve& c, const Int& k, const Point& p);

/// Twice p, written out from the tangent formula; same result as add(p, p).
Point double_point(const Curve& c, const Point& p);

}  // namespace emn
