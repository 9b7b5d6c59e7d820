#include "emn/curve.hpp"

#include <ostream>
#include <sstream>

#include "emn/errors.hpp"

namespace emn {

Point::Point(Rat x, Rat y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {
  x_.canonicalize();
  y_.canonicalize();
}

bool operator<(const Point& a, const Point& b) {
  if (a.infinity_ || b.infinity_) return a.infinity_ && !b.infinity_;
  if (a.x_ != b.x_) return a.x_ < b.x_;
  return a.y_ < b.y_;
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  if (p.is_infinity()) return os << "O";
  return os << "(" << to_string(p.x()) << ", " << to_string(p.y()) << ")";
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

Curve::Curve(Int M, Int N) : m_(std::move(M)), n_(std::move(N)) {
  if (n_ == 0) {
    throw Error(ErrorKind::SingularCurve, "singular curve (N = 0)");
  }
  const Int t = m_ * m_ * m_ - 27 * n_;
  if (t == 0) {
    throw Error(ErrorKind::SingularCurve, "singular curve (M³ = 27N)");
  }
  disc_ = n_ * n_ * n_ * t;
}

Curve make_curve(const Int& M, const Int& N) { return Curve(M, N); }

bool is_on_curve(const Curve& c, const Point& p) {
  if (p.is_infinity()) return true;
  const Rat& x = p.x();
  const Rat& y = p.y();
  return y * y - c.M() * x * y - c.N() * y == x * x * x;
}

Point negate(const Curve& c, const Point& p) {
  if (p.is_infinity()) return p;
  return Point(p.x(), c.M() * p.x() + c.N() - p.y());
}

namespace {

// Third intersection given the slope and intercept of the line through the
// two summands, reflected: x3 = l^2 + a1 l - a2 - x1 - x2,
// y3 = -(l + a1) x3 - v - a3.
Point finish(const Curve& c, const Rat& slope, const Rat& intercept,
             const Rat& x1, const Rat& x2) {
  Rat x3 = slope * slope - c.M() * slope - x1 - x2;
  Rat y3 = -(slope - c.M()) * x3 - intercept + c.N();
  return Point(std::move(x3), std::move(y3));
}

}  // namespace

Point double_point(const Curve& c, const Point& p) {
  if (p.is_infinity()) return p;
  const Rat& x = p.x();
  const Rat& y = p.y();
  const Rat denom = 2 * y - c.M() * x - c.N();
  if (denom == 0) return Point::infinity();  // vertical tangent: 2-torsion
  const Rat slope = (3 * x * x + c.M() * y) / denom;
  const Rat intercept = (-x * x * x + c.N() * y) / denom;
  return finish(c, slope, intercept, x, x);
}

Point add(const Curve& c, const Point& p, const Point& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  if (p.x() == q.x()) {
    if (p.y() + q.y() - c.M() * p.x() - c.N() == 0) return Point::infinity();
    return double_point(c, p);
  }
  const Rat dx = q.x() - p.x();
  const Rat slope = (q.y() - p.y()) / dx;
  const Rat intercept = (p.y() * q.x() - q.y() * p.x()) / dx;
  return finish(c, slope, intercept, p.x(), q.x());
}

Point scalar_mul(const Curve& c, const Int& k, const Point& p) {
  if (k < 0) return negate(c, scalar_mul(c, Int(-k), p));
  Point acc;
  Point base = p;
  const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(k.get_mpz_t(), i)) acc = add(c, acc, base);
    if (i + 1 < bits) base = double_point(c, base);
  }
  return acc;
}

}  // namespace emn
