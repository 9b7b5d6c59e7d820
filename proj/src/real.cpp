#include "emn/real.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "emn/errors.hpp"

namespace emn {

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(std::max(digits, 1) * 3.3219280948873623)) + 8;
}

namespace {

void match_precision(mpfr_t dst, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(dst)) {
    mpfr_prec_round(dst, mpfr_get_prec(other), MPFR_RNDN);
  }
}

}  // namespace

Real& Real::operator+=(const Real& o) {
  match_precision(v_, o.v_);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  match_precision(v_, o.v_);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  match_precision(v_, o.v_);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  match_precision(v_, o.v_);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

std::string Real::str(int digits) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return buf.data();
}

Real abs(Real a) {
  mpfr_abs(a.get(), a.get(), MPFR_RNDN);
  return a;
}

Real log(Real a) {
  mpfr_log(a.get(), a.get(), MPFR_RNDN);
  return a;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real log_abs(const Int& n, mpfr_prec_t bits) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "log of zero");
  // mpfr_set_z rounds huge integers to the working precision, which is
  // exactly what the logarithm needs.
  Real r(Int(abs(n)), bits);
  return log(std::move(r));
}

}  // namespace emn
