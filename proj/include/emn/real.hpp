#pragma once

// Value-semantic wrapper around an MPFR float. Every result takes the larger
// precision of its operands; nothing is tied to a global default.

#include <mpfr.h>

#include <string>

#include "emn/arith.hpp"

namespace emn {

/// Binary digits needed for `digits` decimal digits.
mpfr_prec_t bits_for_digits(int digits);

class Real {
 public:
  explicit Real(mpfr_prec_t bits = 128) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  Real(double d, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_d(v_, d, MPFR_RNDN); }
  Real(const Int& z, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
  Real(const Rat& q, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  Real(const Real& o) { mpfr_init2(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.prec());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  /// Scientific notation with `digits` significant digits.
  std::string str(int digits) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator-(Real a) { mpfr_neg(a.v_, a.v_, MPFR_RNDN); return a; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
  friend bool operator>=(const Real& a, const Real& b) { return !(a < b); }

 private:
  mpfr_t v_;
};

Real abs(Real a);
Real log(Real a);
Real max(const Real& a, const Real& b);

/// log |n| for a nonzero integer of any size.
Real log_abs(const Int& n, mpfr_prec_t bits);

}  // namespace emn
