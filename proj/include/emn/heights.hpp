#pragma once

// Neron-Tate canonical height on E_(M,N), the height pairing and numerical
// rank certification from the Gram matrix.
//
// Normalization: hhat(P) = lim h(x(2^n P)) / 4^n with h(a/b) = log max(|a|,|b|)
// (no factor 1/2). With this convention the two-point regulator of
// E_(35,1260) is 1.70464760105805; the halved convention divides an r x r
// Gram determinant by 2^r.
//
// The limit is evaluated place by place. Writing x = A/B and iterating the
// duplication forms (A, B) -> (phi(A, B), psi(A, B)) without cancelling,
//
//   hhat(P) = log max(|A|,|B|) + sum_k 4^-(k+1) log max(|phi|,|psi|)(a_k, b_k)
//             - sum_p log p * sum_k 4^-(k+1) e_p(k)
//
// where (a_k, b_k) is the k-th iterate rescaled to max norm 1 over R, and
// e_p(k) is the power of p cancelled at step k of the p-adically normalized
// iteration. The resultant of phi and psi is the discriminant squared, so
// e_p vanishes unless p divides N (M^3 - 27N), and e_p(k) <= 2 v_p(disc).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "emn/curve.hpp"
#include "emn/real.hpp"

namespace emn {

inline constexpr int kDefaultPrecisionDigits = 30;
inline constexpr double kDefaultTolerance = 1e-6;
inline constexpr const char* kHeightNormalization =
    "x-coordinate: lim h(x(2^n P))/4^n (calibrated: regulator of "
    "(-126,-882),(-84,-1176) on E(35,1260) = 1.70464760105805)";

/// log max(|a|, |b|) for x = a/b in lowest terms.
Real naive_height(const Rat& x, int precision_digits = kDefaultPrecisionDigits);

struct LocalHeight {
  Int prime;            // 0 for the archimedean place
  Rat cancelled;        // sum_k e_p(k) / 4^(k+1), truncated; unused at infinity
  Real value;           // signed contribution to hhat
};

struct HeightBreakdown {
  std::vector<LocalHeight> places;  // archimedean first
  Real total;
};

/// Bad primes for the duplication forms: primes of N (M^3 - 27N), plus 2.
std::vector<Int> height_primes(const Curve& c);

HeightBreakdown canonical_height_breakdown(const Curve& c, const Point& p,
                                           int precision_digits = kDefaultPrecisionDigits);

/// Throws PrecisionExhausted if the series cannot be certified to the
/// requested number of digits, FactorizationFailed if the discriminant
/// resists factoring.
Real canonical_height(const Curve& c, const Point& p,
                      int precision_digits = kDefaultPrecisionDigits);

/// (hhat(P + Q) - hhat(P) - hhat(Q)) / 2.
Real height_pairing(const Curve& c, const Point& p, const Point& q,
                    int precision_digits = kDefaultPrecisionDigits);

using RealMatrix = std::vector<std::vector<Real>>;

RealMatrix gram_matrix(const Curve& c, const std::vector<Point>& points,
                       int precision_digits = kDefaultPrecisionDigits);

/// Determinant by Gaussian elimination with partial pivoting.
Real determinant(const RealMatrix& m);

/// Principal submatrix on the given indices.
RealMatrix submatrix(const RealMatrix& m, const std::vector<std::size_t>& idx);

struct RankCertificate {
  std::vector<Point> points;
  RealMatrix gram;                   // all points
  std::vector<std::size_t> subset;   // indices certified independent
  Real regulator;                    // det of gram on `subset`
  unsigned rank_lower_bound = 0;
  double tolerance = kDefaultTolerance;
  int precision_digits = kDefaultPrecisionDigits;
  mpfr_prec_t precision_bits = 0;
  std::string normalization = kHeightNormalization;
};

/// Largest r such that some r-subset of `points` has Gram determinant above
/// `tolerance`. Exhaustive over subsets for up to 8 points; beyond that a
/// greedy pass in order of decreasing hhat.
RankCertificate rank_lower_bound(const Curve& c, const std::vector<Point>& points,
                                 double tolerance = kDefaultTolerance,
                                 int precision_digits = kDefaultPrecisionDigits);

/// Same, from an already computed Gram matrix.
RankCertificate certify_rank(std::vector<Point> points, RealMatrix gram, double tolerance,
                             int precision_digits);

}  // namespace emn
