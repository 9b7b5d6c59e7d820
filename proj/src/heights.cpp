#include "emn/heights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "emn/errors.hpp"

namespace emn {

namespace {

constexpr int kGuardDigits = 20;
constexpr int kMaxSeriesSteps = 4000;

// phi(A,B) = A^4 - b4 A^2 B^2 - 2 b6 A B^3 - b8 B^4
// psi(A,B) = 4 A^3 B + b2 A^2 B^2 + 2 b4 A B^3 + b6 B^4
template <typename T>
std::pair<T, T> duplication(const T& a, const T& b, const T& b2, const T& b4,
                            const T& b6, const T& b8) {
  const T a2 = a * a, bb2 = b * b;
  const T ab = a * b;
  T phi = a2 * a2 - b4 * a2 * bb2 - b6 * ab * bb2 - b6 * ab * bb2 - b8 * bb2 * bb2;
  T psi = a2 * ab + a2 * ab + a2 * ab + a2 * ab + b2 * a2 * bb2 + b4 * ab * bb2 +
          b4 * ab * bb2 + b6 * bb2 * bb2;
  return {std::move(phi), std::move(psi)};
}

Real scale_pow4(Real v, unsigned long k) {
  mpfr_div_2ui(v.get(), v.get(), 2 * k, MPFR_RNDN);
  return v;
}

Real archimedean(const Curve& c, const Int& A, const Int& B, int digits) {
  const mpfr_prec_t bits = bits_for_digits(digits + kGuardDigits);
  const Real b2(c.b2(), bits), b4(c.b4(), bits), b6(c.b6(), bits), b8(c.b8(), bits);
  const Int& big = abs(A) > abs(B) ? A : B;
  Real mu = log_abs(big, bits);

  Real a(A, bits), b(B, bits);
  {
    const Real m = max(abs(a), abs(b));
    a /= m;
    b /= m;
  }
  const double coeff_bound = std::log(std::max(
      Int(1 + abs(c.b4()) + 2 * abs(c.b6()) + abs(c.b8())).get_d(),
      Int(4 + abs(c.b2()) + 2 * abs(c.b4()) + abs(c.b6())).get_d()));
  double observed = std::max(coeff_bound, 1.0);
  const double log_target = -(digits + 5) * std::log(10.0);

  for (int k = 0; k < kMaxSeriesSteps; ++k) {
    auto [f, g] = duplication(a, b, b2, b4, b6, b8);
    const Real m = max(abs(f), abs(g));
    if (m.is_zero() || !m.is_finite()) {
      throw Error(ErrorKind::PrecisionExhausted,
                  "duplication forms vanished at the archimedean place");
    }
    const Real t = log(m);
    observed = std::max(observed, std::fabs(t.to_double()));
    mu += scale_pow4(t, static_cast<unsigned long>(k) + 1);
    a = f / m;
    b = g / m;
    // Remaining terms are bounded by observed * sum_{j>k+1} 4^-j.
    const double log_tail = std::log(2.0 * observed / 3.0) - (k + 1) * std::log(4.0);
    if (log_tail < log_target) return mu;
  }
  throw Error(ErrorKind::PrecisionExhausted,
              "archimedean height series did not converge");
}

// Returns sum_k e_p(k) / 4^(k+1), truncated once the tail is below target.
Rat cancelled_powers(const Curve& c, const Int& A, const Int& B, const Int& p,
                     unsigned bound, int digits) {
  if (bound == 0) return 0;
  const double lp = std::log(p.get_d());
  const int steps = static_cast<int>(std::ceil(
                        ((digits + 5) * std::log(10.0) + std::log(bound * lp + 1.0)) /
                        std::log(4.0))) + 2;
  unsigned long prec = static_cast<unsigned long>(steps + 1) * bound + 1;
  Int mod = pow(p, prec);
  auto reduce = [&](Int v) {
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
    return v;
  };
  const Int b2 = c.b2(), b4 = c.b4(), b6 = c.b6(), b8 = c.b8();
  Int a = reduce(A), b = reduce(B);
  Rat total = 0;
  Int weight = 4;
  for (int k = 0; k < steps; ++k) {
    auto [f, g] = duplication(a, b, b2, b4, b6, b8);
    f = reduce(f);
    g = reduce(g);
    const unsigned long ef = f == 0 ? prec : valuation(f, p);
    const unsigned long eg = g == 0 ? prec : valuation(g, p);
    const unsigned long e = std::min(ef, eg);
    if (e >= prec || e > bound) {
      throw Error(ErrorKind::PrecisionExhausted,
                  "p-adic precision exhausted at p = " + to_string(p));
    }
    total += Rat(Int(e), weight);
    weight *= 4;
    if (e > 0) {
      const Int pe = pow(p, e);
      mpz_divexact(f.get_mpz_t(), f.get_mpz_t(), pe.get_mpz_t());
      mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), pe.get_mpz_t());
      prec -= e;
      mod /= pe;
    }
    a = reduce(f);
    b = reduce(g);
  }
  total.canonicalize();
  return total;
}

}  // namespace

Real naive_height(const Rat& x, int precision_digits) {
  const mpfr_prec_t bits = bits_for_digits(precision_digits + kGuardDigits);
  const Int& num = x.get_num();
  const Int& den = x.get_den();
  if (num == 0) return Real(bits);  // log max(0, 1)
  return log_abs(abs(num) > den ? num : den, bits);
}

std::vector<Int> height_primes(const Curve& c) {
  std::set<Int> primes{2};
  for (const auto& pp : factor(c.N())) primes.insert(pp.prime);
  for (const auto& pp : factor(Int(c.M() * c.M() * c.M() - 27 * c.N()))) {
    primes.insert(pp.prime);
  }
  return {primes.begin(), primes.end()};
}

HeightBreakdown canonical_height_breakdown(const Curve& c, const Point& p,
                                           int precision_digits) {
  if (precision_digits < 1) {
    throw Error(ErrorKind::InvalidArgument, "precision must be at least one digit");
  }
  const mpfr_prec_t bits = bits_for_digits(precision_digits + kGuardDigits);
  HeightBreakdown out{{}, Real(bits)};
  if (p.is_infinity()) return out;

  const Int& A = p.x().get_num();
  const Int& B = p.x().get_den();
  Real arch = archimedean(c, A, B, precision_digits);
  out.total += arch;
  out.places.push_back({0, 0, std::move(arch)});

  for (const Int& prime : height_primes(c)) {
    const unsigned bound = 2 * valuation(c.discriminant(), prime);
    Rat cancelled = cancelled_powers(c, A, B, prime, bound, precision_digits);
    if (cancelled == 0) continue;
    Real value = -(Real(cancelled, bits) * log_abs(prime, bits));
    out.total += value;
    out.places.push_back({prime, std::move(cancelled), std::move(value)});
  }
  return out;
}

Real canonical_height(const Curve& c, const Point& p, int precision_digits) {
  return canonical_height_breakdown(c, p, precision_digits).total;
}

Real height_pairing(const Curve& c, const Point& p, const Point& q, int precision_digits) {
  Real s = canonical_height(c, add(c, p, q), precision_digits);
  s -= canonical_height(c, p, precision_digits);
  s -= canonical_height(c, q, precision_digits);
  mpfr_div_2ui(s.get(), s.get(), 1, MPFR_RNDN);
  return s;
}

RealMatrix gram_matrix(const Curve& c, const std::vector<Point>& points,
                       int precision_digits) {
  const std::size_t n = points.size();
  const mpfr_prec_t bits = bits_for_digits(precision_digits + kGuardDigits);
  std::vector<Real> diag;
  diag.reserve(n);
  for (const Point& p : points) diag.push_back(canonical_height(c, p, precision_digits));
  RealMatrix g(n, std::vector<Real>(n, Real(bits)));
  for (std::size_t i = 0; i < n; ++i) {
    g[i][i] = diag[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      Real s = canonical_height(c, add(c, points[i], points[j]), precision_digits);
      s -= diag[i];
      s -= diag[j];
      mpfr_div_2ui(s.get(), s.get(), 1, MPFR_RNDN);
      g[i][j] = s;
      g[j][i] = std::move(s);
    }
  }
  return g;
}

Real determinant(const RealMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Real(1.0, 64);
  RealMatrix a = m;
  Real det(1.0, a[0][0].prec());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (abs(a[r][col]) > abs(a[pivot][col])) pivot = r;
    }
    if (a[pivot][col].is_zero()) return Real(a[0][0].prec());
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Real factor = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= factor * a[col][k];
    }
  }
  return det;
}

RealMatrix submatrix(const RealMatrix& m, const std::vector<std::size_t>& idx) {
  RealMatrix s;
  s.reserve(idx.size());
  for (std::size_t i : idx) {
    std::vector<Real> row;
    row.reserve(idx.size());
    for (std::size_t j : idx) row.push_back(m[i][j]);
    s.push_back(std::move(row));
  }
  return s;
}

namespace {

// Next k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

RankCertificate certify_rank(std::vector<Point> points, RealMatrix gram, double tolerance,
                             int precision_digits) {
  RankCertificate cert;
  cert.points = std::move(points);
  cert.gram = std::move(gram);
  cert.tolerance = tolerance;
  cert.precision_digits = precision_digits;
  cert.precision_bits = bits_for_digits(precision_digits + kGuardDigits);
  cert.regulator = Real(1.0, cert.precision_bits);
  const std::size_t n = cert.points.size();
  const Real tol(tolerance, cert.precision_bits);

  if (n <= 8) {
    for (std::size_t r = n; r >= 1; --r) {
      std::vector<std::size_t> idx(r);
      std::iota(idx.begin(), idx.end(), 0);
      do {
        Real det = determinant(submatrix(cert.gram, idx));
        if (det > tol) {
          cert.subset = idx;
          cert.regulator = std::move(det);
          cert.rank_lower_bound = static_cast<unsigned>(r);
          return cert;
        }
      } while (next_combination(idx, n));
    }
    return cert;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return cert.gram[i][i] > cert.gram[j][j];
  });
  for (std::size_t i : order) {
    std::vector<std::size_t> trial = cert.subset;
    trial.push_back(i);
    std::sort(trial.begin(), trial.end());
    Real det = determinant(submatrix(cert.gram, trial));
    if (det > tol) {
      cert.subset = std::move(trial);
      cert.regulator = std::move(det);
    }
  }
  cert.rank_lower_bound = static_cast<unsigned>(cert.subset.size());
  return cert;
}

RankCertificate rank_lower_bound(const Curve& c, const std::vector<Point>& points,
                                 double tolerance, int precision_digits) {
  for (const Point& p : points) {
    if (!is_on_curve(c, p)) {
      throw Error(ErrorKind::InvalidArgument, to_string(p) + " is not on the curve");
    }
  }
  return certify_rank(points, gram_matrix(c, points, precision_digits), tolerance,
                      precision_digits);
}

}  // namespace emn
