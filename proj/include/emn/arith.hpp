#pragma once

// Integer and rational helpers shared by every module: exact types,
// factorization, divisor enumeration and string conversion.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace emn {

using Int = mpz_class;
using Rat = mpq_class;

struct PrimePower {
  Int prime;
  unsigned exponent = 0;
};

using Factorization = std::vector<PrimePower>;

/// Factor |n| (n != 0) into primes, ascending. Trial division up to 10^6,
/// then Pollard-Brent on the cofactor. Throws FactorizationFailed if a
/// composite cofactor resists the rho iterations.
Factorization factor(const Int& n);

/// Total number of prime factors counted with multiplicity.
unsigned big_omega(const Factorization& f);

/// All positive divisors of the number whose factorization is given, ascending.
std::vector<Int> divisors(const Factorization& f);

/// Exponent of p in n (n != 0, p prime).
unsigned valuation(const Int& n, const Int& p);

/// True iff n >= 0 is a perfect square; the root is stored in `root`.
bool is_square(const Int& n, Int& root);

Int pow(const Int& base, unsigned long exp);

/// Rational in lowest terms rendered as "n" or "n/d".
std::string to_string(const Rat& q);
std::string to_string(const Int& n);

/// Parses "n" or "n/d" (optionally signed). Throws InvalidArgument.
Rat parse_rational(const std::string& text);
Int parse_integer(const std::string& text);

}  // namespace emn
