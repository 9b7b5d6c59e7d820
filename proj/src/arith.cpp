#include "emn/arith.hpp"

#include <algorithm>
#include <map>

#include "emn/errors.hpp"

namespace emn {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ExceptionalPoint: return "ExceptionalPoint";
    case ErrorKind::BadReduction: return "BadReduction";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::InconsistentTorsion: return "InconsistentTorsion";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::FactorizationFailed: return "FactorizationFailed";
  }
  return "Unknown";
}

namespace {

constexpr unsigned long kTrialBound = 1000000;
constexpr int kPrimalityReps = 40;

bool probably_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), kPrimalityReps) > 0;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0.
Int pollard_brent(const Int& n, unsigned long c) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  auto f = [&](const Int& v) {
    Int r = v * v + c;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    return r;
  };
  Int y = 2, x, ys, q = 1, g = 1;
  unsigned long r = 1;
  const unsigned long m = 128;
  const unsigned long limit = 1UL << 26;
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = f(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        Int d = abs(x - y);
        q = (q * d) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
    if (r > limit) return 0;
  }
  if (g == n) {
    do {
      ys = f(ys);
      Int d = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g == n ? Int(0) : g;
}

void split(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (probably_prime(n)) {
    ++out[n];
    return;
  }
  Int root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    split(root, out);
    split(root, out);
    return;
  }
  for (unsigned long c = 1; c < 64; ++c) {
    Int d = pollard_brent(n, c);
    if (d != 0 && d != 1 && d != n) {
      split(d, out);
      split(Int(n / d), out);
      return;
    }
  }
  throw Error(ErrorKind::FactorizationFailed,
              "could not factor " + n.get_str());
}

}  // namespace

Factorization factor(const Int& n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cannot factor zero");
  Int m = abs(n);
  std::map<Int, unsigned> found;
  for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
    if (Int(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      found[Int(p)] = e;
    }
  }
  split(m, found);
  Factorization f;
  for (const auto& [p, e] : found) f.push_back({p, e});
  return f;
}

unsigned big_omega(const Factorization& f) {
  unsigned total = 0;
  for (const auto& pp : f) total += pp.exponent;
  return total;
}

std::vector<Int> divisors(const Factorization& f) {
  std::vector<Int> out{1};
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned valuation(const Int& n, const Int& p) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "valuation of zero");
  Int rest;
  return static_cast<unsigned>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

bool is_square(const Int& n, Int& root) {
  if (n < 0) return false;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

Int pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Int& n) { return n.get_str(); }

Int parse_integer(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start ||
      !std::all_of(s.begin() + start, s.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorKind::InvalidArgument, "not an integer: '" + text + "'");
  }
  return Int(s, 10);
}

Rat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_integer(text));
  Int num = parse_integer(text.substr(0, slash));
  Int den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw Error(ErrorKind::InvalidArgument, "zero denominator: '" + text + "'");
  }
  Rat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace emn
