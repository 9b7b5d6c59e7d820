#include "emn/partitions.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>

#include "emn/errors.hpp"

namespace emn {

const char* to_string(Domain d) noexcept {
  return d == Domain::Positive ? "positive" : "nonzero";
}

Domain parse_domain(const std::string& text) {
  if (text == "positive") return Domain::Positive;
  if (text == "nonzero") return Domain::Nonzero;
  throw Error(ErrorKind::InvalidArgument,
              "domain must be 'positive' or 'nonzero', got '" + text + "'");
}

Triple Triple::sorted() const {
  Triple t = *this;
  std::sort(t.parts.begin(), t.parts.end());
  return t;
}

bool Triple::has_distinct_parts() const {
  return parts[0] != parts[1] && parts[1] != parts[2] && parts[0] != parts[2];
}

bool Triple::is_integral() const {
  return std::all_of(parts.begin(), parts.end(),
                     [](const Rat& q) { return q.get_den() == 1; });
}

std::string to_string(const Triple& t) {
  return "(" + to_string(t[0]) + ", " + to_string(t[1]) + ", " + to_string(t[2]) + ")";
}

std::vector<Triple> enumerate_partitions(const Int& M, const Int& N, Domain domain) {
  if (N == 0) throw Error(ErrorKind::InvalidArgument, "N must be nonzero");
  if (domain == Domain::Positive && (M < 3 || N < 0)) return {};

  const std::vector<Int> pos = divisors(factor(N));
  std::vector<Int> candidates;
  for (const Int& d : pos) {
    if (domain == Domain::Positive && 3 * d > M) break;
    candidates.push_back(d);
    if (domain == Domain::Nonzero) candidates.push_back(-d);
  }

  std::set<Triple> found;
  for (const Int& d : candidates) {
    // d is one part; the other two are the roots of t^2 - s t + p.
    const Int s = M - d;
    const Int p = N / d;
    Int root;
    if (!is_square(Int(s * s - 4 * p), root)) continue;
    if ((s - root) % 2 != 0) continue;
    const Int lo = (s - root) / 2;
    const Int hi = (s + root) / 2;
    if (domain == Domain::Positive && lo < d) continue;  // d must be smallest
    if (lo == 0) continue;
    if (d == lo && lo == hi) continue;  // (d, d, d): singular
    found.insert(Triple(Rat(d), Rat(lo), Rat(hi)).sorted());
  }
  return {found.begin(), found.end()};
}

std::size_t RepeatedPartResult::positive_count() const {
  return static_cast<std::size_t>(std::count_if(
      solutions.begin(), solutions.end(),
      [](const RepeatedPartition& s) { return !s.has_negative_part(); }));
}

RepeatedPartResult repeated_part_solutions(const Int& M, const Int& N, Domain domain) {
  if (N == 0) throw Error(ErrorKind::InvalidArgument, "N must be nonzero");
  RepeatedPartResult out;
  for (const Int& d : divisors(factor(N))) {
    for (const Int& a : {Int(-d), d}) {
      if (2 * a * a * a - M * a * a + N != 0) continue;
      const Int b = M - 2 * a;
      if (b == 0 || a == b) continue;
      RepeatedPartition sol{a, b};
      if (domain == Domain::Positive && sol.has_negative_part()) continue;
      out.solutions.push_back(sol);
    }
  }
  std::sort(out.solutions.begin(), out.solutions.end(),
            [](const auto& l, const auto& r) { return l.a < r.a; });
  if (out.solutions.size() > 2) {
    out.diagnostics.push_back(
        "AssumptionViolation: " + std::to_string(out.solutions.size()) +
        " repeated-part solutions; the torsion table covers at most 2");
  }
  return out;
}

Lemma1Report validate_lemma1(const Int& M, const std::vector<Triple>& parts) {
  Lemma1Report r;
  std::vector<Triple> distinct;
  for (const Triple& t : parts) {
    Triple s = t.sorted();
    if (std::find(distinct.begin(), distinct.end(), s) == distinct.end()) {
      distinct.push_back(s);
    }
  }
  if (distinct.size() < 2) {
    r.vacuous = true;
    return r;
  }

  const Rat n = distinct.front().product();
  for (const Triple& t : distinct) {
    if (t.sum() != M) {
      r.sums_consistent = false;
      r.notes.push_back("sum of " + to_string(t) + " is not " + to_string(M));
    }
    if (t.product() != n) {
      r.products_consistent = false;
      r.notes.push_back("product of " + to_string(t) + " differs from " + to_string(n));
    }
  }

  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t j = i + 1; j < distinct.size(); ++j) {
      for (const Rat& u : distinct[i].parts) {
        const auto& other = distinct[j].parts;
        if (std::find(other.begin(), other.end(), u) != other.end()) {
          r.disjoint_entries = false;
          r.notes.push_back("shared entry " + to_string(u) + " between " +
                            to_string(distinct[i]) + " and " + to_string(distinct[j]));
        }
      }
    }
  }

  if (n.get_den() != 1 || n == 0) {
    r.not_prime_power = false;
    r.omega_at_least_four = false;
    r.notes.push_back("product is not a nonzero integer");
    return r;
  }
  const Factorization f = factor(n.get_num());
  r.not_prime_power = f.size() != 1;
  r.omega_at_least_four = big_omega(f) >= 4;
  if (!r.not_prime_power) r.notes.push_back("N is a prime power");
  if (!r.omega_at_least_four) r.notes.push_back("N has fewer than four prime factors");
  return r;
}

Minimality is_minimal_pair(const Int& M, const Int& N) {
  if (N == 0) throw Error(ErrorKind::InvalidArgument, "N must be nonzero");
  Minimality out;
  Int g;
  mpz_gcd(g.get_mpz_t(), M.get_mpz_t(), N.get_mpz_t());
  if (g == 1) return out;
  for (const auto& [p, e] : factor(g)) {
    const unsigned k = valuation(N, p) / 3;
    if (k > 0) out.d *= pow(p, k);
  }
  out.minimal = out.d == 1;
  return out;
}

Point transport_point(const Int& g, const Point& p) {
  if (p.is_infinity()) return p;
  return Point(p.x() * Rat(g * g), p.y() * Rat(g * g * g));
}

std::pair<Int, Int> reduce_pair(const Int& M, const Int& N, const Int& g) {
  if (g <= 0 || M % g != 0 || N % (g * g * g) != 0) {
    throw Error(ErrorKind::BadReduction,
                "cannot reduce (" + to_string(M) + ", " + to_string(N) + ") by " +
                    to_string(g));
  }
  Int m = M / g;
  Int n = N / (g * g * g);
  // The reduced curve must map onto the original one.
  if (m * m * m != 27 * n) {
    const Curve small(m, n), big(M, N);
    for (const Point& p : {Point(0, 0), Point(0, Rat(n))}) {
      if (!is_on_curve(big, transport_point(g, p))) {
        throw Error(ErrorKind::BadReduction, "transported point left the curve");
      }
    }
    for (const Triple& t : enumerate_partitions(m, n, Domain::Nonzero)) {
      const Point p(-Rat(n) / t[0], -Rat(n) * t[1] / t[0]);
      if (!is_on_curve(small, p) || !is_on_curve(big, transport_point(g, p))) {
        throw Error(ErrorKind::BadReduction, "transported point left the curve");
      }
    }
  }
  return {m, n};
}

std::vector<MultiPartition> search_multipartitions(unsigned long m_max, unsigned k) {
  std::vector<MultiPartition> out;
  search_multipartitions(m_max, k, [&](const MultiPartition& mp) {
    out.push_back(mp);
    return true;
  });
  return out;
}

void search_multipartitions(unsigned long m_max, unsigned k,
                            const std::function<bool(const MultiPartition&)>& sink) {
  if (m_max > 100000) {
    throw Error(ErrorKind::InvalidArgument, "search bound above 100000");
  }
  if (k == 0) k = 1;
  using Entry = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>;
  std::vector<Entry> entries;
  for (std::uint64_t m = 3; m <= m_max; ++m) {
    entries.clear();
    for (std::uint64_t a = 1; 3 * a <= m; ++a) {
      for (std::uint64_t b = a; a + 2 * b <= m; ++b) {
        const std::uint64_t c = m - a - b;
        if (a == c) continue;  // then a = b = c
        entries.emplace_back(a * b * c, a, b, c);
      }
    }
    std::sort(entries.begin(), entries.end());
    for (std::size_t i = 0; i < entries.size();) {
      std::size_t j = i;
      while (j < entries.size() && std::get<0>(entries[j]) == std::get<0>(entries[i])) ++j;
      if (j - i >= k) {
        MultiPartition mp;
        mp.M = static_cast<unsigned long>(m);
        mp.N = static_cast<unsigned long>(std::get<0>(entries[i]));
        for (std::size_t t = i; t < j; ++t) {
          mp.partitions.emplace_back(Rat(static_cast<unsigned long>(std::get<1>(entries[t]))),
                                     Rat(static_cast<unsigned long>(std::get<2>(entries[t]))),
                                     Rat(static_cast<unsigned long>(std::get<3>(entries[t]))));
        }
        if (!sink(mp)) return;
      }
      i = j;
    }
  }
}

bool is_cubic_degenerate(const Triple& t) {
  const Triple s = t.sorted();
  const Rat& d1 = s[2];
  const Rat& d2 = s[1];
  const Rat& d3 = s[0];
  const Rat u = d2 - d3;
  const Rat v = d1 - d2;
  return d1 * u * u * u == d3 * v * v * v;
}

}  // namespace emn
