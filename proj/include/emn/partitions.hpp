#pragma once

// Triple partitions of M with product N, the repeated-part set S_(M,N),
// minimality of the pair (M, N) and the multi-partition search.

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "emn/arith.hpp"
#include "emn/curve.hpp"

namespace emn {

enum class Domain { Positive, Nonzero };

const char* to_string(Domain d) noexcept;
Domain parse_domain(const std::string& text);

/// Ordered triple of nonzero rationals. Enumeration output is integral and
/// sorted ascending; the correspondence module gives meaning to the order.
struct Triple {
  std::array<Rat, 3> parts;

  Triple() = default;
  Triple(Rat a, Rat b, Rat c) : parts{std::move(a), std::move(b), std::move(c)} {
    for (auto& p : parts) p.canonicalize();
  }

  const Rat& operator[](std::size_t i) const { return parts[i]; }
  Rat sum() const { return parts[0] + parts[1] + parts[2]; }
  Rat product() const { return parts[0] * parts[1] * parts[2]; }

  /// Parts sorted ascending.
  Triple sorted() const;
  bool has_distinct_parts() const;
  bool is_integral() const;

  friend bool operator==(const Triple& a, const Triple& b) { return a.parts == b.parts; }
  friend bool operator<(const Triple& a, const Triple& b) { return a.parts < b.parts; }
};

std::string to_string(const Triple& t);

/// All unordered triples (sorted ascending) of integers in `domain` with sum M
/// and product N, excluding (d, d, d). Sorted lexicographically.
std::vector<Triple> enumerate_partitions(const Int& M, const Int& N,
                                         Domain domain = Domain::Positive);

/// An element (a, a, b) of S_(M,N): 2a + b = M, a^2 b = N, a != b.
struct RepeatedPartition {
  Int a;
  Int b;
  bool has_negative_part() const { return a < 0 || b < 0; }
  friend bool operator==(const RepeatedPartition&, const RepeatedPartition&) = default;
};

struct RepeatedPartResult {
  std::vector<RepeatedPartition> solutions;  // ascending in a
  std::vector<std::string> diagnostics;      // AssumptionViolation etc.

  /// Solutions with both entries positive.
  std::size_t positive_count() const;
};

/// Integer roots a of 2a^3 - M a^2 + N = 0 with b = M - 2a and a != b. Two
/// solutions that share an entry could be treated as one class under a
/// coarser equivalence; here each distinct root counts once. With Domain::Positive
/// only solutions with a, b > 0 are kept.
RepeatedPartResult repeated_part_solutions(const Int& M, const Int& N,
                                           Domain domain = Domain::Nonzero);

struct Lemma1Report {
  bool vacuous = false;             // fewer than two distinct partitions
  bool disjoint_entries = true;     // (a)
  bool not_prime_power = true;      // (b)
  bool omega_at_least_four = true;  // (c)
  bool sums_consistent = true;      // every triple sums to M
  bool products_consistent = true;  // every triple has the first one's product
  std::vector<std::string> notes;

  bool all_pass() const {
    return disjoint_entries && not_prime_power && omega_at_least_four &&
           sums_consistent && products_consistent;
  }
};

/// Checks the three necessary conditions on multi-partition pairs: no entry
/// shared between distinct partitions, N not a prime power, and N having at
/// least four prime factors with multiplicity. N is the first triple's product.
Lemma1Report validate_lemma1(const Int& M, const std::vector<Triple>& parts);

struct Minimality {
  bool minimal = true;
  Int d = 1;  // product of p^floor(v_p(N)/3) over primes p | M
};

Minimality is_minimal_pair(const Int& M, const Int& N);

/// (M/g, N/g^3). Throws BadReduction unless g | M and g^3 | N.
std::pair<Int, Int> reduce_pair(const Int& M, const Int& N, const Int& g);

/// Image of a point of E_(M/g, N/g^3) on E_(M,N): (x, y) -> (g^2 x, g^3 y).
Point transport_point(const Int& g, const Point& p);

struct MultiPartition {
  Int M;
  Int N;
  std::vector<Triple> partitions;
};

/// Every (M, N) with M <= m_max having at least k distinct positive
/// partitions with product N, ordered by (M, N). m_max is capped at 10^5.
std::vector<MultiPartition> search_multipartitions(unsigned long m_max, unsigned k);

/// Streaming form: hits are passed to `sink` in (M, N) order as they are
/// found; returning false from the sink stops the search.
void search_multipartitions(unsigned long m_max, unsigned k,
                            const std::function<bool(const MultiPartition&)>& sink);

/// True iff d1 (d2 - d3)^3 = d3 (d1 - d2)^3 for the parts sorted d1 > d2 > d3,
/// the case where the six partition images need not be of infinite order.
bool is_cubic_degenerate(const Triple& t);

}  // namespace emn
