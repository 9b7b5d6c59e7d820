#pragma once

#include <optional>
#include <string>
#include <vector>

#include "emn/curve.hpp"
#include "emn/partitions.hpp"

namespace emn {

enum class TorsionKind { Z3, Z6, Z2xZ6 };

const char* to_string(TorsionKind k) noexcept;
std::size_t group_order(TorsionKind k) noexcept;

struct TorsionClass {
  TorsionKind kind = TorsionKind::Z3;
  std::vector<Point> generators;
  std::vector<Point> all_points;  // sorted, includes O
  RepeatedPartResult s_set;
  std::vector<Rat> two_torsion_x;
  // A positive partition with distinct parts that is not cubic-degenerate
  // exists, so the structure theorem applies without extra assumptions.
  bool hypothesis_verified = false;
  std::vector<std::string> warnings;
};

/// Order of p if it is at most 12, otherwise std::nullopt (infinite order:
/// no rational point over Q has finite order above 12).
std::optional<int> point_order(const Curve& c, const Point& p);

/// Rational roots x of 4x^3 + M^2 x^2 + 2MN x + N^2, ascending. Each gives
/// the 2-torsion point (x, (Mx + N)/2).
std::vector<Rat> two_torsion_x(const Curve& c);

Point two_torsion_point(const Curve& c, const Rat& x);

/// The six points of the order-6 subgroup attached to (a, a, b):
/// (-ab,-a^2 b), (0,0), (-a^2,-a^3), (0,a^2 b), (-ab,-ab^2), O.
std::vector<Point> order_six_subgroup(const RepeatedPartition& s);

/// Subgroup generated by the given points (must be torsion). Sorted.
std::vector<Point> generated_subgroup(const Curve& c, const std::vector<Point>& gens);

/// Classifies E_(M,N)(Q)_tors by the number of repeated-part solutions and
/// cross-checks against point orders, closure and the rational 2-torsion.
/// Throws InconsistentTorsion when the checks disagree with the count.
TorsionClass torsion_subgroup(const Int& M, const Int& N);

}  // namespace emn
