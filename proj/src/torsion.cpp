#include "emn/torsion.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "emn/correspondence.hpp"
#include "emn/errors.hpp"

namespace emn {

const char* to_string(TorsionKind k) noexcept {
  switch (k) {
    case TorsionKind::Z3: return "Z3";
    case TorsionKind::Z6: return "Z6";
    case TorsionKind::Z2xZ6: return "Z2xZ6";
  }
  return "?";
}

std::size_t group_order(TorsionKind k) noexcept {
  switch (k) {
    case TorsionKind::Z3: return 3;
    case TorsionKind::Z6: return 6;
    case TorsionKind::Z2xZ6: return 12;
  }
  return 0;
}

std::optional<int> point_order(const Curve& c, const Point& p) {
  Point q = p;
  for (int k = 1; k <= 12; ++k) {
    if (q.is_infinity()) return k;
    q = add(c, q, p);
  }
  return std::nullopt;
}

std::vector<Rat> two_torsion_x(const Curve& c) {
  // With t = 4x the cubic becomes t^3 + M^2 t^2 + 8MN t + 16N^2, monic, so
  // rational roots are integers dividing 16N^2.
  const Int b = c.M() * c.M();
  const Int cc = 8 * c.M() * c.N();
  const Int d = 16 * c.N() * c.N();
  std::set<Rat> roots;
  Factorization f = factor(c.N());
  for (auto& pp : f) pp.exponent *= 2;
  auto two = std::find_if(f.begin(), f.end(), [](const auto& pp) { return pp.prime == 2; });
  if (two != f.end()) {
    two->exponent += 4;
  } else {
    f.insert(f.begin(), PrimePower{2, 4});
  }
  for (const Int& dv : divisors(f)) {
    for (const Int& t : {Int(-dv), dv}) {
      if (((t + b) * t + cc) * t + d == 0) roots.insert(Rat(t, 4));
    }
  }
  std::vector<Rat> out;
  for (Rat r : roots) {
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

Point two_torsion_point(const Curve& c, const Rat& x) {
  return Point(x, (c.M() * x + c.N()) / 2);
}

std::vector<Point> order_six_subgroup(const RepeatedPartition& s) {
  const Rat a(s.a), b(s.b);
  std::vector<Point> pts = {Point(-a * b, -a * a * b), Point(0, 0),
                            Point(-a * a, -a * a * a), Point(0, a * a * b),
                            Point(-a * b, -a * b * b), Point::infinity()};
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<Point> generated_subgroup(const Curve& c, const std::vector<Point>& gens) {
  std::set<Point> seen{Point::infinity()};
  std::deque<Point> todo{Point::infinity()};
  while (!todo.empty()) {
    const Point p = todo.front();
    todo.pop_front();
    for (const Point& g : gens) {
      Point q = add(c, p, g);
      if (seen.insert(q).second) {
        if (seen.size() > 16) {
          throw Error(ErrorKind::InconsistentTorsion,
                      "generated subgroup exceeds the largest torsion group");
        }
        todo.push_back(q);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

TorsionKind kind_from_count(std::size_t n) {
  if (n == 0) return TorsionKind::Z3;
  if (n == 1) return TorsionKind::Z6;
  return TorsionKind::Z2xZ6;
}

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error(ErrorKind::InconsistentTorsion, what);
}

}  // namespace

TorsionClass torsion_subgroup(const Int& M, const Int& N) {
  const Curve c(M, N);
  TorsionClass out;
  out.s_set = repeated_part_solutions(M, N, Domain::Nonzero);
  out.two_torsion_x = two_torsion_x(c);
  for (const auto& d : out.s_set.diagnostics) out.warnings.push_back(d);

  for (const Triple& t : enumerate_partitions(M, N, Domain::Positive)) {
    if (t.has_distinct_parts() && !is_cubic_degenerate(t)) {
      out.hypothesis_verified = true;
      break;
    }
  }

  const Point t3(0, 0);
  if (point_order(c, t3) != 3) inconsistent("(0,0) is not of order 3");

  const std::size_t s_count = out.s_set.solutions.size();
  const std::size_t two_count = out.two_torsion_x.size();
  TorsionKind by_s = kind_from_count(s_count);
  TorsionKind by_two = two_count == 0   ? TorsionKind::Z3
                       : two_count == 1 ? TorsionKind::Z6
                                        : TorsionKind::Z2xZ6;
  if (by_s != by_two) {
    const std::string msg = std::string("#S gives ") + to_string(by_s) +
                            " but the rational 2-torsion gives " + to_string(by_two);
    if (out.hypothesis_verified) inconsistent(msg);
    out.warnings.push_back(msg + "; using the 2-torsion count");
  }
  out.kind = out.hypothesis_verified ? by_s : by_two;
  if (!out.hypothesis_verified) {
    out.warnings.push_back(
        "unverified-hypothesis: no positive distinct-parts partition with "
        "d1(d2-d3)^3 != d3(d1-d2)^3; larger torsion is not ruled out");
  }

  // Generators: an order-6 point from S when available, else (0,0) plus a
  // 2-torsion point; for Z2xZ6 add a 2-torsion point outside <gen>.
  if (out.kind == TorsionKind::Z3) {
    out.generators = {t3};
  } else {
    Point gen6;
    if (s_count > 0) {
      const auto& s = out.s_set.solutions.front();
      gen6 = Point(-Rat(s.a * s.b), -Rat(s.a * s.a * s.b));
    } else {
      gen6 = add(c, t3, two_torsion_point(c, out.two_torsion_x.front()));
    }
    if (!is_on_curve(c, gen6) || point_order(c, gen6) != 6) {
      inconsistent(to_string(gen6) + " is not a point of order 6");
    }
    out.generators = {gen6};
    if (out.kind == TorsionKind::Z2xZ6) {
      const Point half = scalar_mul(c, 3, gen6);
      for (const Rat& x : out.two_torsion_x) {
        const Point t2 = two_torsion_point(c, x);
        if (t2 != half) {
          out.generators.push_back(t2);
          break;
        }
      }
    }
  }

  out.all_points = generated_subgroup(c, out.generators);
  if (out.all_points.size() != group_order(out.kind)) {
    inconsistent("subgroup has " + std::to_string(out.all_points.size()) +
                 " points, expected " + std::to_string(group_order(out.kind)));
  }
  for (const Point& p : out.all_points) {
    if (!is_on_curve(c, p)) inconsistent(to_string(p) + " is not on the curve");
    const auto ord = point_order(c, p);
    const int exponent = out.kind == TorsionKind::Z3 ? 3 : 6;
    if (!ord || exponent % *ord != 0) {
      inconsistent(to_string(p) + " has order not dividing " + std::to_string(exponent));
    }
  }
  const std::set<Point> members(out.all_points.begin(), out.all_points.end());
  for (const Point& p : {Point::infinity(), t3, Point(0, Rat(N))}) {
    if (!members.count(p)) inconsistent("order-3 subgroup missing " + to_string(p));
  }
  std::size_t two_in_group = 0;
  for (const Point& p : out.all_points) {
    if (point_order(c, p) == 2) ++two_in_group;
  }
  if (two_in_group != two_count) {
    inconsistent("group has " + std::to_string(two_in_group) +
                 " points of order 2 but the 2-torsion cubic has " +
                 std::to_string(two_count) + " rational roots");
  }
  for (const auto& s : out.s_set.solutions) {
    const auto six = order_six_subgroup(s);
    const auto gen = generated_subgroup(c, {Point(-Rat(s.a * s.b), -Rat(s.a * s.a * s.b))});
    if (gen != six) {
      inconsistent("order-6 subgroup of (a,a,b) = (" + to_string(s.a) + "," +
                   to_string(s.a) + "," + to_string(s.b) + ") does not match");
    }
    for (const Point& p : six) {
      if (!members.count(p)) inconsistent(to_string(p) + " missing from torsion");
    }
  }
  // Partition images of finite order must already be in the group. A
  // cubic-degenerate partition gives points of order 4 and 12 on E(37,720),
  // which no kind here can represent.
  for (const Triple& t : enumerate_partitions(M, N, Domain::Positive)) {
    for (const Triple& o : orderings(t)) {
      const Point p = partition_to_point(c, o);
      if (members.count(p)) continue;
      if (const auto ord = point_order(c, p)) {
        inconsistent("partition image " + to_string(p) + " has order " +
                     std::to_string(*ord) + " outside the " + to_string(out.kind) +
                     " classification");
      }
    }
  }
  return out;
}

}  // namespace emn
