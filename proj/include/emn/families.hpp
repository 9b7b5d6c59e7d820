#pragma once

// Parametric pairs (M, N) with two or three partitions of equal product,
// together with the points whose independence gives the rank bounds, and the
// change of variables between equal products and equal sums of cubes.

#include <array>
#include <string>
#include <vector>

#include "emn/curve.hpp"
#include "emn/partitions.hpp"

namespace emn {

struct FamilyInstance {
  std::string kind;             // "two", "three", "powers"
  std::vector<Int> params;
  Int M;
  Int N;
  std::vector<Triple> triples;  // as produced by the parametrization
  std::vector<Point> points;    // designated points, one per triple
  std::vector<Triple> point_orderings;  // ordering mapped to each point
  Minimality minimality;
  std::vector<std::string> warnings;
};

/// X = p(r+s), Y = q(p+s), Z = r(q+s); U = q(r+s), V = r(p+s), W = p(q+s).
/// Points (-N : -N X : Y) and (-N : -N U : V).
FamilyInstance family_two(const Int& p, const Int& q, const Int& r, const Int& s,
                          bool allow_degenerate = false);

/// s = pqr^2 - p^2 qr + p^2 - p - r + 1, w = qr^2 - qp - qr + p + q - r,
/// z = pq^2 r^2 - pq^2 r - pqr + p + q - 1; triples (pw, qs, rz), (pqrw, s, z),
/// (w, qrs, pz); points (-prwz, -p^2 r w^2 z), (-sz, -s^2 z), (-pwz, -p w^2 z).
FamilyInstance family_three(const Int& p, const Int& q, const Int& r,
                            bool allow_degenerate = false);

/// p = (q^(2k-1) + 1)/(q + 1); triples (1, pq^2, q^(2k-1)) and (p, q, q^(2k)).
FamilyInstance family_powers(const Int& q, unsigned long k, bool allow_degenerate = false);

/// (x, y, z) -> ((y+z)/2, (x+z)/2, (x+y)/2).
std::array<Rat, 3> cubes_transform(const std::array<Rat, 3>& xyz);
/// (X, Y, Z) -> (-X+Y+Z, X-Y+Z, X+Y-Z).
std::array<Rat, 3> inverse_cubes_transform(const std::array<Rat, 3>& XYZ);

}  // namespace emn
