#pragma once

// Ordered rational triples (d1, d2, d3) with sum M and product N versus
// points of E_(M,N) away from {O, (0,0), (0,N)}:
//
//   (d1, d2, d3)  ->  (-N/d1, -N d2/d1)
//   (x, y)        ->  (-N/x, y/x, -x^2/y)

#include <vector>

#include "emn/curve.hpp"
#include "emn/partitions.hpp"

namespace emn {

/// Throws DomainError when the triple has a zero part or the wrong sum/product.
Point partition_to_point(const Curve& c, const Triple& t);

/// Throws ExceptionalPoint for O, (0,0) and (0,N).
Triple point_to_partition(const Curve& c, const Point& p);

/// The six orderings of t. The ordering (d_k, d_j, d_i) maps to
/// P_ij = (-d_i d_j, -d_i d_j^2).
std::vector<Triple> orderings(const Triple& t);

/// Image of a sorted partition (x <= y <= z) as (-N : -N x : y), i.e. the
/// ordering (y, x, z). This is the representative used in reports.
Point partition_image(const Curve& c, const Triple& sorted_triple);

}  // namespace emn
