#pragma once

// Curves and points shared by the property suites.

#include <vector>

#include "emn/correspondence.hpp"
#include "emn/curve.hpp"
#include "emn/partitions.hpp"

namespace emn::corpus {

struct Entry {
  Int M;
  Int N;
};

inline std::vector<Entry> curves() {
  return {{14, 40},  {13, 36},   {35, 1260}, {7, 5},     {21, 96},
          {41, 2016}, {159, 50544}, {65, 1008}, {91, 1701}, {Int(17116), Int("92021529600")}};
}

/// All six ordered images of every distinct-parts partition. For the large
/// curve only the first `cap` partitions are used.
inline std::vector<Point> points(const Curve& c, std::size_t cap = 3) {
  std::vector<Point> out;
  std::size_t used = 0;
  for (const Triple& t : enumerate_partitions(c.M(), c.N())) {
    if (!t.has_distinct_parts()) continue;
    if (c.N() > 1000000 && used++ >= cap) break;
    for (const Triple& o : orderings(t)) out.push_back(partition_to_point(c, o));
  }
  return out;
}

}  // namespace emn::corpus
