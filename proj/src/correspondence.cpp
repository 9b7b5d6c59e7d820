#include "emn/correspondence.hpp"

#include "emn/errors.hpp"

namespace emn {

Point partition_to_point(const Curve& c, const Triple& t) {
  for (const Rat& d : t.parts) {
    if (d == 0) throw Error(ErrorKind::DomainError, "triple has a zero part");
  }
  if (t.sum() != c.M() || t.product() != c.N()) {
    throw Error(ErrorKind::DomainError,
                to_string(t) + " does not have sum " + to_string(c.M()) +
                    " and product " + to_string(c.N()));
  }
  const Rat n(c.N());
  return Point(-n / t[0], -n * t[1] / t[0]);
}

Triple point_to_partition(const Curve& c, const Point& p) {
  if (p.is_infinity() || p.x() == 0 || p.y() == 0) {
    throw Error(ErrorKind::ExceptionalPoint,
                to_string(p) + " has a zero projective coordinate");
  }
  const Rat n(c.N());
  return Triple(-n / p.x(), p.y() / p.x(), -p.x() * p.x() / p.y());
}

std::vector<Triple> orderings(const Triple& t) {
  const auto& d = t.parts;
  return {Triple(d[0], d[1], d[2]), Triple(d[0], d[2], d[1]),
          Triple(d[1], d[0], d[2]), Triple(d[1], d[2], d[0]),
          Triple(d[2], d[0], d[1]), Triple(d[2], d[1], d[0])};
}

Point partition_image(const Curve& c, const Triple& sorted_triple) {
  return partition_to_point(
      c, Triple(sorted_triple[1], sorted_triple[0], sorted_triple[2]));
}

}  // namespace emn
