#include <doctest.h>

#include <functional>

#include "emn/correspondence.hpp"
#include "emn/errors.hpp"
#include "emn/families.hpp"
#include "emn/heights.hpp"
#include "emn/torsion.hpp"

using namespace emn;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

Triple tri(long a, long b, long c) { return Triple(a, b, c); }

void check_instance(const FamilyInstance& f) {
  const Curve c(f.M, f.N);
  REQUIRE(f.points.size() == f.triples.size());
  for (std::size_t i = 0; i < f.triples.size(); ++i) {
    CHECK(f.triples[i].sum() == f.M);
    CHECK(f.triples[i].product() == f.N);
    CHECK(is_on_curve(c, f.points[i]));
    CHECK(partition_to_point(c, f.point_orderings[i]) == f.points[i]);
    CHECK(f.point_orderings[i].sorted() == f.triples[i].sorted());
  }
}

}  // namespace

TEST_CASE("family_two") {
  auto f = family_two(1, 2, 3, 4);
  CHECK(f.M == 35);
  CHECK(f.N == 1260);
  CHECK(f.triples == std::vector{tri(7, 10, 18), tri(14, 15, 6)});
  CHECK(f.points == std::vector{Point(-126, -882), Point(-84, -1176)});
  check_instance(f);

  f = family_two(1, 2, 3, 5);
  CHECK(f.M == 41);
  CHECK(f.N == 2016);
  CHECK(f.triples == std::vector{tri(8, 12, 21), tri(16, 18, 7)});

  CHECK(kind_of([] { family_two(1, 1, 1, 1); }) == ErrorKind::Degenerate);
  CHECK(kind_of([] { family_two(1, 1, 1, 1, true); }) == ErrorKind::Degenerate);
  CHECK(kind_of([] { family_two(0, 1, 2, 3); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("family_three") {
  auto f = family_three(2, 2, 3);
  CHECK(f.params == std::vector<Int>{2, 2, 3, 12, 9, 39});
  CHECK(f.M == 159);
  CHECK(f.N == 50544);
  CHECK(f.triples == std::vector{tri(18, 24, 117), tri(108, 12, 39), tri(9, 72, 78)});
  CHECK(f.points ==
        std::vector{Point(-2106, -37908), Point(-468, -5616), Point(-702, -6318)});
  check_instance(f);

  CHECK(kind_of([] { family_three(1, 1, 1); }) == ErrorKind::Degenerate);
  CHECK(kind_of([] { family_three(2, 3, 2); }) == ErrorKind::Degenerate);
  f = family_three(2, 3, 2, true);
  CHECK(f.M == 65);
  CHECK(f.N == 1008);
  CHECK(f.params == std::vector<Int>{2, 3, 2, 1, 3, 28});
  CHECK_FALSE(f.warnings.empty());
  check_instance(f);
}

TEST_CASE("family_powers") {
  auto f = family_powers(2, 2);
  CHECK(f.params.back() == 3);
  CHECK(f.M == 21);
  CHECK(f.N == 96);
  CHECK(f.triples == std::vector{tri(1, 12, 8), tri(3, 2, 16)});
  CHECK(f.points == std::vector{Point(-96, -1152), Point(-32, -64)});
  check_instance(f);

  f = family_powers(3, 2);
  CHECK(f.params.back() == 7);
  CHECK(f.M == 91);
  CHECK(f.N == 1701);
  CHECK(f.triples == std::vector{tri(1, 63, 27), tri(7, 3, 81)});

  CHECK(kind_of([] { family_powers(1, 2); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { family_powers(2, 1); }) == ErrorKind::InvalidArgument);
  for (long q = 2; q <= 5; ++q) {
    for (unsigned long k = 2; k <= 4; ++k) check_instance(family_powers(q, k));
  }
}

TEST_CASE("parameter grid p, q, r, s <= 6") {
  std::size_t two = 0, three = 0;
  auto infinite_unless_degenerate = [](const FamilyInstance& f) {
    const Curve c(f.M, f.N);
    for (std::size_t i = 0; i < f.points.size(); ++i) {
      const Triple& t = f.triples[i];
      if (!t.has_distinct_parts() || is_cubic_degenerate(t)) continue;
      CHECK_FALSE(point_order(c, f.points[i]).has_value());
    }
  };
  for (long p = 1; p <= 6; ++p) {
    for (long q = 1; q <= 6; ++q) {
      for (long r = 1; r <= 6; ++r) {
        try {
          const auto f = family_three(p, q, r);
          check_instance(f);
          infinite_unless_degenerate(f);
          ++three;
        } catch (const Error& e) {
          CHECK(e.kind() == ErrorKind::Degenerate);
        }
        for (long s = 1; s <= 6; ++s) {
          try {
            const auto f = family_two(p, q, r, s);
            check_instance(f);
            infinite_unless_degenerate(f);
            // Equal sums and equal sums of cubes after the change of variables.
            std::array<Rat, 3> a = inverse_cubes_transform(f.triples[0].parts);
            std::array<Rat, 3> b = inverse_cubes_transform(f.triples[1].parts);
            CHECK(a[0] + a[1] + a[2] == b[0] + b[1] + b[2]);
            const Rat ca = a[0] * a[0] * a[0] + a[1] * a[1] * a[1] + a[2] * a[2] * a[2];
            const Rat cb = b[0] * b[0] * b[0] + b[1] * b[1] * b[1] + b[2] * b[2] * b[2];
            CHECK(ca == cb);
            ++two;
          } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Degenerate);
          }
        }
      }
    }
  }
  CHECK(two > 500);
  CHECK(three > 50);
}

TEST_CASE("cubes_transform") {
  using T = std::array<Rat, 3>;
  CHECK(cubes_transform(T{1, 1, 1}) == T{1, 1, 1});
  const T X = cubes_transform(T{1, 5, 6});
  CHECK(X == T{Rat(11, 2), Rat(7, 2), 3});
  const Rat s = X[0] + X[1] + X[2];
  CHECK(1 + 125 + 216 == 342);
  CHECK(s * s * s - 24 * X[0] * X[1] * X[2] == 342);
  CHECK(X[0] * X[1] * X[2] == Rat(231, 4));

  unsigned long long state = 12345;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    Rat q(static_cast<long>(state >> 40) - (1L << 23), static_cast<long>((state >> 20) & 1023) + 1);
    q.canonicalize();
    return q;
  };
  for (int i = 0; i < 200; ++i) {
    const T v{next(), next(), next()};
    CHECK(inverse_cubes_transform(cubes_transform(v)) == v);
    const T t = cubes_transform(v);
    const Rat sum = t[0] + t[1] + t[2];
    CHECK(sum == v[0] + v[1] + v[2]);
    CHECK(v[0] * v[0] * v[0] + v[1] * v[1] * v[1] + v[2] * v[2] * v[2] ==
          sum * sum * sum - 24 * t[0] * t[1] * t[2]);
  }
}

TEST_CASE("specializations reach the stated ranks") {
  const auto two = family_two(1, 2, 3, 4);
  CHECK(rank_lower_bound(Curve(two.M, two.N), two.points).rank_lower_bound == 2);
  const auto three = family_three(2, 2, 3);
  CHECK(rank_lower_bound(Curve(three.M, three.N), three.points).rank_lower_bound == 3);
}
