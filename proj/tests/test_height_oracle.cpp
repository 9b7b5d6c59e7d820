#include <doctest.h>

#include <cmath>

#include "emn/heights.hpp"
#include "support/oracles.hpp"

using namespace emn;

// h(x(2^12 P)) / 4^12 from exact rational doubling. The truncation error is
// bounded by |h - hhat| / 4^12; on these points it stays below 1e-6.
TEST_CASE("local decomposition matches the doubling limit") {
  struct Case {
    const char* M;
    const char* N;
    long x, y;
  };
  const Case cases[] = {
      {"35", "1260", -126, -882},        {"35", "1260", -84, -1176},
      {"21", "96", -32, -64},
  };
  for (const auto& k : cases) {
    const Curve c(Int(k.M), Int(k.N));
    const Point p(k.x, k.y);
    REQUIRE(is_on_curve(c, p));
    const double expect = canonical_height(c, p).to_double();
    const double est = oracle::doubling_limit(c, p, 12).first;
    INFO("M = " << k.M << ", P = " << p);
    CHECK(std::fabs(est - expect) < 1e-6);
  }
}
