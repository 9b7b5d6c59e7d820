// Acceptance run: one PASS/FAIL line per criterion, with timings.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "emn/correspondence.hpp"
#include "emn/families.hpp"
#include "emn/heights.hpp"
#include "emn/report.hpp"
#include "emn/torsion.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace emn;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::string failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      failures += (ok ? "" : "; ") + what;
      ok = false;
    }
  }
  std::string text() const {
    return ok ? detail.str() : detail.str() + "; failed: " + failures;
  }
};

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(EMN_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

double rel_err(const Real& got, double want) { return std::fabs(got.to_double() / want - 1); }

double rel_err(const std::string& got, double want) { return std::fabs(std::stod(got) / want - 1); }

json triples(std::initializer_list<std::array<const char*, 3>> ts) {
  json j = json::array();
  for (const auto& t : ts) j.push_back({t[0], t[1], t[2]});
  return j;
}

int failures = 0;

void criterion(int id, const std::string& name, double limit_s,
               const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream lim;
  lim << "runtime " << secs << " s exceeds " << limit_s << " s";
  o.require(secs < limit_s, lim.str());
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << "  " << id << ". " << name << "  [" << secs
            << " s]  " << o.text() << std::endl;
}

void rank2_regulator(Outcome& o) {
  const CliRun r = cli("analyze 35 1260 --json");
  o.require(r.code == 0, "analyze exit code");
  const json j = json::parse(r.out);
  o.require(j.at("partitions") == triples({{"6", "14", "15"}, {"7", "10", "18"}}),
            "partitions differ");
  o.require(j.at("torsion").at("kind") == "Z3", "torsion is not Z/3");
  o.require(j.at("rank_lower_bound") == 2, "rank lower bound is not 2");
  const double report_err = rel_err(j.at("regulator").get<std::string>(), 1.70464760105805);
  o.require(report_err < 1e-6, "report regulator off");
  const Curve c(35, 1260);
  const Real det = determinant(gram_matrix(c, {Point(-126, -882), Point(-84, -1176)}));
  o.require(rel_err(det, 1.70464760105805) < 1e-6, "Gram determinant off");
  o.detail << "det = " << det.str(15) << " (rel err " << rel_err(det, 1.70464760105805) << ")";
}

void rank3_regulator(Outcome& o) {
  const CliRun r = cli("family three 2 2 3 --json");
  o.require(r.code == 0, "family exit code");
  const json j = json::parse(r.out);
  const json& f = j.at("family");
  o.require(f.at("M") == "159" && f.at("N") == "50544", "M, N differ");
  o.require(f.at("triples") ==
                triples({{"18", "24", "117"}, {"108", "12", "39"}, {"9", "72", "78"}}),
            "triples differ");
  o.require(cli("family three 2 2 3").out.find("159 = 18+24+117 = 108+12+39 = 9+72+78") !=
                std::string::npos,
            "text rendering of the triples");
  o.require(j.at("analysis").at("rank_lower_bound") == 3, "rank lower bound is not 3");
  const Curve c(159, 50544);
  const Real det = determinant(
      gram_matrix(c, {Point(-2106, -37908), Point(-468, -5616), Point(-702, -6318)}));
  o.require(rel_err(det, 4.55758994382846) < 1e-6, "Gram determinant off");
  o.require(rel_err(j.at("analysis").at("regulator").get<std::string>(), 4.55758994382846) < 1e-6,
            "report regulator off");
  o.detail << "det = " << det.str(15) << " (rel err " << rel_err(det, 4.55758994382846) << ")";
}

void census_17116(Outcome& o) {
  const CliRun r = cli("analyze 17116 92021529600 --json");
  o.require(r.code == 0, "analyze exit code");
  const json j = json::parse(r.out);
  const json listed = triples({{"1512", "7700", "7904"},  {"1520", "7280", "8316"},
                               {"1540", "6840", "8736"},  {"1596", "6160", "9360"},
                               {"1716", "5320", "10080"}, {"1755", "5120", "10241"},
                               {"1760", "5096", "10260"}, {"1792", "4950", "10374"},
                               {"2016", "4180", "10920"}, {"2128", "3900", "11088"},
                               {"2200", "3744", "11172"}, {"2548", "3168", "11400"},
                               {"2736", "2940", "11440"}});
  o.require(j.at("partitions") == listed, "partitions differ from the 13 listed");
  o.require(j.at("torsion").at("kind") == "Z3", "torsion is not Z/3");
  o.require(j.at("rank_lower_bound").get<unsigned>() >= 6, "report rank lower bound below 6");
  // Images (-N : -N x_i : y_i) of the first six listed partitions.
  const Curve c(17116, Int("92021529600"));
  std::vector<Point> pts;
  for (std::size_t i = 0; i < 6; ++i) {
    const json& t = listed[i];
    pts.push_back(partition_image(c, Triple(Rat(t[0].get<std::string>()),
                                            Rat(t[1].get<std::string>()),
                                            Rat(t[2].get<std::string>()))));
  }
  const Real det = determinant(gram_matrix(c, pts));
  o.require(det.to_double() > 1e-6, "6x6 Gram determinant not above 1e-6");
  o.detail << "13 partitions, Z/3, det(first six) = " << det.str(10)
           << ", rank >= 6 (rank = 6 itself not asserted)";
}

void torsion_trichotomy(Outcome& o) {
  struct Case {
    long M, N;
    TorsionKind kind;
    std::size_t two_torsion;
  };
  const Case cases[] = {{35, 1260, TorsionKind::Z3, 0},
                        {14, 40, TorsionKind::Z6, 1},
                        {7, 5, TorsionKind::Z6, 1},
                        {13, 36, TorsionKind::Z2xZ6, 3}};
  double worst = 0;
  for (const auto& k : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto t = torsion_subgroup(k.M, k.N);
    const Curve c(k.M, k.N);
    std::ostringstream id;
    id << "(" << k.M << "," << k.N << ")";
    o.require(t.kind == k.kind, id.str() + " kind");
    o.require(t.two_torsion_x.size() == k.two_torsion, id.str() + " 2-torsion count");
    o.require(t.all_points.size() == group_order(k.kind), id.str() + " group size");
    std::size_t order_two = 0;
    for (const Point& p : t.all_points) {
      const auto ord = point_order(c, p);
      o.require(ord && group_order(k.kind) % *ord == 0, id.str() + " point order");
      if (ord == 2) ++order_two;
    }
    o.require(order_two == k.two_torsion, id.str() + " points of order 2");
    for (const Point& g : t.generators) {
      o.require(point_order(c, g).has_value(), id.str() + " generator order");
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    worst = std::max(worst, secs);
    o.require(secs < 1.0, id.str() + " slower than 1 s");
  }
  o.detail << "Z3, Z6, Z6, Z2xZ6 with 0/1/1/3 rational 2-torsion points; slowest " << worst
           << " s";
}

void property_suites(Outcome& o) {
  // Doubling and addition identities of partition images, M <= 60.
  std::size_t identities = 0, closed_form_holds = 0, closed_form_negated = 0;
  search_multipartitions(60, 1, [&](const MultiPartition& mp) {
    if (mp.M * mp.M * mp.M == 27 * mp.N) return true;
    const Curve c(mp.M, mp.N);
    for (const Triple& t : mp.partitions) {
      if (!t.has_distinct_parts()) continue;
      auto P = [&](int i, int j) { return Point(-t[i] * t[j], -t[i] * t[j] * t[j]); };
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          const int k = 3 - i - j;
          const Point pij = P(i, j);
          const Rat &di = t[i], &dj = t[j], &dk = t[k];
          const Point printed((di * dj * (di - dk) * (dj - dk)) / ((di - dj) * (di - dj)),
                              (di * dj * dj * (di - dk) * (di - dk) * (di - dk)) /
                                  ((di - dj) * (di - dj) * (di - dj)));
          const bool ok = is_on_curve(c, pij) && add(c, pij, P(j, i)).is_infinity() &&
                          add(c, pij, P(i, k)) == Point(0, 0) &&
                          add(c, pij, P(k, j)) == Point(0, Rat(mp.N));
          o.require(ok, "additive identity on " + to_string(t));
          const Point twice = scalar_mul(c, 2, pij);
          if (twice == printed) {
            ++closed_form_holds;
          } else if (negate(c, twice) == printed) {
            ++closed_form_negated;
          } else {
            o.require(false, "closed form unrelated to 2P_ij on " + to_string(t));
          }
        }
      }
      ++identities;
    }
    return true;
  });

  // The reference 2P_ij is checked literally. Under the group law it equals
  // -2P_ij = 2P_ji (y-coordinate of the other tangent point), so this part
  // of the criterion cannot hold; the count makes the discrepancy visible.
  o.require(closed_form_negated == 0,
            "reference closed form 2P_ij matches -2P_ij, not 2P_ij, in " +
                std::to_string(closed_form_negated) + " of " +
                std::to_string(closed_form_holds + closed_form_negated) + " cases");

  // Sum-of-pairs bound on every search hit, M <= 200.
  std::size_t lemma = 0;
  search_multipartitions(200, 2, [&](const MultiPartition& mp) {
    o.require(validate_lemma1(mp.M, mp.partitions).all_pass(),
              "sum-of-pairs bound on M = " + to_string(mp.M));
    ++lemma;
    return true;
  });

  // Correspondence round trip on the corpus.
  std::size_t trips = 0;
  for (const auto& [M, N] : corpus::curves()) {
    const Curve c(M, N);
    for (const Triple& t : enumerate_partitions(M, N)) {
      for (const Triple& ord : orderings(t)) {
        const Point p = partition_to_point(c, ord);
        o.require(point_to_partition(c, p) == ord, "round trip " + to_string(ord));
        ++trips;
      }
    }
  }

  // Quadraticity, parallelogram law and the doubling-limit oracle.
  double worst_quad = 0, worst_oracle = 0;
  std::size_t oracle_points = 0;
  for (const auto& [M, N] : corpus::curves()) {
    const Curve c(M, N);
    std::vector<Point> reps;
    const auto pts = corpus::points(c, 1);
    for (std::size_t i = 0; i < pts.size() && reps.size() < 2; i += 6) reps.push_back(pts[i]);
    for (const Point& P : reps) {
      const double hp = canonical_height(c, P).to_double();
      for (int k : {2, 3}) {
        const double hk = canonical_height(c, scalar_mul(c, k, P)).to_double();
        worst_quad = std::max(worst_quad, std::fabs(hk - k * k * hp));
      }
    }
    if (reps.size() == 2) {
      const Point &P = reps[0], &Q = reps[1];
      const double lhs = canonical_height(c, add(c, P, Q)).to_double() +
                         canonical_height(c, subtract(c, P, Q)).to_double();
      const double rhs = 2 * canonical_height(c, P).to_double() +
                         2 * canonical_height(c, Q).to_double();
      worst_quad = std::max(worst_quad, std::fabs(lhs - rhs));
    }
  }
  o.require(worst_quad < 1e-6, "quadraticity / parallelogram law");

  const std::pair<Curve, Point> oracle_cases[] = {
      {Curve(35, 1260), Point(-126, -882)},
      {Curve(35, 1260), Point(-84, -1176)},
      {Curve(159, 50544), Point(-2106, -37908)},
      {Curve(159, 50544), Point(-468, -5616)},
      {Curve(159, 50544), Point(-702, -6318)},
      {Curve(21, 96), Point(-32, -64)},
      {Curve(17116, Int("92021529600")), Point(-11950848, Rat(Int("-18069682176")))},
  };
  for (const auto& [c, p] : oracle_cases) {
    const double est = oracle::doubling_limit(c, p, 12).first;
    worst_oracle = std::max(worst_oracle, std::fabs(est - canonical_height(c, p).to_double()));
    ++oracle_points;
  }
  o.require(worst_oracle < 1e-6, "doubling-limit oracle");
  o.detail << identities << " partitions (image identities), " << lemma << " hits (sum-of-pairs bound), " << trips
           << " round trips, quad/parallelogram err " << worst_quad << ", oracle err "
           << worst_oracle << " on " << oracle_points << " points";
}

void oracle_equivalence(Outcome& o) {
  std::size_t pairs = 0;
  const auto all = oracle::brute_search(60, 1);
  for (const auto& [key, parts] : all) {
    o.require(oracle::to_parts(enumerate_partitions(key.first, key.second)) == parts,
              "enumerate (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
    ++pairs;
  }
  for (unsigned k : {1u, 2u, 3u}) {
    const auto got = search_multipartitions(60, k);
    const auto want = oracle::brute_search(60, k);
    bool same = got.size() == want.size();
    auto it = want.begin();
    for (std::size_t i = 0; same && i < got.size(); ++i, ++it) {
      same = got[i].M == it->first.first && got[i].N == it->first.second &&
             oracle::to_parts(got[i].partitions) == it->second;
    }
    o.require(same, "search k = " + std::to_string(k));
  }
  // Spot pairs up to 200.
  const auto big = oracle::brute_search(200, 2);
  std::size_t spots = 0, idx = 0;
  for (const auto& [key, parts] : big) {
    if (idx++ % 97) continue;
    o.require(oracle::to_parts(enumerate_partitions(key.first, key.second)) == parts,
              "spot (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
    ++spots;
  }
  const auto got = search_multipartitions(200, 3);
  const auto want = oracle::brute_search(200, 3);
  o.require(got.size() == want.size(), "search M <= 200, k = 3");
  o.detail << pairs << " pairs exhaustive (M <= 60), " << spots << " spot pairs and "
           << want.size() << " three-partition hits (M <= 200)";
}

}  // namespace

int main() {
  std::cout.setf(std::ios::fixed);
  std::cout.precision(2);
  const auto t0 = std::chrono::steady_clock::now();
  criterion(1, "rank-2 regulator of E(35,1260)", 5, rank2_regulator);
  criterion(2, "rank-3 regulator of E(159,50544)", 10, rank3_regulator);
  criterion(3, "E(17116,92021529600) census", 120, census_17116);
  criterion(4, "Torsion trichotomy", 4, torsion_trichotomy);
  criterion(5, "Property suites", 300, property_suites);
  criterion(6, "Oracle equivalence", 300, oracle_equivalence);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (failures ? "FAIL" : "PASS") << "  acceptance: " << 6 - failures
            << "/6 criteria  [" << secs << " s]" << std::endl;
  return failures ? 1 : 0;
}
