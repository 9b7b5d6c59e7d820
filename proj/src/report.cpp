#include "emn/report.hpp"

#include <set>
#include <sstream>

#include "emn/correspondence.hpp"
#include "emn/errors.hpp"

namespace emn {

using nlohmann::json;

namespace {

std::string real_str(const Real& r, int digits) { return r.str(digits); }

}  // namespace

AnalysisReport analyze(const Int& M, const Int& N, const AnalyzeOptions& opts) {
  AnalysisReport r(Curve(M, N));
  r.domain = opts.domain;
  r.minimality = is_minimal_pair(M, N);
  if (!r.minimality.minimal) {
    r.warnings.push_back("non-minimal model: " + to_string(r.minimality.d) +
                         "^3 divides N and shares primes with M");
  }
  r.partitions = enumerate_partitions(M, N, opts.domain);
  r.torsion = torsion_subgroup(M, N);
  for (const auto& w : r.torsion.warnings) r.warnings.push_back(w);

  std::vector<Point> points;
  for (const Triple& t : r.partitions) {
    if (!t.has_distinct_parts()) continue;  // repeated parts map to torsion
    if (is_cubic_degenerate(t)) {
      r.warnings.push_back("partition " + to_string(t) +
                           " satisfies d1(d2-d3)^3 = d3(d1-d2)^3; infinite order not implied");
    }
    r.point_sources.emplace_back(t[1], t[0], t[2]);
    points.push_back(partition_to_point(r.curve, r.point_sources.back()));
  }
  r.certificate = rank_lower_bound(r.curve, points, opts.tolerance, opts.precision_digits);
  return r;
}

json point_json(const Point& p) {
  if (p.is_infinity()) return json{{"infinity", true}};
  return json{{"x", to_string(p.x())}, {"y", to_string(p.y())}};
}

Point point_from_json(const json& j) {
  if (j.value("infinity", false)) return Point::infinity();
  return Point(parse_rational(j.at("x").get<std::string>()),
               parse_rational(j.at("y").get<std::string>()));
}

json triple_json(const Triple& t) {
  return json::array({to_string(t[0]), to_string(t[1]), to_string(t[2])});
}

json to_json(const AnalysisReport& r) {
  const int digits = r.certificate.precision_digits;
  json j;
  j["curve"] = {{"M", to_string(r.curve.M())},
                {"N", to_string(r.curve.N())},
                {"disc", to_string(r.curve.discriminant())},
                {"minimal", r.minimality.minimal},
                {"minimality_d", to_string(r.minimality.d)}};
  j["domain"] = to_string(r.domain);
  j["partitions"] = json::array();
  for (const Triple& t : r.partitions) j["partitions"].push_back(triple_json(t));
  j["s_set"] = json::array();
  for (const auto& s : r.torsion.s_set.solutions) {
    j["s_set"].push_back({{"a", to_string(s.a)},
                          {"b", to_string(s.b)},
                          {"has_negative_part", s.has_negative_part()}});
  }
  json tors;
  tors["kind"] = to_string(r.torsion.kind);
  tors["hypothesis_verified"] = r.torsion.hypothesis_verified;
  tors["generators"] = json::array();
  for (const Point& p : r.torsion.generators) tors["generators"].push_back(point_json(p));
  tors["points"] = json::array();
  for (const Point& p : r.torsion.all_points) tors["points"].push_back(point_json(p));
  tors["two_torsion_x"] = json::array();
  for (const Rat& x : r.torsion.two_torsion_x) tors["two_torsion_x"].push_back(to_string(x));
  j["torsion"] = tors;
  j["points"] = json::array();
  for (std::size_t i = 0; i < r.certificate.points.size(); ++i) {
    json p = point_json(r.certificate.points[i]);
    p["partition"] = triple_json(r.point_sources[i]);
    j["points"].push_back(p);
  }
  j["gram"] = json::array();
  for (const auto& row : r.certificate.gram) {
    json jr = json::array();
    for (const Real& v : row) jr.push_back(real_str(v, digits));
    j["gram"].push_back(jr);
  }
  j["independent"] = r.certificate.subset;
  j["regulator"] = real_str(r.certificate.regulator, digits);
  j["rank_lower_bound"] = r.certificate.rank_lower_bound;
  j["tolerance"] = r.certificate.tolerance;
  j["precision_digits"] = digits;
  j["height_normalization"] = r.certificate.normalization;
  j["warnings"] = r.warnings;
  return j;
}

json to_json(const FamilyInstance& f) {
  json j;
  j["kind"] = f.kind;
  j["params"] = json::array();
  for (const Int& v : f.params) j["params"].push_back(to_string(v));
  j["M"] = to_string(f.M);
  j["N"] = to_string(f.N);
  j["triples"] = json::array();
  for (const Triple& t : f.triples) j["triples"].push_back(triple_json(t));
  j["points"] = json::array();
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    json p = point_json(f.points[i]);
    p["partition"] = triple_json(f.point_orderings[i]);
    j["points"].push_back(p);
  }
  j["minimal"] = f.minimality.minimal;
  j["warnings"] = f.warnings;
  return j;
}

json to_json(const MultiPartition& mp) {
  json j{{"M", to_string(mp.M)}, {"N", to_string(mp.N)}, {"count", mp.partitions.size()}};
  j["partitions"] = json::array();
  for (const Triple& t : mp.partitions) j["partitions"].push_back(triple_json(t));
  return j;
}

std::string render_text(const AnalysisReport& r) {
  const int digits = r.certificate.precision_digits;
  std::ostringstream os;
  os << "curve      y^2 - " << r.curve.M() << "xy - " << r.curve.N() << "y = x^3\n"
     << "disc       " << r.curve.discriminant() << "\n"
     << "minimal    " << (r.minimality.minimal ? "yes" : "no (d = " + to_string(r.minimality.d) + ")")
     << "\n"
     << "partitions " << r.partitions.size() << " (" << to_string(r.domain) << ")\n";
  for (const Triple& t : r.partitions) os << "  " << to_string(t) << "\n";
  os << "#S         " << r.torsion.s_set.solutions.size() << "\n";
  for (const auto& s : r.torsion.s_set.solutions) {
    os << "  (" << s.a << ", " << s.a << ", " << s.b << ")\n";
  }
  os << "torsion    " << to_string(r.torsion.kind)
     << (r.torsion.hypothesis_verified ? "" : " (unverified hypothesis)") << "\n";
  for (const Point& p : r.torsion.all_points) os << "  " << p << "\n";
  os << "points     " << r.certificate.points.size() << "\n";
  for (std::size_t i = 0; i < r.certificate.points.size(); ++i) {
    os << "  " << r.certificate.points[i] << "  from " << to_string(r.point_sources[i]) << "\n";
  }
  if (!r.certificate.gram.empty()) {
    os << "gram\n";
    for (const auto& row : r.certificate.gram) {
      os << " ";
      for (const Real& v : row) os << " " << v.str(12);
      os << "\n";
    }
  }
  os << "regulator  " << r.certificate.regulator.str(digits) << "\n"
     << "rank       >= " << r.certificate.rank_lower_bound << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  return os.str();
}

std::string render_text(const FamilyInstance& f) {
  std::ostringstream os;
  os << "family " << f.kind << " (";
  for (std::size_t i = 0; i < f.params.size(); ++i) os << (i ? ", " : "") << f.params[i];
  os << ")\nM = " << f.M << ", N = " << f.N << "\n";
  os << f.M;
  for (std::size_t i = 0; i < f.triples.size(); ++i) {
    const Triple& t = f.triples[i];
    os << " = " << to_string(t[0]) << "+" << to_string(t[1]) << "+" << to_string(t[2]);
  }
  os << "\n";
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    os << "  P" << i + 1 << " = " << f.points[i] << "\n";
  }
  for (const auto& w : f.warnings) os << "warning: " << w << "\n";
  return os.str();
}

std::string render_text(const MultiPartition& mp) {
  std::ostringstream os;
  os << mp.M << " " << mp.N << " " << mp.partitions.size();
  for (const Triple& t : mp.partitions) os << " " << to_string(t);
  return os.str();
}

std::vector<std::string> revalidate_report(const json& j) {
  std::vector<std::string> problems;
  const Int M = parse_integer(j.at("curve").at("M").get<std::string>());
  const Int N = parse_integer(j.at("curve").at("N").get<std::string>());
  const Curve c(M, N);
  if (to_string(c.discriminant()) != j.at("curve").at("disc").get<std::string>()) {
    problems.push_back("discriminant mismatch");
  }
  for (const auto& t : j.at("partitions")) {
    const Triple tr(parse_rational(t[0]), parse_rational(t[1]), parse_rational(t[2]));
    if (tr.sum() != M || tr.product() != N) {
      problems.push_back("partition " + to_string(tr) + " has wrong sum or product");
    }
  }
  for (const auto& p : j.at("points")) {
    const Point pt = point_from_json(p);
    if (!is_on_curve(c, pt)) problems.push_back(to_string(pt) + " is off the curve");
    const Triple src(parse_rational(p.at("partition")[0]), parse_rational(p.at("partition")[1]),
                     parse_rational(p.at("partition")[2]));
    if (partition_to_point(c, src) != pt) {
      problems.push_back(to_string(pt) + " is not the image of " + to_string(src));
    }
  }
  std::set<Point> tors;
  for (const auto& p : j.at("torsion").at("points")) {
    const Point pt = point_from_json(p);
    if (!is_on_curve(c, pt)) problems.push_back(to_string(pt) + " is off the curve");
    tors.insert(pt);
  }
  for (const Point& a : tors) {
    for (const Point& b : tors) {
      if (!tors.count(add(c, a, b))) {
        problems.push_back("torsion points not closed under addition");
        return problems;
      }
    }
  }
  const std::string kind = j.at("torsion").at("kind").get<std::string>();
  const std::size_t expected = kind == "Z3" ? 3 : kind == "Z6" ? 6 : 12;
  if (tors.size() != expected) problems.push_back("torsion size does not match kind");
  return problems;
}

}  // namespace emn
