#pragma once

// End-to-end analysis of a pair (M, N) and its JSON / text renderings.
// Integers are serialized as decimal strings, rationals as "num/den" and
// reals as decimal strings carrying the requested number of digits.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "emn/curve.hpp"
#include "emn/families.hpp"
#include "emn/heights.hpp"
#include "emn/partitions.hpp"
#include "emn/torsion.hpp"

namespace emn {

struct AnalyzeOptions {
  int precision_digits = kDefaultPrecisionDigits;
  double tolerance = kDefaultTolerance;
  Domain domain = Domain::Positive;
  bool allow_degenerate = false;
};

struct AnalysisReport {
  explicit AnalysisReport(Curve c) : curve(std::move(c)) {}

  Curve curve;
  Minimality minimality;
  Domain domain = Domain::Positive;
  std::vector<Triple> partitions;
  TorsionClass torsion;
  std::vector<Triple> point_sources;  // ordering mapped to each point
  RankCertificate certificate;
  std::vector<std::string> warnings;
};

AnalysisReport analyze(const Int& M, const Int& N, const AnalyzeOptions& opts = {});

nlohmann::json point_json(const Point& p);
Point point_from_json(const nlohmann::json& j);
nlohmann::json triple_json(const Triple& t);

nlohmann::json to_json(const AnalysisReport& r);
nlohmann::json to_json(const FamilyInstance& f);
nlohmann::json to_json(const MultiPartition& mp);

std::string render_text(const AnalysisReport& r);
std::string render_text(const FamilyInstance& f);
std::string render_text(const MultiPartition& mp);

/// Re-checks a serialized analysis report: every listed point lies on the
/// curve, partitions have the right sum/product, torsion points form a group
/// of the stated size. Returns the problems found (empty when valid).
std::vector<std::string> revalidate_report(const nlohmann::json& j);

}  // namespace emn
