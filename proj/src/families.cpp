#include "emn/families.hpp"

#include <algorithm>

#include "emn/correspondence.hpp"
#include "emn/errors.hpp"

namespace emn {

namespace {

void require_positive(const std::vector<Int>& params, const char* kind) {
  for (const Int& v : params) {
    if (v <= 0) {
      throw Error(ErrorKind::InvalidArgument,
                  std::string("family ") + kind + " needs positive parameters");
    }
  }
}

[[noreturn]] void degenerate(const FamilyInstance& f, const std::string& why) {
  std::string params;
  for (const Int& v : f.params) params += (params.empty() ? "" : ",") + to_string(v);
  throw Error(ErrorKind::Degenerate, "family " + f.kind + "(" + params + "): " + why);
}

// Fills M, N, points and diagnostics from the triples and point orderings,
// checking every identity exactly.
void complete(FamilyInstance& f, const std::vector<Point>& formula_points,
              bool allow_degenerate) {
  for (const Triple& t : f.triples) {
    for (const Rat& d : t.parts) {
      if (d == 0) degenerate(f, "zero entry in " + to_string(t));
    }
  }
  const Rat m = f.triples.front().sum();
  const Rat n = f.triples.front().product();
  for (const Triple& t : f.triples) {
    if (t.sum() != m || t.product() != n) {
      degenerate(f, to_string(t) + " breaks the equal sum / equal product identity");
    }
  }
  f.M = m.get_num();
  f.N = n.get_num();
  if (n == 0 || f.M * f.M * f.M == 27 * f.N) degenerate(f, "singular curve (M³ = 27N)");
  const Curve c(f.M, f.N);

  std::vector<Triple> seen;
  for (const Triple& t : f.triples) {
    const Triple s = t.sorted();
    if (std::find(seen.begin(), seen.end(), s) != seen.end()) {
      f.warnings.push_back("Degenerate: " + to_string(t) +
                           " repeats an earlier triple as a multiset");
    } else {
      seen.push_back(s);
    }
  }
  if (seen.size() < f.triples.size()) {
    f.warnings.push_back("only " + std::to_string(seen.size()) + " distinct partitions");
  }
  if (!f.warnings.empty() && !allow_degenerate) degenerate(f, f.warnings.front());

  for (std::size_t i = 0; i < formula_points.size(); ++i) {
    const Point& p = formula_points[i];
    if (!is_on_curve(c, p) || p != partition_to_point(c, f.point_orderings[i])) {
      degenerate(f, "designated point " + to_string(p) + " does not match its triple");
    }
    f.points.push_back(p);
  }
  f.minimality = is_minimal_pair(f.M, f.N);
  if (!f.minimality.minimal) {
    f.warnings.push_back("non-minimal model: d = " + to_string(f.minimality.d));
  }
}

Rat R(const Int& v) { return Rat(v); }

}  // namespace

FamilyInstance family_two(const Int& p, const Int& q, const Int& r, const Int& s,
                          bool allow_degenerate) {
  FamilyInstance f;
  f.kind = "two";
  f.params = {p, q, r, s};
  require_positive(f.params, "two");
  const Int X = p * (r + s), Y = q * (p + s), Z = r * (q + s);
  const Int U = q * (r + s), V = r * (p + s), W = p * (q + s);
  f.triples = {Triple(R(X), R(Y), R(Z)), Triple(R(U), R(V), R(W))};
  f.point_orderings = {Triple(R(Y), R(X), R(Z)), Triple(R(V), R(U), R(W))};
  const Int N = X * Y * Z;
  // (-N : -N X : Y) and (-N : -N U : V) in affine form.
  complete(f,
           {Point(Rat(-N, Y), Rat(Int(-N * X), Y)), Point(Rat(-N, V), Rat(Int(-N * U), V))},
           allow_degenerate);
  return f;
}

FamilyInstance family_three(const Int& p, const Int& q, const Int& r, bool allow_degenerate) {
  FamilyInstance f;
  f.kind = "three";
  f.params = {p, q, r};
  require_positive(f.params, "three");
  const Int s = p * q * r * r - p * p * q * r + p * p - p - r + 1;
  const Int w = q * r * r - q * p - q * r + p + q - r;
  const Int z = p * q * q * r * r - p * q * q * r - p * q * r + p + q - 1;
  if (s * w * z == 0) {
    degenerate(f, "s*w*z = 0 (s=" + to_string(s) + ", w=" + to_string(w) +
                      ", z=" + to_string(z) + ")");
  }
  f.params.insert(f.params.end(), {s, w, z});
  f.triples = {Triple(R(p * w), R(q * s), R(r * z)), Triple(R(p * q * r * w), R(s), R(z)),
               Triple(R(w), R(q * r * s), R(p * z))};
  f.point_orderings = {Triple(R(q * s), R(p * w), R(r * z)),
                       Triple(R(p * q * r * w), R(s), R(z)),
                       Triple(R(q * r * s), R(w), R(p * z))};
  complete(f,
           {Point(R(-p * r * w * z), R(-p * p * r * w * w * z)), Point(R(-s * z), R(-s * s * z)),
            Point(R(-p * w * z), R(-p * w * w * z))},
           allow_degenerate);
  return f;
}

FamilyInstance family_powers(const Int& q, unsigned long k, bool allow_degenerate) {
  FamilyInstance f;
  f.kind = "powers";
  f.params = {q, Int(k)};
  if (q < 2 || k < 2) {
    throw Error(ErrorKind::InvalidArgument, "family powers needs q >= 2 and k >= 2");
  }
  const Int qodd = pow(q, 2 * k - 1);
  if ((qodd + 1) % (q + 1) != 0) {
    throw Error(ErrorKind::InvalidArgument, "(q^(2k-1) + 1)/(q + 1) is not integral");
  }
  const Int p = (qodd + 1) / (q + 1);
  f.params.push_back(p);
  const Int q2k = qodd * q;
  f.triples = {Triple(R(1), R(p * q * q), R(qodd)), Triple(R(p), R(q), R(q2k))};
  f.point_orderings = f.triples;
  const Int q2k1 = q2k * q;
  complete(f, {Point(R(-p * q2k1), R(-p * p * q2k1 * q * q)), Point(R(-q2k1), R(-q2k1 * q))},
           allow_degenerate);
  return f;
}

std::array<Rat, 3> cubes_transform(const std::array<Rat, 3>& v) {
  return {(v[1] + v[2]) / 2, (v[0] + v[2]) / 2, (v[0] + v[1]) / 2};
}

std::array<Rat, 3> inverse_cubes_transform(const std::array<Rat, 3>& v) {
  return {-v[0] + v[1] + v[2], v[0] - v[1] + v[2], v[0] + v[1] - v[2]};
}

}  // namespace emn
