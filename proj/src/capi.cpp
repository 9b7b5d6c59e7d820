#include "emn/emn.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "emn/correspondence.hpp"
#include "emn/errors.hpp"
#include "emn/heights.hpp"
#include "emn/report.hpp"

struct emn_curve {
  emn::Curve curve;
};

struct emn_point {
  emn::Point point;
};

namespace {

thread_local std::string last_error;

emn_status status_for(emn::ErrorKind kind) {
  using emn::ErrorKind;
  switch (kind) {
    case ErrorKind::SingularCurve: return EMN_ERR_SINGULAR_CURVE;
    case ErrorKind::InvalidArgument: return EMN_ERR_INVALID_ARGUMENT;
    case ErrorKind::DomainError: return EMN_ERR_DOMAIN;
    case ErrorKind::ExceptionalPoint: return EMN_ERR_EXCEPTIONAL_POINT;
    case ErrorKind::BadReduction: return EMN_ERR_BAD_REDUCTION;
    case ErrorKind::Degenerate: return EMN_ERR_DEGENERATE;
    case ErrorKind::InconsistentTorsion: return EMN_ERR_INCONSISTENT_TORSION;
    case ErrorKind::PrecisionExhausted: return EMN_ERR_PRECISION_EXHAUSTED;
    case ErrorKind::FactorizationFailed: return EMN_ERR_FACTORIZATION_FAILED;
  }
  return EMN_ERR_INTERNAL;
}

template <typename F>
emn_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return EMN_OK;
  } catch (const emn::Error& e) {
    last_error = e.what();
    return status_for(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return EMN_ERR_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) throw emn::Error(emn::ErrorKind::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

emn::AnalyzeOptions to_options(const emn_options* opts) {
  emn::AnalyzeOptions o;
  if (!opts) return o;
  require(opts->precision_digits >= 1 && opts->precision_digits <= 10000,
          "precision_digits must be in 1..10000");
  require(opts->tolerance > 0, "tolerance must be positive");
  o.precision_digits = opts->precision_digits;
  o.tolerance = opts->tolerance;
  o.domain = opts->domain == EMN_DOMAIN_NONZERO ? emn::Domain::Nonzero : emn::Domain::Positive;
  o.allow_degenerate = opts->allow_degenerate != 0;
  return o;
}

std::string dump(const nlohmann::json& j) { return j.dump(2); }

}  // namespace

extern "C" {

const char* emn_version(void) { return "1.0.0"; }

const char* emn_status_name(emn_status status) {
  switch (status) {
    case EMN_OK: return "ok";
    case EMN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case EMN_ERR_SINGULAR_CURVE: return "singular curve";
    case EMN_ERR_DOMAIN: return "domain error";
    case EMN_ERR_EXCEPTIONAL_POINT: return "exceptional point";
    case EMN_ERR_BAD_REDUCTION: return "bad reduction";
    case EMN_ERR_DEGENERATE: return "degenerate";
    case EMN_ERR_INCONSISTENT_TORSION: return "inconsistent torsion";
    case EMN_ERR_PRECISION_EXHAUSTED: return "precision exhausted";
    case EMN_ERR_FACTORIZATION_FAILED: return "factorization failed";
    case EMN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* emn_last_error(void) { return last_error.c_str(); }

void emn_string_free(char* s) { std::free(s); }

void emn_options_init(emn_options* opts) {
  if (!opts) return;
  opts->precision_digits = emn::kDefaultPrecisionDigits;
  opts->tolerance = emn::kDefaultTolerance;
  opts->domain = EMN_DOMAIN_POSITIVE;
  opts->allow_degenerate = 0;
}

emn_status emn_curve_create(const char* M, const char* N, emn_curve** out) {
  return guarded([&] {
    require(M && N && out, "null argument");
    *out = nullptr;
    *out = new emn_curve{emn::Curve(emn::parse_integer(M), emn::parse_integer(N))};
  });
}

void emn_curve_free(emn_curve* curve) { delete curve; }

emn_status emn_curve_discriminant(const emn_curve* curve, char** out) {
  return guarded([&] {
    require(curve && out, "null argument");
    *out = dup_string(emn::to_string(curve->curve.discriminant()));
  });
}

emn_status emn_point_create(const emn_curve* curve, const char* x, const char* y,
                            emn_point** out) {
  return guarded([&] {
    require(curve && x && y && out, "null argument");
    *out = nullptr;
    emn::Point p(emn::parse_rational(x), emn::parse_rational(y));
    if (!emn::is_on_curve(curve->curve, p)) {
      throw emn::Error(emn::ErrorKind::DomainError, emn::to_string(p) + " is not on the curve");
    }
    *out = new emn_point{std::move(p)};
  });
}

emn_status emn_point_infinity(emn_point** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = new emn_point{emn::Point::infinity()};
  });
}

void emn_point_free(emn_point* point) { delete point; }

emn_status emn_point_string(const emn_point* point, char** out) {
  return guarded([&] {
    require(point && out, "null argument");
    *out = dup_string(emn::to_string(point->point));
  });
}

emn_status emn_point_is_infinity(const emn_point* point, int* out) {
  return guarded([&] {
    require(point && out, "null argument");
    *out = point->point.is_infinity() ? 1 : 0;
  });
}

emn_status emn_point_add(const emn_curve* curve, const emn_point* p, const emn_point* q,
                         emn_point** out) {
  return guarded([&] {
    require(curve && p && q && out, "null argument");
    *out = new emn_point{emn::add(curve->curve, p->point, q->point)};
  });
}

emn_status emn_point_negate(const emn_curve* curve, const emn_point* p, emn_point** out) {
  return guarded([&] {
    require(curve && p && out, "null argument");
    *out = new emn_point{emn::negate(curve->curve, p->point)};
  });
}

emn_status emn_point_mul(const emn_curve* curve, const char* k, const emn_point* p,
                         emn_point** out) {
  return guarded([&] {
    require(curve && k && p && out, "null argument");
    *out = new emn_point{emn::scalar_mul(curve->curve, emn::parse_integer(k), p->point)};
  });
}

emn_status emn_point_order(const emn_curve* curve, const emn_point* p, int* order) {
  return guarded([&] {
    require(curve && p && order, "null argument");
    const auto ord = emn::point_order(curve->curve, p->point);
    *order = ord ? *ord : 0;
  });
}

emn_status emn_point_height(const emn_curve* curve, const emn_point* p, int precision_digits,
                            char** out) {
  return guarded([&] {
    require(curve && p && out, "null argument");
    require(precision_digits >= 1, "precision_digits must be positive");
    *out = dup_string(
        emn::canonical_height(curve->curve, p->point, precision_digits).str(precision_digits));
  });
}

emn_status emn_point_height_report(const emn_curve* curve, const emn_point* p,
                                   int precision_digits, emn_format format, char** out) {
  return guarded([&] {
    require(curve && p && out, "null argument");
    require(precision_digits >= 1, "precision_digits must be positive");
    const auto hb = emn::canonical_height_breakdown(curve->curve, p->point, precision_digits);
    const std::string naive = p->point.is_infinity()
                                  ? "0"
                                  : emn::naive_height(p->point.x(), precision_digits)
                                        .str(precision_digits);
    if (format == EMN_FORMAT_JSON) {
      nlohmann::json j;
      j["curve"] = {{"M", emn::to_string(curve->curve.M())},
                    {"N", emn::to_string(curve->curve.N())}};
      j["point"] = emn::point_json(p->point);
      j["naive_height"] = naive;
      j["canonical_height"] = hb.total.str(precision_digits);
      j["places"] = nlohmann::json::array();
      for (const auto& lh : hb.places) {
        j["places"].push_back({{"place", lh.prime == 0 ? "infinity" : emn::to_string(lh.prime)},
                               {"cancelled", emn::to_string(lh.cancelled)},
                               {"value", lh.value.str(precision_digits)}});
      }
      j["precision_digits"] = precision_digits;
      j["height_normalization"] = emn::kHeightNormalization;
      *out = dup_string(dump(j));
    } else {
      std::string s = "point      " + emn::to_string(p->point) + "\n";
      s += "naive      " + naive + "\n";
      for (const auto& lh : hb.places) {
        s += (lh.prime == 0 ? std::string("  inf") : "  p=" + emn::to_string(lh.prime)) + "  " +
             lh.value.str(precision_digits) + "\n";
      }
      s += "height     " + hb.total.str(precision_digits) + "\n";
      *out = dup_string(s);
    }
  });
}

emn_status emn_point_to_partition(const emn_curve* curve, const emn_point* p, char** json_out) {
  return guarded([&] {
    require(curve && p && json_out, "null argument");
    *json_out = dup_string(
        emn::triple_json(emn::point_to_partition(curve->curve, p->point)).dump());
  });
}

emn_status emn_partition_to_point(const emn_curve* curve, const char* d1, const char* d2,
                                  const char* d3, emn_point** out) {
  return guarded([&] {
    require(curve && d1 && d2 && d3 && out, "null argument");
    const emn::Triple t(emn::parse_rational(d1), emn::parse_rational(d2),
                        emn::parse_rational(d3));
    *out = new emn_point{emn::partition_to_point(curve->curve, t)};
  });
}

emn_status emn_analyze(const emn_curve* curve, const emn_options* opts, emn_format format,
                       char** out) {
  return guarded([&] {
    require(curve && out, "null argument");
    const auto report = emn::analyze(curve->curve.M(), curve->curve.N(), to_options(opts));
    *out = dup_string(format == EMN_FORMAT_JSON ? dump(emn::to_json(report))
                                                : emn::render_text(report));
  });
}

emn_status emn_partitions(const char* M, const char* N, emn_domain domain, emn_format format,
                          char** out) {
  return guarded([&] {
    require(M && N && out, "null argument");
    const emn::Int m = emn::parse_integer(M), n = emn::parse_integer(N);
    const auto d = domain == EMN_DOMAIN_NONZERO ? emn::Domain::Nonzero : emn::Domain::Positive;
    const auto parts = emn::enumerate_partitions(m, n, d);
    const auto lemma = emn::validate_lemma1(m, parts);
    if (format == EMN_FORMAT_JSON) {
      nlohmann::json j{{"M", emn::to_string(m)}, {"N", emn::to_string(n)},
                       {"domain", emn::to_string(d)}};
      j["partitions"] = nlohmann::json::array();
      for (const auto& t : parts) j["partitions"].push_back(emn::triple_json(t));
      j["lemma1"] = {{"vacuous", lemma.vacuous},
                     {"disjoint_entries", lemma.disjoint_entries},
                     {"not_prime_power", lemma.not_prime_power},
                     {"omega_at_least_four", lemma.omega_at_least_four},
                     {"notes", lemma.notes}};
      *out = dup_string(dump(j));
    } else {
      std::string s;
      for (const auto& t : parts) s += emn::to_string(t) + "\n";
      s += std::to_string(parts.size()) + " partition(s)\n";
      for (const auto& note : lemma.notes) s += "lemma: " + note + "\n";
      *out = dup_string(s);
    }
  });
}

emn_status emn_torsion(const emn_curve* curve, emn_format format, char** out) {
  return guarded([&] {
    require(curve && out, "null argument");
    const auto t = emn::torsion_subgroup(curve->curve.M(), curve->curve.N());
    if (format == EMN_FORMAT_JSON) {
      nlohmann::json j{{"kind", emn::to_string(t.kind)},
                       {"hypothesis_verified", t.hypothesis_verified},
                       {"warnings", t.warnings}};
      for (const auto& p : t.generators) j["generators"].push_back(emn::point_json(p));
      for (const auto& p : t.all_points) j["points"].push_back(emn::point_json(p));
      j["two_torsion_x"] = nlohmann::json::array();
      for (const auto& x : t.two_torsion_x) j["two_torsion_x"].push_back(emn::to_string(x));
      *out = dup_string(dump(j));
    } else {
      std::string s = std::string(emn::to_string(t.kind)) + "\n";
      for (const auto& p : t.all_points) s += "  " + emn::to_string(p) + "\n";
      *out = dup_string(s);
    }
  });
}

emn_status emn_family(const char* kind, const char* const* params, size_t n_params,
                      const emn_options* opts, emn_format format, char** out) {
  return guarded([&] {
    require(kind && out && (params || n_params == 0), "null argument");
    const emn::AnalyzeOptions o = to_options(opts);
    std::vector<emn::Int> v;
    for (size_t i = 0; i < n_params; ++i) {
      require(params[i], "null parameter");
      v.push_back(emn::parse_integer(params[i]));
    }
    const std::string k = kind;
    emn::FamilyInstance f;
    if (k == "two") {
      require(v.size() == 4, "family two takes p q r s");
      f = emn::family_two(v[0], v[1], v[2], v[3], o.allow_degenerate);
    } else if (k == "three") {
      require(v.size() == 3, "family three takes p q r");
      f = emn::family_three(v[0], v[1], v[2], o.allow_degenerate);
    } else if (k == "powers") {
      require(v.size() == 2, "family powers takes q k");
      require(v[1].fits_ulong_p(), "k out of range");
      f = emn::family_powers(v[0], v[1].get_ui(), o.allow_degenerate);
    } else {
      require(false, "family kind must be two, three or powers");
    }
    const auto report = emn::analyze(f.M, f.N, o);
    if (format == EMN_FORMAT_JSON) {
      *out = dup_string(dump({{"family", emn::to_json(f)}, {"analysis", emn::to_json(report)}}));
    } else {
      *out = dup_string(emn::render_text(f) + "\n" + emn::render_text(report));
    }
  });
}

emn_status emn_search(unsigned long max_m, unsigned min_count, emn_search_callback callback,
                      void* user) {
  return guarded([&] {
    require(callback != nullptr, "null callback");
    require(max_m >= 3, "max_m must be at least 3");
    emn::search_multipartitions(max_m, min_count, [&](const emn::MultiPartition& mp) {
      const std::string s = emn::to_json(mp).dump();
      return callback(s.c_str(), user) == 0;
    });
  });
}

}  // extern "C"
