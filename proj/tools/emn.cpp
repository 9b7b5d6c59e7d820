// emn: command-line front end over the C API in emn/emn.h.

#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "emn/emn.h"

namespace {

struct Flags {
  bool json = false;
  int precision = 30;
  double tolerance = 1e-6;
  std::string domain = "positive";
  bool allow_degenerate = false;
};

int exit_code(emn_status s) {
  switch (s) {
    case EMN_OK:
      return 0;
    case EMN_ERR_INVALID_ARGUMENT:
    case EMN_ERR_SINGULAR_CURVE:
    case EMN_ERR_DOMAIN:
    case EMN_ERR_EXCEPTIONAL_POINT:
    case EMN_ERR_BAD_REDUCTION:
    case EMN_ERR_DEGENERATE:
      return 2;
    case EMN_ERR_PRECISION_EXHAUSTED:
    case EMN_ERR_FACTORIZATION_FAILED:
      return 3;
    default:
      return 1;
  }
}

// Thrown out of a subcommand to unwind with the status's exit code.
struct Failure {
  emn_status status;
};

void check(emn_status s) {
  if (s != EMN_OK) throw Failure{s};
}

struct CurveDeleter {
  void operator()(emn_curve* c) const { emn_curve_free(c); }
};
struct PointDeleter {
  void operator()(emn_point* p) const { emn_point_free(p); }
};
struct StringDeleter {
  void operator()(char* s) const { emn_string_free(s); }
};
using CurvePtr = std::unique_ptr<emn_curve, CurveDeleter>;
using PointPtr = std::unique_ptr<emn_point, PointDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

CurvePtr make_curve(const std::string& M, const std::string& N) {
  emn_curve* c = nullptr;
  check(emn_curve_create(M.c_str(), N.c_str(), &c));
  return CurvePtr(c);
}

PointPtr make_point(const emn_curve* c, const std::string& x, const std::string& y) {
  emn_point* p = nullptr;
  check(emn_point_create(c, x.c_str(), y.c_str(), &p));
  return PointPtr(p);
}

void print(char* s) {
  StringPtr owned(s);
  std::fputs(owned.get(), stdout);
  if (*owned && owned.get()[std::char_traits<char>::length(owned.get()) - 1] != '\n') {
    std::fputc('\n', stdout);
  }
}

emn_format format(const Flags& f) { return f.json ? EMN_FORMAT_JSON : EMN_FORMAT_TEXT; }

emn_domain domain(const Flags& f) {
  return f.domain == "nonzero" ? EMN_DOMAIN_NONZERO : EMN_DOMAIN_POSITIVE;
}

emn_options options(const Flags& f) {
  emn_options o;
  emn_options_init(&o);
  o.precision_digits = f.precision;
  o.tolerance = f.tolerance;
  o.domain = domain(f);
  o.allow_degenerate = f.allow_degenerate ? 1 : 0;
  return o;
}

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_flag("--json", f.json, "Machine-readable JSON output");
  cmd->add_option("--precision", f.precision, "Decimal digits for heights")
      ->check(CLI::Range(1, 10000))
      ->capture_default_str();
  cmd->add_option("--tolerance", f.tolerance, "Regulator threshold for independence")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--domain", f.domain, "Partition domain")
      ->check(CLI::IsMember({"positive", "nonzero"}))
      ->capture_default_str();
  cmd->add_flag("--allow-degenerate", f.allow_degenerate,
                "Report degenerate family instances instead of failing");
}

struct SearchState {
  const Flags* flags;
  emn_options opts;
  bool analyze = false;
  nlohmann::json hits = nlohmann::json::array();
  emn_status failure = EMN_OK;
};

std::string hit_line(const nlohmann::json& hit) {
  std::string line = hit.at("M").get<std::string>() + " " + hit.at("N").get<std::string>() +
                     " " + std::to_string(hit.at("count").get<std::size_t>());
  for (const auto& t : hit.at("partitions")) {
    line += " (" + t[0].get<std::string>() + "," + t[1].get<std::string>() + "," +
            t[2].get<std::string>() + ")";
  }
  return line;
}

int on_hit(const char* hit_json, void* user) {
  auto& st = *static_cast<SearchState*>(user);
  auto hit = nlohmann::json::parse(hit_json);
  std::string analysis;
  if (st.analyze) {
    emn_curve* c = nullptr;
    emn_status s = emn_curve_create(hit.at("M").get<std::string>().c_str(),
                                    hit.at("N").get<std::string>().c_str(), &c);
    CurvePtr curve(c);
    char* out = nullptr;
    if (s == EMN_OK) s = emn_analyze(curve.get(), &st.opts, format(*st.flags), &out);
    if (s != EMN_OK) {
      st.failure = s;
      return 1;
    }
    StringPtr owned(out);
    analysis = owned.get();
  }
  if (st.flags->json) {
    if (st.analyze) hit["analysis"] = nlohmann::json::parse(analysis);
    st.hits.push_back(std::move(hit));
  } else {
    std::cout << hit_line(hit) << "\n";
    if (st.analyze) std::cout << analysis << "\n";
    std::cout.flush();
  }
  return 0;
}

int run(const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const Failure& f) {
    std::cerr << "error: " << emn_last_error() << "\n";
    return exit_code(f.status);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triple partitions with fixed product and the curves E(M,N)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(emn_version()));

  Flags flags;
  std::string M, N, x, y;
  std::function<int()> action;

  auto* analyze = app.add_subcommand("analyze", "Full report for the pair (M, N)");
  analyze->add_option("M", M)->required();
  analyze->add_option("N", N)->required();
  add_common(analyze, flags);
  analyze->callback([&] {
    action = [&] {
      return run([&] {
        auto curve = make_curve(M, N);
        const emn_options o = options(flags);
        char* out = nullptr;
        check(emn_analyze(curve.get(), &o, format(flags), &out));
        print(out);
      });
    };
  });

  auto* partitions = app.add_subcommand("partitions", "Partitions of M with product N");
  partitions->add_option("M", M)->required();
  partitions->add_option("N", N)->required();
  add_common(partitions, flags);
  partitions->callback([&] {
    action = [&] {
      return run([&] {
        char* out = nullptr;
        check(emn_partitions(M.c_str(), N.c_str(), domain(flags), format(flags), &out));
        print(out);
      });
    };
  });

  std::string kind;
  std::vector<std::string> params;
  auto* family = app.add_subcommand("family", "Parametric families: two p q r s | three p q r | powers q k");
  family->add_option("kind", kind)->required()->check(CLI::IsMember({"two", "three", "powers"}));
  family->add_option("params", params)->required();
  add_common(family, flags);
  family->callback([&] {
    action = [&] {
      return run([&] {
        std::vector<const char*> raw;
        for (const auto& p : params) raw.push_back(p.c_str());
        const emn_options o = options(flags);
        char* out = nullptr;
        check(emn_family(kind.c_str(), raw.data(), raw.size(), &o, format(flags), &out));
        print(out);
      });
    };
  });

  unsigned long max_m = 0;
  unsigned min_count = 2;
  bool search_analyze = false;
  auto* search = app.add_subcommand("search", "Pairs (M, N) with several partitions");
  search->add_option("--max-m", max_m, "Largest M searched")->required();
  search->add_option("--min-count", min_count, "Minimum number of partitions")
      ->capture_default_str();
  search->add_flag("--analyze", search_analyze, "Run the full analysis on each hit");
  add_common(search, flags);
  search->callback([&] {
    action = [&] {
      return run([&] {
        SearchState st{&flags, options(flags), search_analyze};
        const emn_status s = emn_search(max_m, min_count, on_hit, &st);
        if (st.failure != EMN_OK) throw Failure{st.failure};
        check(s);
        if (flags.json) std::cout << st.hits.dump(2) << "\n";
      });
    };
  });

  auto* height = app.add_subcommand("height", "Canonical height of (x, y) on E(M,N)");
  height->add_option("M", M)->required();
  height->add_option("N", N)->required();
  height->add_option("x", x)->required();
  height->add_option("y", y)->required();
  add_common(height, flags);
  height->callback([&] {
    action = [&] {
      return run([&] {
        auto curve = make_curve(M, N);
        auto p = make_point(curve.get(), x, y);
        char* out = nullptr;
        check(emn_point_height_report(curve.get(), p.get(), flags.precision, format(flags), &out));
        print(out);
      });
    };
  });

  auto* order = app.add_subcommand("order", "Order of (x, y) on E(M,N)");
  order->add_option("M", M)->required();
  order->add_option("N", N)->required();
  order->add_option("x", x)->required();
  order->add_option("y", y)->required();
  add_common(order, flags);
  order->callback([&] {
    action = [&] {
      return run([&] {
        auto curve = make_curve(M, N);
        auto p = make_point(curve.get(), x, y);
        int n = 0;
        check(emn_point_order(curve.get(), p.get(), &n));
        if (flags.json) {
          nlohmann::json j{{"M", M}, {"N", N}, {"point", {{"x", x}, {"y", y}}}};
          j["order"] = n == 0 ? nlohmann::json(nullptr) : nlohmann::json(n);
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << (n == 0 ? std::string("infinite") : std::to_string(n)) << "\n";
        }
      });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return action ? action() : 0;
}
