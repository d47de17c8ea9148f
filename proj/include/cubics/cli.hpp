#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubics/errors.hpp"
#include "cubics/fixtures.hpp"
#include "cubics/gw_forms.hpp"
#include "cubics/localization.hpp"
#include "cubics/orientation.hpp"
#include "cubics/verify.hpp"

namespace cubics::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kRefused = 2,
  kInconsistent = 3,
};

using ordered_json = nlohmann::ordered_json;

/// CUBICS_LOG: unset/"0"/"quiet" silent, "1"/"info", "2"/"debug".
inline int log_level_from_env() {
  const char* v = std::getenv("CUBICS_LOG");
  if (v == nullptr) return 0;
  std::string s(v);
  if (s == "debug" || s == "2") return 2;
  if (s == "info" || s == "1") return 1;
  return 0;
}

class Log {
 public:
  Log(std::ostream& sink, int level) : sink_(sink), level_(level) {}
  void info(const std::string& msg) const {
    if (level_ >= 1) sink_ << "[info] " << msg << '\n';
  }
  void debug(const std::string& msg) const {
    if (level_ >= 2) sink_ << "[debug] " << msg << '\n';
  }

 private:
  std::ostream& sink_;
  int level_;
};

// Integers that fit are JSON numbers; larger ones are decimal strings.
inline ordered_json json_integer(const Integer& z) {
  if (fits_int64(z)) return to_int64(z);
  return z.get_str();
}

inline ordered_json json_weights(const WeightVector& w) {
  ordered_json arr = ordered_json::array();
  for (const auto& a : w.entries()) arr.push_back(json_integer(a));
  return arr;
}

inline ordered_json json_gw(const GWElement& g) {
  return {{"signature", json_integer(g.signature())},
          {"rank", json_integer(g.rank())},
          {"hyperbolic_multiplicity", json_integer(g.hyperbolic_multiplicity())},
          {"general_form", render(g, FieldKind::kGeneral)}};
}

inline Integer parse_integer(const std::string& text, const char* what) {
  Integer z;
  if (text.empty() || z.set_str(text, 10) != 0) {
    throw DomainError(std::string("not an integer ") + what + ": '" + text + "'");
  }
  return z;
}

struct CountArgs {
  long n = 0;
  std::string degrees;
  std::string weights;
  std::string rank;
  int samples = 3;
  std::uint64_t seed = 1;
  bool json = false;
  bool trace = false;
  bool is_signed = false;
  bool allow_vanishing = false;
};

inline int cmd_count(const CountArgs& a, std::ostream& out, const Log& log) {
  DegreeProfile profile(a.n, parse_degrees(a.degrees));
  CountOptions options;
  options.convention = a.is_signed ? LocalConvention::kSigned : LocalConvention::kSignCancelled;
  options.allow_vanishing = a.allow_vanishing;
  std::optional<Integer> rank;
  if (!a.rank.empty()) rank = parse_integer(a.rank, "rank");

  CountResult result;
  if (!a.weights.empty()) {
    auto w = parse_weights(a.weights);
    log.info("evaluating " + profile.to_string() + " at [" + w.to_string() + "]");
    result = signature(profile, w, options);
  } else if (a.samples <= 1) {
    auto w = random_generic_weights(profile.weight_count(), a.seed);
    log.info("evaluating " + profile.to_string() + " at [" + w.to_string() + "]");
    result = signature(profile, w, options);
  } else {
    log.info("evaluating " + profile.to_string() + " at " + std::to_string(a.samples) +
             " samples from seed " + std::to_string(a.seed));
    result = signature_verified(profile, a.samples, a.seed, options);
  }
  for (const auto& t : result.per_plane) {
    log.debug("plane " + t.pair.to_string() + " -> " + to_string(t.value));
  }
  std::optional<GWElement> gw;
  if (rank) gw = assemble(result.signature, *rank);

  if (a.json) {
    ordered_json j;
    j["n"] = profile.n();
    j["degrees"] = profile.degrees();
    j["signature"] = json_integer(result.signature);
    j["weights_used"] = json_weights(result.weights_used);
    j["samples_checked"] = result.samples_checked;
    if (result.vanished) j["vanished"] = true;
    if (a.trace) {
      ordered_json planes = ordered_json::array();
      for (const auto& t : result.per_plane) {
        planes.push_back({{"pair", {t.pair.i, t.pair.j}}, {"value", to_string(t.value)}});
      }
      j["per_plane"] = planes;
    }
    if (gw) j["gw"] = json_gw(*gw);
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "signature " << profile.to_string() << " = " << result.signature << '\n';
  if (result.vanished) {
    out << "  (even degree: Euler class vanishes)\n";
  } else {
    out << "  weights [" << result.weights_used.to_string() << "], " << result.samples_checked
        << " sample(s) checked\n";
  }
  if (a.trace) {
    for (const auto& t : result.per_plane) {
      out << "  plane " << t.pair.to_string() << ": " << to_string(t.value) << '\n';
    }
  }
  if (gw) {
    out << "  GW: " << render(*gw) << '\n';
    out << "  GW (general field): " << render(*gw, FieldKind::kGeneral) << '\n';
  }
  return kOk;
}

inline int cmd_orient(long n, const std::string& degrees, bool json, std::ostream& out) {
  DegreeProfile profile(n, parse_degrees(degrees));
  auto r = check(profile);
  if (json) {
    ordered_json j;
    j["n"] = profile.n();
    j["degrees"] = profile.degrees();
    j["rank_ok"] = r.rank_ok;
    j["all_odd"] = r.all_odd;
    j["count_neg_mod4"] = r.count_neg_mod4;
    j["r_parity_ok"] = r.r_parity_ok;
    j["vanishing"] = r.vanishing;
    j["orientable"] = r.orientable;
    j["plucker_exponent"] = json_integer(r.plucker_exponent);
    j["ncm_exponent"] = json_integer(r.ncm_exponent);
    j["twist_parity_ok"] = r.twist_parity_ok;
    j["reason"] = r.reason;
    out << j.dump(2) << '\n';
    return kOk;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << profile.to_string() << ": " << r.reason << '\n'
      << "  rank matches 4n:        " << yn(r.rank_ok) << '\n'
      << "  all degrees odd:        " << yn(r.all_odd) << '\n'
      << "  degrees = 3 mod 4:      " << r.count_neg_mod4 << '\n'
      << "  r parity:               " << yn(r.r_parity_ok) << '\n'
      << "  O(1) twist exponent:    " << r.plucker_exponent << '\n'
      << "  non-CM twist exponent:  " << r.ncm_exponent << '\n'
      << "  twist parities agree:   " << yn(r.twist_parity_ok) << '\n';
  return kOk;
}

inline int cmd_enumerate(long max_n, bool json, std::ostream& out) {
  auto profiles = enumerate_orientable(max_n);
  if (json) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : profiles) arr.push_back({{"n", p.n()}, {"degrees", p.degrees()}});
    out << arr.dump(2) << '\n';
  } else {
    for (const auto& p : profiles) out << p.to_string() << '\n';
  }
  return kOk;
}

inline int cmd_verify(const std::string& suite, int trials, std::uint64_t seed, bool json,
                      bool verbose, std::ostream& out) {
  std::vector<SuiteReport> reports;
  if (suite == "oracle" || suite == "all") reports.push_back(oracle_suite());
  if (suite == "combinatorics" || suite == "all") reports.push_back(combinatorics_suite());
  if (suite == "invariance" || suite == "all") reports.push_back(invariance_suite(trials, seed));
  bool ok = true;
  ordered_json j = ordered_json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    ordered_json failed = ordered_json::array();
    for (const auto& c : r.checks) {
      if (!c.passed) failed.push_back({{"check", c.name}, {"detail", c.detail}});
    }
    if (json) {
      j.push_back({{"suite", r.suite},
                   {"checks", r.checks.size()},
                   {"failures", r.failures()},
                   {"failed", failed}});
      continue;
    }
    out << r.suite << ": " << (r.checks.size() - r.failures()) << "/" << r.checks.size()
        << " passed\n";
    for (const auto& c : r.checks) {
      if (!c.passed || verbose) {
        out << "  " << (c.passed ? "ok   " : "FAIL ") << c.name;
        if (!c.passed && !c.detail.empty()) out << " (" << c.detail << ")";
        out << '\n';
      }
    }
  }
  if (json) out << j.dump(2) << '\n';
  return ok ? kOk : kInconsistent;
}

inline int cmd_gw(const std::string& s, const std::string& r, const std::string& field, bool json,
                  std::ostream& out) {
  auto g = assemble(parse_integer(s, "signature"), parse_integer(r, "rank"));
  if (json) {
    out << json_gw(g).dump(2) << '\n';
  } else {
    out << render(g, parse_field_kind(field)) << '\n';
  }
  return kOk;
}

inline int cmd_table(const std::string& fixtures, int samples, std::uint64_t seed, bool json,
                     std::ostream& out, const Log& log) {
  std::vector<TableRow> rows;
  if (!fixtures.empty()) {
    log.info("loading fixtures from " + fixtures);
    rows = load_table(fixtures);
  } else {
    rows = signature_table();
  }
  bool all_match = true;
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows) {
    auto got = samples >= 2 ? signature_verified(row.profile, samples, seed)
                            : signature(row.profile, default_weights(row.profile.weight_count()));
    const bool match = got.signature == row.signature;
    all_match = all_match && match;
    if (json) {
      arr.push_back({{"n", row.profile.n()},
                     {"degrees", row.profile.degrees()},
                     {"expected", json_integer(row.signature)},
                     {"computed", json_integer(got.signature)},
                     {"match", match},
                     {"gw", json_gw(assemble(row.signature, row.rank))}});
      continue;
    }
    out << std::left << std::setw(14) << row.profile.to_string() << std::setw(22)
        << got.signature.get_str() << (match ? "OK" : "DIFF expected " + row.signature.get_str())
        << '\n';
  }
  if (json) out << arr.dump(2) << '\n';
  return all_match ? kOk : kInconsistent;
}

inline int cmd_bench(int repeat, bool json, std::ostream& out) {
  using clock = std::chrono::steady_clock;
  ordered_json arr = ordered_json::array();
  for (const auto& row : signature_table()) {
    if (row.profile.n() != 12) continue;
    const auto w = default_weights(row.profile.weight_count());
    Integer value;
    const auto t0 = clock::now();
    for (int k = 0; k < repeat; ++k) value = signature(row.profile, w).signature;
    const double ms =
        std::chrono::duration<double, std::milli>(clock::now() - t0).count() / repeat;
    if (json) {
      arr.push_back({{"n", row.profile.n()},
                     {"degrees", row.profile.degrees()},
                     {"signature", json_integer(value)},
                     {"ms_per_run", ms}});
    } else {
      out << std::left << std::setw(14) << row.profile.to_string() << std::setw(18)
          << value.get_str() << std::fixed << std::setprecision(3) << ms << " ms\n";
    }
  }
  if (json) out << arr.dump(2) << '\n';
  return kOk;
}

/// Runs one command; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed counts of twisted cubics on complete intersections", "cubics"};
  app.require_subcommand(1);

  CountArgs count;
  auto* c = app.add_subcommand("count", "signature of (n, degrees) by Bott residues");
  c->add_option("--n", count.n, "ambient dimension")->required();
  c->add_option("--degrees", count.degrees, "comma-separated degrees")->required();
  c->add_option("--weights", count.weights, "evaluate at exactly these weights");
  c->add_option("--samples", count.samples, "random weight samples that must agree")
      ->capture_default_str();
  c->add_option("--seed", count.seed, "seed of the first sample")->capture_default_str();
  c->add_option("--rank", count.rank, "rank, to assemble the GW class");
  c->add_flag("--json", count.json);
  c->add_flag("--trace", count.trace, "print per-plane contributions");
  c->add_flag("--signed", count.is_signed, "keep the weight-dependent signs (odd weights)");
  c->add_flag("--allow-vanishing", count.allow_vanishing, "report 0 for even degrees");

  long orient_n = 0;
  std::string orient_degrees;
  bool orient_json = false;
  auto* o = app.add_subcommand("orient", "relative orientability report");
  o->add_option("--n", orient_n)->required();
  o->add_option("--degrees", orient_degrees)->required();
  o->add_flag("--json", orient_json);

  long max_n = 12;
  bool enum_json = false;
  auto* e = app.add_subcommand("enumerate", "orientable profiles up to --max-n");
  e->add_option("--max-n", max_n)->capture_default_str();
  e->add_flag("--json", enum_json);

  std::string suite = "all";
  int trials = 100;
  std::uint64_t verify_seed = 2024;
  bool verify_json = false;
  bool verbose = false;
  auto* v = app.add_subcommand("verify", "run the property suites");
  v->add_option("--suite", suite)
      ->check(CLI::IsMember({"oracle", "combinatorics", "invariance", "all"}))
      ->capture_default_str();
  v->add_option("--trials", trials, "randomized trials for the invariance suite")
      ->capture_default_str();
  v->add_option("--seed", verify_seed)->capture_default_str();
  v->add_flag("--json", verify_json);
  v->add_flag("--verbose", verbose, "list passing checks too");

  std::string gw_s, gw_r, field = "squares-2-3";
  bool gw_json = false;
  auto* g = app.add_subcommand("gw", "render s + ((r-s)/2)·H");
  g->add_option("--signature", gw_s)->required();
  g->add_option("--rank", gw_r)->required();
  g->add_option("--field", field)
      ->check(CLI::IsMember({"squares-2-3", "general"}))
      ->capture_default_str();
  g->add_flag("--json", gw_json);

  std::string fixtures;
  if (const char* env = std::getenv("CUBICS_FIXTURES")) fixtures = env;
  int table_samples = 3;
  std::uint64_t table_seed = 1;
  bool table_json = false;
  auto* t = app.add_subcommand("table", "recompute the nine tabulated signatures");
  t->add_option("--fixtures", fixtures, "fixture JSON (default: embedded table)");
  t->add_option("--samples", table_samples)->capture_default_str();
  t->add_option("--seed", table_seed)->capture_default_str();
  t->add_flag("--json", table_json);

  int repeat = 20;
  bool bench_json = false;
  auto* b = app.add_subcommand("bench", "time the n=12 cases");
  b->add_option("--repeat", repeat)->check(CLI::PositiveNumber)->capture_default_str();
  b->add_flag("--json", bench_json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    if (!app.get_subcommands().empty()) {
      err << app.get_subcommands().front()->help();
    } else {
      err << app.help();
    }
    return kUsage;
  }

  const Log log(err, log_level_from_env());
  const bool want_json = count.json || orient_json || enum_json || verify_json || gw_json ||
                         table_json || bench_json;
  try {
    if (c->parsed()) return cmd_count(count, out, log);
    if (o->parsed()) return cmd_orient(orient_n, orient_degrees, orient_json, out);
    if (e->parsed()) return cmd_enumerate(max_n, enum_json, out);
    if (v->parsed()) return cmd_verify(suite, trials, verify_seed, verify_json, verbose, out);
    if (g->parsed()) return cmd_gw(gw_s, gw_r, field, gw_json, out);
    if (t->parsed()) return cmd_table(fixtures, table_samples, table_seed, table_json, out, log);
    if (b->parsed()) return cmd_bench(repeat, bench_json, out);
  } catch (const RefusalError& ex) {
    if (want_json) {
      out << ordered_json{{"error", "refused"}, {"reason", reason_code(ex.reason())},
                          {"message", ex.what()}}
                 .dump(2)
          << '\n';
    }
    err << "refused [" << reason_code(ex.reason()) << "]: " << ex.what() << '\n';
    return kRefused;
  } catch (const ConsistencyError& ex) {
    err << "consistency failure: " << ex.what() << '\n';
    return kInconsistent;
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace cubics::cli
