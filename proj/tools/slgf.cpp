// slgf: tables, series dumps and cross-verification from the command line.

#include "slgf/cycleindex.hpp"
#include "slgf/genfun.hpp"
#include "slgf/graphoracle.hpp"
#include "slgf/render.hpp"
#include "slgf/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace slgf;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

const char* const kReferenceGrids[] = {
#include "reference_grids.inc"
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::optional<int> r;
  std::string m;
  std::string d;
  std::optional<int> t_max;
  std::optional<int> truncation;
  std::optional<int> x_max;
  std::string format = "text";
  std::string output;
  std::string dump_series;
  // table / supercharacter
  std::optional<int> genus;
  // homology
  std::optional<int> dims_genus;
  // supercharacter
  std::string twist = "plain";
  std::optional<int> weight;
  bool feynman = false;
  // verify
  std::vector<std::string> only;
  std::string fault;
  // oracle
  std::vector<int> hairs;
  std::optional<int> complexity;
  int max_t = OracleBudget{}.max_complexity;
  int max_hairs = OracleBudget{}.max_hairs;
};

std::optional<int> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t pos = 0;
  try {
    int v = std::stoi(s, &pos);
    if (pos != s.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

int default_t_max() {
  const char* env = std::getenv("SLGF_T_MAX");
  if (!env || !*env) return 8;
  auto v = parse_int(env);
  if (!v || *v < 0) throw UsageError(std::string("SLGF_T_MAX must be a nonnegative integer, got '") + env + "'");
  return *v;
}

int t_max_of(const RunConfig& rc) {
  int t = rc.t_max ? *rc.t_max : default_t_max();
  if (t < 0) throw UsageError("--t-max must be >= 0");
  if (rc.truncation && t > *rc.truncation) throw UsageError("--t-max exceeds --truncation");
  return t;
}

int truncation_of(const RunConfig& rc) { return rc.truncation ? *rc.truncation : t_max_of(rc); }

// m entries are integers or odd/even; parity words anywhere make the whole
// configuration parity-only.
LinkConfig link_config(const RunConfig& rc) {
  if (rc.m.empty()) throw UsageError("--m is required");
  if (rc.d.empty()) throw UsageError("--d is required");
  auto tokens = split(rc.m);
  if (tokens.empty()) throw UsageError("--m is empty");
  if (rc.r) {
    if (*rc.r < 1) throw UsageError("--r must be >= 1");
    if (tokens.size() == 1) tokens.assign(static_cast<std::size_t>(*rc.r), tokens[0]);
    if (static_cast<int>(tokens.size()) != *rc.r) throw UsageError("--m lists " + std::to_string(tokens.size()) + " entries but --r is " + std::to_string(*rc.r));
  }
  bool exact = true;
  std::vector<int> m;
  std::vector<bool> m_odd;
  for (const auto& t : tokens) {
    if (t == "odd" || t == "even") {
      exact = false;
      m.push_back(0);
      m_odd.push_back(t == "odd");
    } else if (auto v = parse_int(t); v && *v >= 1) {
      m.push_back(*v);
      m_odd.push_back(*v % 2 != 0);
    } else {
      throw UsageError("--m entries must be positive integers or odd/even, got '" + t + "'");
    }
  }
  bool d_odd;
  std::optional<int> d;
  if (rc.d == "odd" || rc.d == "even") {
    exact = false;
    d_odd = rc.d == "odd";
  } else if (auto v = parse_int(rc.d); v && *v >= 2) {
    d = v;
    d_odd = *v % 2 != 0;
  } else {
    throw UsageError("--d must be an integer >= 2 or odd/even, got '" + rc.d + "'");
  }
  if (exact) return LinkConfig(m, *d);
  return LinkConfig::from_parities(m_odd, d_odd);
}

void warn_validity(const LinkConfig& cfg) {
  if (cfg.exact_dimensions() && !cfg.in_validity_range()) {
    std::cerr << "warning: d <= 2 max(m_i) + 1; the series is computed formally outside the range where it "
                 "is known to describe the embedding space\n";
  }
}

void emit(const RunConfig& rc, const std::string& text) {
  if (rc.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(rc.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + rc.output + " for writing");
  out << text;
}

void dump(const RunConfig& rc, const TruncatedSeries& s) {
  if (rc.dump_series.empty()) return;
  std::ofstream out(rc.dump_series, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + rc.dump_series + " for writing");
  out << to_text(s) << "\n";
}

// Drops terms of u-degree above t_max when the series was computed wider.
TruncatedSeries clip_u(const TruncatedSeries& s, int t_max) {
  if (!s.vars().has_u() || s.spec().u_max <= t_max) return s;
  TruncatedSeries out(s.vars(), s.spec());
  int ui = s.vars().at(Var::u());
  for (const auto& [m, c] : s.terms()) {
    if (m[ui] <= t_max) out.add_term(m, c);
  }
  return out;
}

int cmd_homology(const RunConfig& rc) {
  const Format fmt = parse_format(rc.format);
  const int t = t_max_of(rc);
  const int T = truncation_of(rc);
  if (rc.dims_genus) {
    auto cfg = link_config(rc);
    if (!cfg.exact_dimensions()) throw UsageError("--dims-genus needs integer --m and --d");
    warn_validity(cfg);
    if (*rc.dims_genus != 0 && *rc.dims_genus != 1) throw UsageError("--dims-genus must be 0 or 1");
    auto s = *rc.dims_genus == 0 ? genus0_dims(cfg, T) : genus1_dims(cfg, T);
    dump(rc, s);
    emit(rc, render_series(clip_u(s, t), fmt));
    return kExitOk;
  }
  if (t == 0 && rc.m.empty() && rc.d.empty()) {
    // F^H = 1 + O(u) for every configuration.
    auto s = f_homology(LinkConfig::from_parities({true}, true), 0);
    dump(rc, s);
    emit(rc, render_series(s, fmt));
    return kExitOk;
  }
  auto cfg = link_config(rc);
  warn_validity(cfg);
  TruncationSpec spec;
  spec.u_max = T;
  spec.x_max = rc.x_max ? *rc.x_max : 2 * T;
  if (spec.x_max < 0) throw UsageError("--x-max must be >= 0");
  auto s = f_homology(cfg, spec);
  dump(rc, s);
  emit(rc, render_series(clip_u(s, t), fmt));
  return kExitOk;
}

int cmd_table(const RunConfig& rc) {
  const Format fmt = parse_format(rc.format);
  if (!rc.genus) throw UsageError("--genus is required");
  if (*rc.genus < 0) throw UsageError("--genus must be >= 0");
  const int t = t_max_of(rc);
  const int T = truncation_of(rc);
  std::optional<LinkConfig> cfg;
  if (t == 0 && rc.m.empty() && rc.d.empty()) {
    cfg = LinkConfig::from_parities({true, true}, true);
  } else {
    cfg = link_config(rc);
    warn_validity(*cfg);
  }
  auto fpi = f_homotopy_direct(*cfg, T);
  dump(rc, fpi);
  emit(rc, render_table(euler_table_from(fpi, cfg->r(), *rc.genus, t), fmt));
  return kExitOk;
}

int cmd_supercharacter(const RunConfig& rc) {
  const Format fmt = parse_format(rc.format);
  Twist tw;
  if (rc.twist == "plain") {
    tw = Twist::kPlain;
  } else if (rc.twist == "det") {
    tw = Twist::kDet;
  } else {
    throw UsageError("--twist must be plain or det, got '" + rc.twist + "'");
  }
  if (!rc.weight) throw UsageError("--weight is required");
  if (*rc.weight < 0) throw UsageError("--weight must be >= 0");
  const int G = rc.genus ? *rc.genus : 2;
  if (G < 0) throw UsageError("--genus must be >= 0");
  auto Z = mod_envelope_supercharacter(tw, *rc.weight, G);
  if (rc.feynman) Z = feynman_regrade(Z);
  dump(rc, Z);
  // no positive-arity terms: nothing to print in text form
  emit(rc, Z.is_zero() && fmt == Format::kText ? std::string() : render_series(Z, fmt));
  return kExitOk;
}

std::optional<ReferenceGrid> reference_grid(int genus) {
  if (genus < 0 || genus > 3) return std::nullopt;
  std::istringstream in(kReferenceGrids[genus]);
  ReferenceGrid grid;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string v;
    row >> v;  // t
    std::vector<Integer> values;
    while (row >> v) values.emplace_back(v);
    grid.push_back(std::move(values));
  }
  return grid;
}

int cmd_verify(const RunConfig& rc) {
  const Format fmt = parse_format(rc.format);
  if (fmt == Format::kCsv) throw UsageError("verify supports text and json output");
  if (!rc.fault.empty() && rc.fault != "f-sign") throw UsageError("unknown fault '" + rc.fault + "'");
  VerifyOptions o;
  o.t_max = t_max_of(rc);
  o.only.insert(rc.only.begin(), rc.only.end());
  o.fault = rc.fault;
  o.reference = reference_grid;
  std::vector<CheckResult> results;
  try {
    results = run_verification(o);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;

  std::ostringstream os;
  if (fmt == Format::kJson) {
    nlohmann::json j;
    j["t_max"] = o.t_max;
    j["failed"] = failed;
    j["checks"] = nlohmann::json::array();
    for (const auto& r : results) {
      nlohmann::json c{{"group", r.group}, {"name", r.name}, {"status", r.note ? "note" : (r.passed ? "pass" : "fail")},
                       {"detail", r.detail}};
      if (!r.location.empty()) {
        c["location"] = r.location;
        c["expected"] = r.expected;
        c["actual"] = r.actual;
      }
      j["checks"].push_back(c);
    }
    os << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      os << (r.note ? "NOTE" : (r.passed ? "PASS" : "FAIL")) << " " << r.group << "/" << r.name;
      if (!r.detail.empty()) os << " [" << r.detail << "]";
      if (!r.location.empty()) os << " at " << r.location << ": expected " << r.expected << ", got " << r.actual;
      os << "\n";
    }
    os << results.size() << " checks, " << failed << " failed\n";
  }
  emit(rc, os.str());
  return failed ? kExitFailure : kExitOk;
}

int cmd_oracle(const RunConfig& rc) {
  const Format fmt = parse_format(rc.format);
  if (fmt == Format::kCsv) throw UsageError("oracle supports text and json output");
  if (rc.hairs.empty()) throw UsageError("--s is required");
  if (!rc.complexity) throw UsageError("--t is required");
  RunConfig sized = rc;
  sized.r = static_cast<int>(rc.hairs.size());
  auto cfg = link_config(sized);
  OracleBudget budget{rc.max_t, rc.max_hairs};
  std::vector<HairyGraphClass> classes;
  try {
    classes = enumerate_classes(cfg, rc.hairs, *rc.complexity, budget);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  long chi = 0;
  for (const auto& c : classes) chi += c.sign();
  std::ostringstream os;
  if (fmt == Format::kJson) {
    nlohmann::json j{{"s", rc.hairs},
                     {"t", *rc.complexity},
                     {"genus", *rc.complexity + 1 - std::accumulate(rc.hairs.begin(), rc.hairs.end(), 0)},
                     {"euler_characteristic", chi},
                     {"classes", classes_json(classes)}};
    os << j.dump(2) << "\n";
  } else {
    for (const auto& c : classes) {
      os << c.key << " degree=" << c.degree << " " << (c.killed ? "killed" : "alive") << " sign=" << c.sign() << "\n";
    }
    os << "chi=" << chi << "\n";
  }
  emit(rc, os.str());
  return kExitOk;
}

void add_common(CLI::App* sub, RunConfig& rc, bool series_options) {
  sub->add_option("--r", rc.r, "number of components");
  sub->add_option("--m", rc.m, "source dimensions: integers or odd/even, comma separated");
  sub->add_option("--d", rc.d, "ambient dimension: integer or odd/even");
  sub->add_option("--format", rc.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  sub->add_option("--output", rc.output, "write to this file instead of standard output");
  if (series_options) {
    sub->add_option("--t-max", rc.t_max, "largest complexity t (default $SLGF_T_MAX, else 8)");
    sub->add_option("--truncation", rc.truncation, "series truncation T >= t-max");
    sub->add_option("--dump-series", rc.dump_series, "also write the underlying series in canonical text form");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler characteristic generating functions of string-link spaces"};
  app.require_subcommand(1);
  RunConfig rc;

  auto* homology = app.add_subcommand("homology", "the homology series F^H");
  add_common(homology, rc, true);
  homology->add_option("--x-max", rc.x_max, "total Hodge degree bound (default 2 x truncation, complete through u^T)");
  homology->add_option("--dims-genus", rc.dims_genus, "genus 0 or 1 dimension series (integer --m, --d only)");

  auto* table = app.add_subcommand("table", "Euler characteristic table of one genus");
  add_common(table, rc, true);
  table->add_option("--genus", rc.genus, "genus g");

  auto* super = app.add_subcommand("supercharacter", "positive-arity supercharacter of the modular envelope");
  super->add_option("--twist", rc.twist, "plain or det");
  super->add_option("--weight", rc.weight, "largest arity");
  super->add_option("--genus", rc.genus, "largest genus (default 2)");
  super->add_flag("--feynman-regrade", rc.feynman, "apply the Feynman-transform regrading");
  super->add_option("--format", rc.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  super->add_option("--output", rc.output, "write to this file instead of standard output");
  super->add_option("--dump-series", rc.dump_series, "also write the series in canonical text form");

  auto* verify = app.add_subcommand("verify", "run the cross-verification suite");
  verify->add_option("--only", rc.only, "groups to run: special, routes, genus, cycleindex, tables, oracle")->delimiter(',');
  verify->add_option("--t-max", rc.t_max, "complexity bound for the checks (default $SLGF_T_MAX, else 8)");
  verify->add_option("--format", rc.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--output", rc.output, "write to this file instead of standard output");
  verify->add_option("--inject-fault", rc.fault, "diagnostic: f-sign flips F_l before it is checked");

  auto* oracle = app.add_subcommand("oracle", "enumerate hairy graphs for one (s, t) cell");
  oracle->add_option("--s", rc.hairs, "hairs per colour, comma separated")->delimiter(',');
  oracle->add_option("--t", rc.complexity, "complexity t");
  oracle->add_option("--m", rc.m, "source dimensions: integers or odd/even");
  oracle->add_option("--d", rc.d, "ambient dimension: integer or odd/even");
  oracle->add_option("--max-t", rc.max_t, "enumeration budget on t");
  oracle->add_option("--max-hairs", rc.max_hairs, "enumeration budget on the number of hairs");
  oracle->add_option("--format", rc.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  oracle->add_option("--output", rc.output, "write to this file instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*homology) return cmd_homology(rc);
    if (*table) return cmd_table(rc);
    if (*super) return cmd_supercharacter(rc);
    if (*verify) return cmd_verify(rc);
    if (*oracle) return cmd_oracle(rc);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
