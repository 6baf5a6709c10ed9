#include "cli.hpp"

#include <wfano/serialize.hpp>
#include <wfano/verify.hpp>
#include <wfano/wfano.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace wfano::cli {
namespace {

// Raised for bad option values; reported on stderr with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScenarioOptions {
  std::string family = "pp-n1";
  std::string n, a, b, d, t;
  std::string spec;
  std::string spec_file;
};

struct CommonOptions {
  std::string format;  // empty selects the subcommand's default
  std::string out_file;
};

void add_scenario_options(CLI::App* cmd, ScenarioOptions& o) {
  cmd->add_option("--family", o.family, "pp-n1 | pp-n2 | pn-ex1 | pn-ex2 | pn-ex3")->capture_default_str();
  cmd->add_option("--n", o.n, "dimension n (value or lo..hi)");
  cmd->add_option("--a", o.a, "pp-n1: degree of U on P^{n-1}");
  cmd->add_option("--b", o.b, "pp-n1: degree of U on P^1");
  cmd->add_option("--d", o.d, "pp-n2: degree of the plane curve");
  cmd->add_option("--t", o.t, "pn families: number of points in C.S");
  cmd->add_option("--spec", o.spec, "scenario as key=value pairs, e.g. \"family=pp-n1 n=4 a=2 b=1\"");
  cmd->add_option("--spec-file", o.spec_file, "read the scenario spec from a file");
}

IntRange range_option(const std::string& name, const std::string& text) {
  try {
    return parse_range(text);
  } catch (const ParseError& e) {
    throw UsageError(name + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<Scenario> scenarios_from(const ScenarioOptions& o) {
  if (!o.spec.empty() || !o.spec_file.empty()) {
    if (!o.spec.empty() && !o.spec_file.empty()) throw UsageError("--spec and --spec-file are exclusive");
    if (!o.n.empty() || !o.a.empty() || !o.b.empty() || !o.d.empty() || !o.t.empty())
      throw UsageError("--spec cannot be combined with --n/--a/--b/--d/--t");
    const std::string text = o.spec.empty() ? read_file(o.spec_file) : o.spec;
    const std::string where = o.spec.empty() ? o.spec_file : "--spec";
    try {
      return {parse_scenario_spec(text)};
    } catch (const ParseError& e) {
      throw UsageError(where + ":" + e.what());
    }
  }
  const auto family = parse_family(o.family);
  if (!family) throw UsageError("--family: unknown family '" + o.family + "'");
  if (o.n.empty()) throw UsageError("--n is required");
  const auto n = range_option("--n", o.n);
  const auto require = [](const std::string& text, const char* name) {
    if (text.empty()) throw UsageError(std::string(name) + " is required for this family");
    return range_option(name, text);
  };
  const auto reject = [](const std::string& text, const char* name) {
    if (!text.empty()) throw UsageError(std::string(name) + " does not apply to this family");
  };
  switch (*family) {
    case Family::pp_n1:
      reject(o.d, "--d");
      reject(o.t, "--t");
      return main_grid(n, require(o.a, "--a"), require(o.b, "--b"));
    case Family::pp_n2:
      reject(o.a, "--a");
      reject(o.b, "--b");
      reject(o.t, "--t");
      return p2_grid(n, require(o.d, "--d"));
    default: {
      reject(o.a, "--a");
      reject(o.b, "--b");
      reject(o.d, "--d");
      if (o.t.empty()) return pn_grid(*family, n);
      std::vector<Scenario> out;
      const auto t = range_option("--t", o.t);
      for (int tt = t.lo; tt <= t.hi; ++tt)
        for (auto& s : pn_grid(*family, n, tt)) {
          s.t = tt;
          out.push_back(s);
        }
      return out;
    }
  }
}

Scenario single_scenario(const ScenarioOptions& o) {
  const auto all = scenarios_from(o);
  if (all.size() != 1) throw UsageError("this subcommand takes a single scenario, not a range");
  if (auto why = domain_violation(all.front())) throw UsageError(describe(all.front()) + ": " + *why);
  return all.front();
}

void report_skipped(const SweepResult& r, std::ostream& err) {
  for (const auto& s : r.skipped) err << "skipped " << describe(s.scenario) << ": " << s.reason << "\n";
}

void summarize_skipped(const SweepResult& r, std::ostream& err) {
  std::map<std::string, int> counts;
  for (const auto& s : r.skipped) ++counts[s.reason];
  for (const auto& [reason, count] : counts) err << "skipped " << count << " scenario(s): " << reason << "\n";
}

// ---------------------------------------------------------------------------

int cmd_classify(const ScenarioOptions& so, const CommonOptions& co, std::ostream& out, std::ostream& err) {
  const auto result = sweep(scenarios_from(so));
  report_skipped(result, err);
  out << (co.format == "json" ? to_json(result.rows) : to_csv(result.rows));
  return kOk;
}

int cmd_selfint(const ScenarioOptions& so, const CommonOptions& co, const std::string& method, bool stages,
                std::ostream& out) {
  const auto s = single_scenario(so);
  const bool has_closed = !is_projective_family(s.family);
  std::string m = method;
  if (m == "auto") m = has_closed ? "closed" : "pipeline";
  if (!has_closed && (m == "closed" || m == "both"))
    throw UsageError("no closed form for " + std::string(family_name(s.family)) + "; use --method pipeline");

  std::optional<Rational> closed;
  std::optional<PipelineStages> pipe;
  if (m == "closed" || m == "both") closed = selfint_for(s);
  if (m == "pipeline" || m == "both" || stages) pipe = pipeline_stages(s);
  const bool match = !(closed && pipe) || *closed == pipe->kx;

  if (co.format == "json") {
    Json j;
    j["scenario"] = describe(s);
    if (closed) j["closed"] = to_string(*closed);
    if (pipe && m != "closed") j["pipeline"] = to_string(pipe->kx);
    if (m == "both") j["match"] = match;
    if (stages && pipe) {
      j["stages"] = {{"Y", to_string(pipe->ky)},
                     {"Z", to_string(pipe->kz)},
                     {"Z~", to_string(pipe->kz_tilde)},
                     {"X~", to_string(pipe->kx)}};
    }
    out << j.dump(2) << "\n";
  } else {
    if (stages && pipe) {
      out << "(-K_Y)^" << s.n << " = " << to_string(pipe->ky) << "\n";
      out << "(-K_Z)^" << s.n << " = " << to_string(pipe->kz) << "\n";
      out << "(-K_Z~)^" << s.n << " = " << to_string(pipe->kz_tilde) << "\n";
      out << "(-K_X~)^" << s.n << " = " << to_string(pipe->kx) << "\n";
    }
    if (m == "both")
      out << "closed=" << to_string(*closed) << " pipeline=" << to_string(pipe->kx) << " "
          << (match ? "match" : "mismatch") << "\n";
    else if (m == "closed")
      out << to_string(*closed) << "\n";
    else if (!stages)
      out << to_string(pipe->kx) << "\n";
  }
  return match ? kOk : kCheckFailed;
}

int cmd_cone(const ScenarioOptions& so, const CommonOptions& co, std::ostream& out) {
  const auto s = single_scenario(so);
  const auto cp = cone_presentation(s);
  const auto K = anticanonical_class(s);
  const auto coeffs = decompose(K, cp.div_gens);
  const auto status = nef_status(coeffs);
  const auto matrix = pairing_matrix(cp.div_gens, cp.curve_gens);

  if (co.format == "json") {
    Json j;
    j["scenario"] = describe(s);
    j["nef_generators"] = Json::array();
    for (const auto& D : cp.div_gens) j["nef_generators"].push_back(format_class(D));
    j["curve_generators"] = Json::array();
    for (const auto& C : cp.curve_gens) j["curve_generators"].push_back(format_class(C));
    j["pairing"] = Json::array();
    for (const auto& row : matrix) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(to_string(x));
      j["pairing"].push_back(r);
    }
    j["kronecker"] = cp.verified;
    j["anticanonical"] = format_class(K);
    j["coeffs"] = Json::array();
    for (const auto& c : coeffs) j["coeffs"].push_back(to_string(c));
    j["nef_status"] = std::string(nef_status_name(status));
    out << j.dump(2) << "\n";
  } else {
    out << describe(s) << "\n";
    out << "nef generators:\n";
    for (std::size_t i = 0; i < cp.div_gens.size(); ++i)
      out << "  D" << i + 1 << " = " << format_class(cp.div_gens[i]) << "\n";
    out << "curve generators:\n";
    for (std::size_t i = 0; i < cp.curve_gens.size(); ++i)
      out << "  C" << i + 1 << " = " << format_class(cp.curve_gens[i]) << "\n";
    out << "pairing C_i.D_j:\n";
    for (const auto& row : matrix) {
      out << " ";
      for (const auto& x : row) out << " " << to_string(x);
      out << "\n";
    }
    out << "kronecker: " << (cp.verified ? "identity" : "FAILED") << "\n";
    out << "-K = " << format_class(K) << "\n";
    out << "coeffs:";
    for (const auto& c : coeffs) out << " " << to_string(c);
    out << "\n";
    out << "nef status: " << nef_status_name(status) << "\n";
  }
  return cp.verified ? kOk : kCheckFailed;
}

int cmd_verify(const std::string& suite_name, std::ostream& out) {
  const auto suite = parse_suite(suite_name);
  if (!suite) throw UsageError("--suite: unknown suite '" + suite_name + "'");
  const auto results = run_suite(*suite);
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.suite << "/" << r.name << " [" << r.params << "]";
    if (!r.passed) {
      out << " " << r.detail;
      ++failed;
    }
    out << "\n";
  }
  out << results.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? kOk : kCheckFailed;
}

std::string pair_list(const std::set<std::pair<int, int>>& pairs) {
  if (pairs.empty()) return "none";
  std::string out;
  for (const auto& [x, y] : pairs)
    out += (out.empty() ? "" : " ") + ("(" + std::to_string(x) + "," + std::to_string(y) + ")");
  return out;
}

// Per-n summary of the weak Fano and Fano parameters.
int cmd_table(ScenarioOptions so, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(so.family);
  if (!family) throw UsageError("--family: unknown family '" + so.family + "'");
  if (so.n.empty()) so.n = is_projective_family(*family) ? "4..8" : "3..10";
  if (*family == Family::pp_n1) {
    if (so.a.empty()) so.a = "0..8";
    if (so.b.empty()) so.b = "0..8";
  } else if (*family == Family::pp_n2 && so.d.empty()) {
    so.d = "1..4";
  }
  const auto result = sweep(scenarios_from(so));
  summarize_skipped(result, err);
  const auto n_range = range_option("--n", so.n);
  if (*family == Family::pp_n2) {
    // Parameter pairs are (n,d), so one line covers the whole range.
    std::set<std::pair<int, int>> weak, fano;
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
      weak.merge(parameter_set(result, n, is_weak_fano));
      fano.merge(parameter_set(result, n, [](Status s) { return s == Status::fano; }));
    }
    out << "family=pp-n2 n=" << so.n << " d=" << so.d << "\n";
    out << "  weak-fano (n,d): " << pair_list(weak) << "\n";
    out << "  fano (n,d): " << pair_list(fano) << "\n";
    return kOk;
  }
  if (*family == Family::pp_n1) {
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
      out << "family=pp-n1 n=" << n << "\n";
      out << "  weak-fano (a,b): " << pair_list(parameter_set(result, n, is_weak_fano)) << "\n";
      out << "  fano (a,b): "
          << pair_list(parameter_set(result, n, [](Status s) { return s == Status::fano; })) << "\n";
    }
    return kOk;
  }
  for (const auto& row : result.rows)
    out << describe(row.scenario) << " status=" << status_name(row.verdict.status)
        << " selfint=" << to_string(row.verdict.selfint) << "\n";
  return kOk;
}

constexpr const char* kFooter =
    "Ranges: --n, --a, --b, --d and --t take a value k or an inclusive range lo..hi\n"
    "(e.g. --n 3..10). Exit codes: 0 success, 1 check failure, 2 usage or parse error.";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact intersection numbers and weak Fano classification for double blow-ups of "
               "products of projective spaces.",
               "wfano"};
  app.footer(kFooter);
  app.require_subcommand(1);

  ScenarioOptions so;
  CommonOptions co;
  std::string method = "auto";
  std::string suite = "all";
  bool stages = false;

  const auto add_common = [&](CLI::App* cmd, std::vector<std::string> formats) {
    if (!formats.empty())
      cmd->add_option("--format", co.format, formats.front() + " (default) | " + formats.back())
          ->check(CLI::IsMember(formats));
    cmd->add_option("--out", co.out_file, "write output to FILE instead of stdout");
  };

  auto* classify_cmd = app.add_subcommand("classify", "classify scenarios and emit one row each");
  add_scenario_options(classify_cmd, so);
  add_common(classify_cmd, {"csv", "json"});

  auto* selfint_cmd = app.add_subcommand("selfint", "exact value of (-K)^n for one scenario");
  add_scenario_options(selfint_cmd, so);
  add_common(selfint_cmd, {"text", "json"});
  selfint_cmd->add_option("--method", method, "auto | closed | pipeline | both")
      ->check(CLI::IsMember({"auto", "closed", "pipeline", "both"}))
      ->capture_default_str();
  selfint_cmd->add_flag("--stages", stages, "also print the blow-up pipeline's intermediate values");

  auto* cone_cmd = app.add_subcommand("cone", "nef cone, curve cone, pairing matrix and -K coordinates");
  add_scenario_options(cone_cmd, so);
  add_common(cone_cmd, {"text", "json"});

  auto* verify_cmd = app.add_subcommand("verify", "run the built-in self-check suites");
  verify_cmd->add_option("--suite", suite, "identities | duality | oracle | all")
      ->check(CLI::IsMember({"identities", "duality", "oracle", "all"}))
      ->capture_default_str();
  add_common(verify_cmd, {});

  auto* table_cmd = app.add_subcommand("table", "weak Fano and Fano parameter sets per n");
  add_scenario_options(table_cmd, so);
  add_common(table_cmd, {});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (classify_cmd->parsed()) code = cmd_classify(so, co, buffer, err);
    else if (selfint_cmd->parsed()) code = cmd_selfint(so, co, method, stages, buffer);
    else if (cone_cmd->parsed()) code = cmd_cone(so, co, buffer);
    else if (verify_cmd->parsed()) code = cmd_verify(suite, buffer);
    else if (table_cmd->parsed()) code = cmd_table(so, buffer, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (co.out_file.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(co.out_file, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << co.out_file << "\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace wfano::cli
