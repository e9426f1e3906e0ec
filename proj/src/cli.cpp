#include "raypf/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "raypf/analytic.hpp"
#include "raypf/budget.hpp"
#include "raypf/exact_core.hpp"
#include "raypf/lgv_network.hpp"
#include "raypf/real_roots.hpp"
#include "raypf/report_json.hpp"
#include "raypf/total_positivity.hpp"
#include "raypf/transition.hpp"

namespace raypf::cli {
namespace {

enum class Status { Pass, Fail, BudgetExceeded, NotApplicable };

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::BudgetExceeded: return "budget_exceeded";
    case Status::NotApplicable: return "not_applicable";
  }
  return "unknown";
}

struct Outcome {
  Status status = Status::Pass;
  Json result;
};

int exit_code(Status s) {
  switch (s) {
    case Status::Pass:
    case Status::NotApplicable: return kAllPassed;
    case Status::Fail: return kCheckFailed;
    case Status::BudgetExceeded: return kUsageError;
  }
  return kUsageError;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Quadruple {
  std::int64_t n = -1, k = -1, a = -1, b = -1;

  bool given() const { return n >= 0 || k >= 0 || a >= 0 || b >= 0; }
  RayParams params() const {
    if (n < 0 || k < 0 || a < 0 || b < 0) throw UsageError("--n, --k, --a and --b are all required");
    return RayParams(n, k, a, b);
  }
};

void add_quadruple(CLI::App* cmd, Quadruple& q) {
  cmd->add_option("--n", q.n, "n >= k >= 0");
  cmd->add_option("--k", q.k, "k");
  cmd->add_option("--a", q.a, "step in n (a > 0)");
  cmd->add_option("--b", q.b, "step in k (b > 0)");
}

SequenceKind parse_kind(const std::string& s) {
  if (s == "binomial") return SequenceKind::Binomial;
  if (s == "delannoy") return SequenceKind::Delannoy;
  throw UsageError("unknown --kind '" + s + "' (binomial|delannoy)");
}

std::vector<BigInt> parse_sequence(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
      throw UsageError("--seq expects comma-separated nonnegative integers");
    out.emplace_back(item);
  }
  if (out.empty()) throw UsageError("--seq is empty");
  return out;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

// ---- checks shared by the subcommands and the sweep ----

Outcome check_pf(const std::vector<BigInt>& values, int order, int window, std::uint64_t budget) {
  try {
    const PfVerdict v = is_pf_upto(std::span<const BigInt>(values), order, window, budget);
    return {v.passed ? Status::Pass : Status::Fail, to_json(v)};
  } catch (const BudgetExceeded& e) {
    return {Status::BudgetExceeded, Json{{"error", e.what()}}};
  }
}

Outcome check_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw UsageError("the zero polynomial has no root verdict");
  const IntPolynomial q = square_free_part(p);
  const bool real = all_roots_real(p);
  Json out{{"polynomial", to_json(p)},
           {"degree", p.degree()},
           {"square_free_degree", q.degree()},
           {"distinct_real_roots", count_distinct_real_roots(p)},
           {"all_roots_real", real}};
  return {real ? Status::Pass : Status::Fail, std::move(out)};
}

Outcome check_lgv(const RayParams& params, int window, int order, bool delannoy,
                  std::uint64_t minor_budget, std::uint64_t enum_budget) {
  try {
    const LgvReport report = verify_lgv(params, window, order, delannoy, minor_budget, enum_budget);
    return {report.passed() ? Status::Pass : Status::Fail, to_json(report)};
  } catch (const BudgetExceeded& e) {
    return {Status::BudgetExceeded, Json{{"error", e.what()}}};
  }
}

Outcome check_classify(const RayParams& params, int jmax, double x_max) {
  const TransitionProfile profile = classify(params, jmax);
  std::optional<double> x_star;
  Json out;
  try {
    x_star = predict_transition(params, x_max);
    out = to_json(profile, x_star, watson_ratio(params, 1e3));
  } catch (const AnalyticFault& e) {
    out = to_json(profile, std::nullopt, watson_ratio(params, 1e3));
    out["analytic_fault"] = e.what();
    return {Status::Fail, std::move(out)};
  }
  return {profile.monotone_ok ? Status::Pass : Status::Fail, std::move(out)};
}

Outcome check_theorem1(const RayParams& params, int jmax) {
  const Theorem1Verdict v = theorem1_check(params, jmax);
  const AnalyticParams ap = AnalyticParams::from_ray(params);
  Json out{{"params", to_json(params)}, {"jMax", jmax}, {"u", rational_json(ap.u())}};
  switch (v) {
    case Theorem1Verdict::Pass: out["verdict"] = "pass"; return {Status::Pass, out};
    case Theorem1Verdict::Fail: out["verdict"] = "fail"; return {Status::Fail, out};
    case Theorem1Verdict::NotApplicable:
      out["verdict"] = "regime not applicable";
      return {Status::NotApplicable, out};
  }
  return {Status::Fail, out};
}

Outcome check_analytic(const RayParams& params, const std::vector<double>& xs, double x_max,
                       double t_max) {
  const AnalyticParams ap = AnalyticParams::from_ray(params);
  Status status = Status::Pass;
  Json values = Json::array();
  for (double x : xs) {
    const double direct = g_second(params, x);
    Json row{{"x", x}, {"trigamma", direct}};
    try {
      const auto quad = g_second_quadrature_detailed(params, x);
      const double rel = std::abs(direct - quad.value) / std::abs(direct);
      row["quadrature"] = quad.value;
      row["quadrature_error"] = quad.error_estimate;
      row["relative_difference"] = rel;
      if (!(rel <= 1e-8)) status = Status::Fail;
    } catch (const QuadratureError& e) {
      row["quadrature_fault"] = e.what();
      status = Status::Fail;
    }
    values.push_back(std::move(row));
  }

  Json out{{"params", to_json(params)},
           {"u", rational_json(ap.u())},
           {"p", rational_json(ap.p())},
           {"q", rational_json(ap.q())},
           {"g_second", std::move(values)},
           {"watson_ratio", watson_ratio(params, 1e3)},
           {"h_near_zero", h_eval(ap, 1e-4)}};

  try {
    const auto x_star = predict_transition(params, x_max);
    out["x_star"] = x_star ? Json(*x_star) : Json(nullptr);
  } catch (const AnalyticFault& e) {
    out["x_star"] = nullptr;
    out["g_fault"] = e.what();
    status = Status::Fail;
  }
  try {
    const auto root = h_root(ap, t_max);
    out["h_root"] = root ? Json(*root) : Json(nullptr);
  } catch (const AnalyticFault& e) {
    out["h_root"] = nullptr;
    out["h_fault"] = e.what();
    status = Status::Fail;
  }
  const int g_changes = count_sign_changes([&](double x) { return g_second(params, x); }, 0.0,
                                           x_max, 5000);
  const int h_changes = h_sign_changes(ap, t_max, 5000);
  out["g_sign_changes"] = g_changes;
  out["h_sign_changes"] = h_changes;
  if (g_changes > h_changes) status = Status::Fail;
  return {status, std::move(out)};
}

// ---- sweep ----

struct SweepSpec {
  std::vector<std::string> checks;
  Regime regime = Regime::PolyaFrequency;
  std::int64_t n_lo = 0, n_hi = 0, k_lo = 0, k_hi = 0, a_lo = 1, a_hi = 1, b_lo = 1, b_hi = 1;
  int window = 8, max_order = 4, jmax = 64;
  std::uint64_t minor_cap = default_minor_budget();
  std::uint64_t enum_cap = default_enumeration_budget();
  bool delannoy = false;
  std::string output;
};

SweepSpec parse_sweep_spec(const Json& j) {
  if (!j.is_object()) throw UsageError("sweep spec must be a JSON object");
  SweepSpec s;
  auto range = [&j](const char* name, std::int64_t& lo, std::int64_t& hi) {
    if (!j.contains(name)) throw UsageError(std::string("sweep spec missing range '") + name + "'");
    const auto& r = j.at(name);
    if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer())
      throw UsageError(std::string("range '") + name + "' must be [lo, hi]");
    lo = r[0].get<std::int64_t>();
    hi = r[1].get<std::int64_t>();
    if (lo > hi) throw UsageError(std::string("range '") + name + "' has lo > hi");
  };
  range("n", s.n_lo, s.n_hi);
  range("k", s.k_lo, s.k_hi);
  range("a", s.a_lo, s.a_hi);
  range("b", s.b_lo, s.b_hi);

  const std::string regime = j.value("regime", std::string("pf"));
  if (regime == "pf") s.regime = Regime::PolyaFrequency;
  else if (regime == "transition") s.regime = Regime::Transition;
  else throw UsageError("regime must be 'pf' or 'transition'");

  if (j.contains("checks")) {
    for (const auto& c : j.at("checks")) s.checks.push_back(c.get<std::string>());
  } else if (s.regime == Regime::PolyaFrequency) {
    s.checks = {"roots", "pf-check"};
  } else {
    s.checks = {"classify"};
  }
  static const std::set<std::string> pf_checks{"roots", "pf-check", "lgv"};
  static const std::set<std::string> tr_checks{"classify", "theorem1"};
  for (const auto& c : s.checks) {
    const auto& allowed = s.regime == Regime::PolyaFrequency ? pf_checks : tr_checks;
    if (!allowed.contains(c)) throw UsageError("check '" + c + "' not available for this regime");
  }

  s.window = j.value("window", s.window);
  s.max_order = j.value("max_order", s.max_order);
  s.jmax = j.value("jmax", s.jmax);
  s.minor_cap = j.value("minor_cap", s.minor_cap);
  s.enum_cap = j.value("enum_cap", s.enum_cap);
  s.delannoy = j.value("delannoy", false);
  s.output = j.value("output", std::string());
  return s;
}

bool fits_regime(const SweepSpec& s, std::int64_t n, std::int64_t k, std::int64_t a, std::int64_t b) {
  if (k < 0 || n < k || a <= 0 || b <= 0) return false;
  if (s.regime == Regime::PolyaFrequency) return b > a && k < b;
  return a > b;
}

Json sweep_key(const SweepSpec& s, const std::string& check, const RayParams& p) {
  Json key{{"check", check}, {"n", p.n()}, {"k", p.k()}, {"a", p.a()}, {"b", p.b()}};
  if (check == "pf-check") {
    key["window"] = s.window;
    key["max_order"] = s.max_order;
    key["delannoy"] = s.delannoy;
  } else if (check == "roots") {
    key["delannoy"] = s.delannoy;
  } else if (check == "lgv") {
    key["window"] = s.window;
    key["max_order"] = s.max_order;
    key["delannoy"] = s.delannoy;
    key["enum_cap"] = s.enum_cap;
  } else {
    key["jmax"] = s.jmax;
  }
  return key;
}

Outcome run_sweep_check(const SweepSpec& s, const std::string& check, const RayParams& p) {
  const auto kind = s.delannoy ? SequenceKind::Delannoy : SequenceKind::Binomial;
  if (check == "roots") return check_roots(from_sequence(ray_sequence(p, pf_support_length(p), kind)));
  if (check == "pf-check") {
    const std::size_t len = std::max<std::size_t>(static_cast<std::size_t>(s.window), pf_support_length(p));
    return check_pf(ray_sequence(p, len, kind).values, s.max_order, s.window, s.minor_cap);
  }
  if (check == "lgv") return check_lgv(p, s.window, s.max_order, s.delannoy, s.minor_cap, s.enum_cap);
  if (check == "classify") return check_classify(p, s.jmax, static_cast<double>(s.jmax));
  return check_theorem1(p, s.jmax);
}

int run_sweep(const std::string& spec_path, const std::string& output_override, std::ostream& out,
              std::ostream& err) {
  std::ifstream in(spec_path);
  if (!in) throw UsageError("cannot open sweep spec '" + spec_path + "'");
  Json spec_json;
  try {
    spec_json = Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed sweep spec: ") + e.what());
  }
  SweepSpec spec;
  try {
    spec = parse_sweep_spec(spec_json);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed sweep spec: ") + e.what());
  }
  if (!output_override.empty()) spec.output = output_override;
  if (spec.output.empty()) throw UsageError("sweep needs an output path ('output' or --output)");

  // Previously recorded keys and their statuses.
  std::map<std::string, std::string> recorded;
  bool needs_newline = false;
  if (std::ifstream existing(spec.output); existing) {
    std::string line;
    while (std::getline(existing, line)) {
      if (line.empty()) continue;
      try {
        const Json rec = Json::parse(line);
        recorded[rec.at("key").dump()] = rec.at("status").get<std::string>();
      } catch (const Json::exception&) {
        err << "ignoring malformed results line\n";
      }
    }
    existing.clear();
    existing.seekg(0, std::ios::end);
    if (existing.tellg() > 0) {
      existing.seekg(-1, std::ios::end);
      needs_newline = existing.get() != '\n';
    }
  }

  std::ofstream sink(spec.output, std::ios::app);
  if (!sink) throw UsageError("cannot open results file '" + spec.output + "'");
  if (needs_newline) sink << '\n';

  std::size_t computed = 0, skipped = 0, failed = 0, over_budget = 0;
  auto tally = [&](const std::string& status) {
    if (status == "fail") ++failed;
    if (status == "budget_exceeded") ++over_budget;
  };
  for (std::int64_t n = spec.n_lo; n <= spec.n_hi; ++n)
    for (std::int64_t k = spec.k_lo; k <= spec.k_hi; ++k)
      for (std::int64_t a = spec.a_lo; a <= spec.a_hi; ++a)
        for (std::int64_t b = spec.b_lo; b <= spec.b_hi; ++b) {
          if (!fits_regime(spec, n, k, a, b)) continue;
          const RayParams p(n, k, a, b);
          for (const auto& check : spec.checks) {
            const Json key = sweep_key(spec, check, p);
            const std::string key_text = key.dump();
            if (auto it = recorded.find(key_text); it != recorded.end()) {
              ++skipped;
              tally(it->second);
              continue;
            }
            const Outcome o = run_sweep_check(spec, check, p);
            const std::string status(to_string(o.status));
            Json record{{"key", key},
                        {"status", status},
                        {"result", o.result},
                        {"meta", Json{{"recorded_at", utc_timestamp()}}}};
            sink << record.dump() << '\n';
            sink.flush();
            recorded[key_text] = status;
            ++computed;
            tally(status);
          }
        }

  out << Json{{"computed", computed},
              {"skipped", skipped},
              {"failed", failed},
              {"budget_exceeded", over_budget},
              {"output", spec.output}}
             .dump()
      << '\n';
  if (over_budget > 0) return kUsageError;
  return failed > 0 ? kCheckFailed : kAllPassed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric checks for rays of Pascal's triangle", "raypf"};
  app.require_subcommand(1);

  Quadruple q;
  std::string kind_name = "binomial";
  std::string format = "csv";
  std::string seq_text;
  std::string dot_path;
  std::string spec_path;
  std::string output_path;
  std::size_t length = 0;
  int window = 0, order = 0, jmax = 64;
  double x_max = 0.0, t_max = 100.0;
  bool delannoy = false;
  std::vector<double> xs{0.0, 0.5, 1.0, 2.0, 5.0, 10.0};
  std::uint64_t minor_budget = default_minor_budget();
  std::uint64_t enum_budget = default_enumeration_budget();

  auto* gen = app.add_subcommand("gen", "Emit a ray sequence as CSV or JSON");
  add_quadruple(gen, q);
  gen->add_option("--len", length, "number of terms (default: full support, or 64)");
  gen->add_option("--kind", kind_name, "binomial|delannoy");
  gen->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  auto* pf = app.add_subcommand("pf-check", "Windowed total-positivity check");
  add_quadruple(pf, q);
  pf->add_option("--seq", seq_text, "explicit sequence u_0,u_1,...");
  pf->add_option("--kind", kind_name, "binomial|delannoy");
  pf->add_option("--order", order, "largest minor order (default 4)");
  pf->add_option("--window", window, "window size (default 8)");
  pf->add_option("--budget", minor_budget, "cap on the number of minors");

  auto* roots = app.add_subcommand("roots", "Exact real-rootedness of the generating polynomial");
  add_quadruple(roots, q);
  roots->add_option("--seq", seq_text, "explicit coefficients c_0,c_1,...");
  roots->add_option("--kind", kind_name, "binomial|delannoy");

  auto* lgv = app.add_subcommand("lgv", "Lattice-network path matrix and disjoint-path identities");
  add_quadruple(lgv, q);
  lgv->add_option("--window", window, "number of sources and sinks (default 5)");
  lgv->add_option("--order", order, "largest minor order (default 2)");
  lgv->add_flag("--delannoy", delannoy, "add diagonal edges");
  lgv->add_option("--dot", dot_path, "write the network as Graphviz text");
  lgv->add_option("--budget", minor_budget, "cap on the number of minors");
  lgv->add_option("--enum-budget", enum_budget, "cap on search states per minor");

  auto* cls = app.add_subcommand("classify", "Exact log-concavity signs for a > b");
  add_quadruple(cls, q);
  cls->add_option("--jmax", jmax, "last triple index (default 64)");
  cls->add_option("--xmax", x_max, "scan range for x* (default jmax)");

  auto* ana = app.add_subcommand("analytic", "g'' by two routes, x*, Watson ratio, h diagnostics");
  add_quadruple(ana, q);
  ana->add_option("--x", xs, "evaluation points for g''")->delimiter(',');
  ana->add_option("--xmax", x_max, "scan range for x* (default 100)");
  ana->add_option("--tmax", t_max, "scan range for the root of h (default 100)");

  auto* sweep = app.add_subcommand("sweep", "Run a JSON sweep spec, appending to a results file");
  sweep->add_option("--spec", spec_path, "sweep spec file")->required();
  sweep->add_option("--output", output_path, "results file (overrides the spec)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAllPassed;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  try {
    const SequenceKind kind = parse_kind(kind_name);

    if (gen->parsed()) {
      const RayParams p = q.params();
      std::size_t len = length;
      if (len == 0)
        len = p.regime() == Regime::PolyaFrequency ? pf_support_length(p) : std::size_t{64};
      const RaySequence seq = ray_sequence(p, len, kind);
      if (format == "json") {
        out << to_json(seq).dump() << '\n';
      } else {
        out << "j,value\n";
        for (std::size_t j = 0; j < seq.values.size(); ++j)
          out << j << ',' << to_decimal(seq.values[j]) << '\n';
      }
      return kAllPassed;
    }

    if (pf->parsed()) {
      if (window == 0) window = 8;
      if (order == 0) order = 4;
      std::vector<BigInt> values;
      Json header;
      if (!seq_text.empty()) {
        if (q.given()) throw UsageError("use either --seq or the quadruple, not both");
        values = parse_sequence(seq_text);
      } else {
        const RayParams p = q.params();
        std::size_t len = static_cast<std::size_t>(window);
        if (p.regime() == Regime::PolyaFrequency) len = std::max(len, pf_support_length(p));
        values = ray_sequence(p, len, kind).values;
        header = to_json(p);
      }
      Outcome o = check_pf(values, order, window, minor_budget);
      Json doc{{"check", "pf-check"}, {"status", std::string(to_string(o.status))}, {"result", o.result}};
      if (!header.is_null()) doc["params"] = header;
      out << doc.dump() << '\n';
      if (o.status == Status::BudgetExceeded) err << o.result.at("error").get<std::string>() << '\n';
      return exit_code(o.status);
    }

    if (roots->parsed()) {
      IntPolynomial poly;
      Json header;
      if (!seq_text.empty()) {
        if (q.given()) throw UsageError("use either --seq or the quadruple, not both");
        poly = IntPolynomial(parse_sequence(seq_text));
      } else {
        const RayParams p = q.params();
        if (p.regime() != Regime::PolyaFrequency)
          throw UsageError("the generating polynomial is finite only in the PF regime (b > a)");
        poly = from_sequence(ray_sequence(p, pf_support_length(p), kind));
        header = to_json(p);
      }
      Outcome o = check_roots(poly);
      Json doc{{"check", "roots"}, {"status", std::string(to_string(o.status))}, {"result", o.result}};
      if (!header.is_null()) doc["params"] = header;
      out << doc.dump() << '\n';
      return exit_code(o.status);
    }

    if (lgv->parsed()) {
      if (window == 0) window = 5;
      if (order == 0) order = 2;
      const RayParams p = q.params();
      if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        if (!dot) throw UsageError("cannot write '" + dot_path + "'");
        dot << export_dot(build_network(p, window, delannoy));
      }
      Outcome o = check_lgv(p, window, order, delannoy, minor_budget, enum_budget);
      out << Json{{"check", "lgv"}, {"status", std::string(to_string(o.status))}, {"result", o.result}}.dump()
          << '\n';
      if (o.status == Status::BudgetExceeded) err << o.result.at("error").get<std::string>() << '\n';
      return exit_code(o.status);
    }

    if (cls->parsed()) {
      const RayParams p = q.params();
      Outcome o = check_classify(p, jmax, x_max > 0 ? x_max : static_cast<double>(jmax));
      out << o.result.dump() << '\n';
      return exit_code(o.status);
    }

    if (ana->parsed()) {
      const RayParams p = q.params();
      if (p.regime() != Regime::Transition)
        throw UsageError("analytic diagnostics apply to the Transition regime (a > b)");
      Outcome o = check_analytic(p, xs, x_max > 0 ? x_max : 100.0, t_max);
      out << o.result.dump() << '\n';
      return exit_code(o.status);
    }

    if (sweep->parsed()) return run_sweep(spec_path, output_path, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace raypf::cli
