// Command-line front end: exact moments, Weingarten values, reference tables
// and Monte Carlo estimates, as text, JSON or CSV.

#include "immoments/golden.hpp"
#include "immoments/moments.hpp"
#include "immoments/sampler.hpp"
#include "immoments/weingarten.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

using namespace immoments;
using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

enum class Format { text, json, csv };

struct Config {
  std::string d_spec = "symbolic";
  long long samples = 0;  // 0: default by power
  std::uint64_t seed = 1;
  unsigned workers = 0;
  Format format = Format::text;
  bool limit_override = false;
  std::string out_path;
  int power = 2;
  int t = 2;
  int max_n = 0;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "symbolic", "7", "3..20" or "3,5,8" (pieces may be ranges).
std::vector<long> parse_d(const std::string& spec) {
  if (spec == "symbolic") return {};
  std::vector<long> out;
  std::stringstream ss(spec);
  std::string piece;
  auto to_long = [&](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw UsageError("invalid value for --d: '" + spec + "'");
    return v;
  };
  while (std::getline(ss, piece, ',')) {
    const auto dots = piece.find("..");
    if (dots == std::string::npos) out.push_back(to_long(piece));
    else {
      const long lo = to_long(piece.substr(0, dots)), hi = to_long(piece.substr(dots + 2));
      if (hi < lo) throw UsageError("empty range for --d: '" + piece + "'");
      for (long d = lo; d <= hi; ++d) out.push_back(d);
    }
  }
  if (out.empty()) throw UsageError("--d needs a value");
  return out;
}

json partition_json(const Partition& p) { return json(p.vec()); }

json rational_json(const RationalFunction& f) {
  json coeffs = json::array();
  for (const auto& c : f.numerator().coeffs()) coeffs.push_back(to_string(c));
  json factors = json::array();
  for (const auto& [c, m] : f.denominator().factors()) factors.push_back({{"offset", c}, {"multiplicity", m}});
  return {{"prefactor", to_string(f.prefactor())},
          {"numerator_coeffs", coeffs},
          {"denominator_factors", factors},
          {"display", f.to_display()},
          {"machine", f.to_machine()}};
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void warn_continuation(const std::string& kind, int n, const std::vector<long>& ds) {
  if (kind != "second" && kind != "perm_conj") return;
  for (long d : ds)
    if (d >= n && d < 2 * n)
      std::cerr << "warning: d=" << d << " lies in n <= d < 2n; the fourth-moment formula was derived for d >= 2n and this value is its rational continuation\n";
}

/// A symbolic result, optionally evaluated at integer d.
int emit_formula(const Config& cfg, const std::string& kind, const Partition& lambda, const RationalFunction& f,
                 double wall, json extra = json::object()) {
  const auto ds = parse_d(cfg.d_spec);
  warn_continuation(kind, lambda.weight(), ds);
  std::vector<std::pair<long, Rational>> values;
  for (long d : ds) values.emplace_back(d, f(Rational(d)));  // PoleError propagates

  Output out(cfg.out_path);
  auto& os = out.os();
  switch (cfg.format) {
    case Format::text:
      if (ds.empty()) os << f.to_display() << '\n';
      else if (ds.size() == 1) os << to_string(values[0].second) << '\n';
      else
        for (const auto& [d, v] : values) os << "d=" << d << "  " << to_string(v) << "  (" << static_cast<double>(v) << ")\n";
      break;
    case Format::csv:
      if (ds.empty()) {
        os << "lambda,n,kind,expression\n";
        os << csv_quote(lambda.str()) << ',' << lambda.weight() << ',' << kind << ',' << csv_quote(f.to_machine()) << '\n';
      } else {
        os << "lambda,n,kind,d,value,approx\n";
        for (const auto& [d, v] : values)
          os << csv_quote(lambda.str()) << ',' << lambda.weight() << ',' << kind << ',' << d << ',' << to_string(v) << ','
             << static_cast<double>(v) << '\n';
      }
      break;
    case Format::json: {
      json j{{"schema_version", kSchemaVersion}, {"kind", kind}, {"lambda", partition_json(lambda)}, {"n", lambda.weight()}};
      for (auto& [k, v] : extra.items()) j[k] = v;
      j["rational"] = rational_json(f);
      j["wall_time_s"] = wall;
      if (!ds.empty()) {
        json evals = json::array();
        for (const auto& [d, v] : values) evals.push_back({{"d", d}, {"value", to_string(v)}, {"approx", static_cast<double>(v)}});
        if (ds.size() == 1) {
          j["d"] = values[0].first;
          j["value"] = to_string(values[0].second);
        }
        j["evaluations"] = evals;
      }
      os << j.dump(2) << '\n';
      break;
    }
  }
  return 0;
}

ComputeOptions options(const Config& cfg) {
  ComputeOptions o;
  o.workers = cfg.workers;
  if (cfg.limit_override) {
    o.second_moment_limit = kMaxTSumDegree;
    o.leading_limit = 12;
  }
  return o;
}

long long default_samples(const Config& cfg) { return cfg.samples > 0 ? cfg.samples : (cfg.power == 4 ? 100000 : 10000); }

void check_power(int power) {
  if (power != 2 && power != 4) throw UsageError("--power must be 2 or 4");
}

int cmd_sample(const Config& cfg, const std::string& lambda_text, bool with_exact) {
  check_power(cfg.power);
  const Partition lambda = parse_partition(lambda_text);
  const auto ds = parse_d(cfg.d_spec);
  if (ds.empty()) throw UsageError("this subcommand needs a numeric --d");
  const long long samples = default_samples(cfg);
  const int n = lambda.weight();
  std::optional<RationalFunction> exact;
  if (with_exact) exact = cfg.power == 2 ? mean(lambda) : second_moment(lambda, options(cfg)).result;

  Output out(cfg.out_path);
  auto& os = out.os();
  json rows = json::array();
  if (cfg.format == Format::csv) os << "lambda,n,d,power,samples,seed,estimate,stderr" << (with_exact ? ",exact,z" : "") << '\n';
  if (cfg.format == Format::text && with_exact) os << "lambda      d    estimate         stderr           exact            z\n";
  for (long d : ds) {
    if (d < n) throw UsageError("--d must be at least n = " + std::to_string(n));
    if (with_exact && cfg.power == 4) warn_continuation("second", n, {d});
    const auto t0 = std::chrono::steady_clock::now();
    const auto e = estimate_moment(lambda, static_cast<int>(d), cfg.power, samples, cfg.seed, cfg.workers);
    const double wall = seconds_since(t0);
    double ex = 0, z = 0;
    if (exact) {
      ex = exact->evaluate_double(static_cast<double>(d));
      z = e.standard_error > 0 ? (e.mean - ex) / e.standard_error : 0.0;
    }
    std::ostringstream num;
    num.precision(17);
    switch (cfg.format) {
      case Format::csv:
        num << e.mean << ',' << e.standard_error;
        os << csv_quote(lambda.str()) << ',' << n << ',' << d << ',' << cfg.power << ',' << samples << ',' << cfg.seed << ',' << num.str();
        if (with_exact) os << ',' << std::setprecision(17) << ex << ',' << std::setprecision(6) << z;
        os << '\n';
        break;
      case Format::text:
        if (with_exact)
          os << std::left << std::setw(12) << lambda.str() << std::setw(5) << d << std::setw(17) << e.mean << std::setw(17)
             << e.standard_error << std::setw(17) << ex << std::setprecision(3) << z << std::setprecision(6) << '\n';
        else
          os << "lambda=" << lambda.str() << " d=" << d << " power=" << cfg.power << " samples=" << samples << " seed=" << cfg.seed
             << "  estimate " << e.mean << " ± " << e.standard_error << '\n';
        break;
      case Format::json: {
        json r{{"lambda", partition_json(lambda)}, {"n", n},     {"d", d},
               {"power", cfg.power},             {"samples", samples}, {"seed", cfg.seed},
               {"estimate", e.mean},             {"stderr", e.standard_error}, {"wall_time_s", wall}};
        if (with_exact) {
          r["exact"] = ex;
          r["exact_rational"] = to_string((cfg.power == 2 ? mean(lambda) : *exact)(Rational(d)));
          r["z"] = z;
        }
        rows.push_back(r);
        break;
      }
    }
  }
  if (cfg.format == Format::json)
    os << json{{"schema_version", kSchemaVersion}, {"kind", with_exact ? "verify" : "sample"}, {"rows", rows}}.dump(2) << '\n';
  return 0;
}

int cmd_dominance(const Config& cfg, int n) {
  auto ds = parse_d(cfg.d_spec);
  if (ds.empty()) ds.push_back(n);
  Output out(cfg.out_path);
  auto& os = out.os();
  bool all_ok = true;
  json reports = json::array();
  if (cfg.format == Format::csv) os << "n,d,lower,upper,mean_lower,mean_upper,ok\n";
  for (long d : ds) {
    const auto rep = mean_dominance_check(n, d);
    all_ok = all_ok && rep.all_ok();
    json pairs = json::array();
    for (const auto& p : rep.pairs) {
      switch (cfg.format) {
        case Format::text:
          os << "d=" << d << "  " << p.lower << " ◁ " << p.upper << "  " << to_string(p.mean_lower) << " > " << to_string(p.mean_upper)
             << "  " << (p.ok ? "ok" : "VIOLATED") << '\n';
          break;
        case Format::csv:
          os << n << ',' << d << ',' << csv_quote(p.lower.str()) << ',' << csv_quote(p.upper.str()) << ',' << to_string(p.mean_lower)
             << ',' << to_string(p.mean_upper) << ',' << (p.ok ? "true" : "false") << '\n';
          break;
        case Format::json:
          pairs.push_back({{"lower", partition_json(p.lower)},
                           {"upper", partition_json(p.upper)},
                           {"mean_lower", to_string(p.mean_lower)},
                           {"mean_upper", to_string(p.mean_upper)},
                           {"ok", p.ok}});
          break;
      }
    }
    if (cfg.format == Format::text)
      os << "d=" << d << ": " << rep.pairs.size() << " comparable pairs, " << rep.incomparable << " incomparable, "
         << (rep.all_ok() ? "all ok" : "violations found") << '\n';
    if (cfg.format == Format::json) reports.push_back({{"d", d}, {"incomparable", rep.incomparable}, {"all_ok", rep.all_ok()}, {"pairs", pairs}});
  }
  if (cfg.format == Format::json)
    os << json{{"schema_version", kSchemaVersion}, {"kind", "dominance"}, {"n", n}, {"all_ok", all_ok}, {"reports", reports}}.dump(2) << '\n';
  return all_ok ? 0 : 1;
}

int cmd_table1(const Config& cfg) {
  const int max_n = cfg.max_n > 0 ? cfg.max_n : 5;
  if (max_n > 5 && !cfg.limit_override) throw ResourceLimitError("table1 covers n <= 5; use --limit-override to go further");
  Output out(cfg.out_path);
  auto& os = out.os();
  json rows = json::array();
  bool all_ok = true;
  if (cfg.format == Format::csv) os << "lambda,n,mean,fourth,mean_matches,fourth_matches,wall_time_s\n";
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& r : second_moments_all(n, options(cfg))) {
      const auto m = mean(r.lambda);
      std::optional<bool> mean_ok, fourth_ok;
      for (const auto& g : golden::kMomentTable)
        if (parse_partition(g.lambda) == r.lambda) {
          mean_ok = parse_rational_function(g.mean, true) == m;
          fourth_ok = parse_rational_function(g.fourth, true) == r.result;
        }
      const bool ok = mean_ok.value_or(true) && fourth_ok.value_or(true);
      all_ok = all_ok && ok;
      auto flag = [](const std::optional<bool>& b) { return b ? (*b ? "match" : "MISMATCH") : "no reference"; };
      switch (cfg.format) {
        case Format::text:
          os << r.lambda << '\n'
             << "  mean:   " << m.to_display() << "  [" << flag(mean_ok) << "]\n"
             << "  fourth: " << r.result.to_display() << "  [" << flag(fourth_ok) << "]\n";
          break;
        case Format::csv:
          os << csv_quote(r.lambda.str()) << ',' << n << ',' << csv_quote(m.to_machine()) << ',' << csv_quote(r.result.to_machine()) << ','
             << flag(mean_ok) << ',' << flag(fourth_ok) << ',' << r.wall_time_s << '\n';
          break;
        case Format::json: {
          json row{{"lambda", partition_json(r.lambda)}, {"n", n}, {"mean", rational_json(m)}, {"fourth", rational_json(r.result)}};
          row["mean_matches"] = mean_ok ? json(*mean_ok) : json(nullptr);
          row["fourth_matches"] = fourth_ok ? json(*fourth_ok) : json(nullptr);
          row["wall_time_s"] = r.wall_time_s;
          rows.push_back(row);
          break;
        }
      }
    }
  }
  if (cfg.format == Format::json)
    os << json{{"schema_version", kSchemaVersion}, {"kind", "table1"}, {"all_match", all_ok}, {"rows", rows}}.dump(2) << '\n';
  if (!all_ok) std::cerr << "table1: some rows differ from the reference values\n";
  return all_ok ? 0 : 1;
}

int cmd_table2(const Config& cfg) {
  const int max_n = cfg.max_n > 0 ? cfg.max_n : 7;
  const auto opt = options(cfg);
  check_limit(max_n, opt.leading_limit, "table2");
  Output out(cfg.out_path);
  auto& os = out.os();
  json rows = json::array();
  bool all_ok = true;
  if (cfg.format == Format::csv) os << "lambda,n,J,matches,wall_time_s\n";
  for (int n = 1; n <= max_n; ++n)
    for (const auto& l : partitions_of(n)) {
      const auto t0 = std::chrono::steady_clock::now();
      const BigInt j = leading_coefficient(l, opt);
      const double wall = seconds_since(t0);
      std::optional<bool> ok;
      for (const auto& g : golden::kLeadingTable) {
        const Partition gl = parse_partition(g.lambda);
        if (gl == l || conjugate(gl) == l) ok = BigInt(std::string(g.value)) == j;
      }
      all_ok = all_ok && ok.value_or(true);
      const char* flag = ok ? (*ok ? "match" : "MISMATCH") : "no reference";
      switch (cfg.format) {
        case Format::text: os << std::left << std::setw(20) << l.paren() << std::setw(16) << to_string(j) << flag << '\n'; break;
        case Format::csv: os << csv_quote(l.str()) << ',' << n << ',' << to_string(j) << ',' << flag << ',' << wall << '\n'; break;
        case Format::json: {
          json row{{"lambda", partition_json(l)}, {"n", n}, {"integer", to_string(j)}};
          row["matches"] = ok ? json(*ok) : json(nullptr);
          row["wall_time_s"] = wall;
          rows.push_back(row);
          break;
        }
      }
    }
  if (cfg.format == Format::json)
    os << json{{"schema_version", kSchemaVersion}, {"kind", "table2"}, {"all_match", all_ok}, {"rows", rows}}.dump(2) << '\n';
  if (!all_ok) std::cerr << "table2: some values differ from the reference values\n";
  return all_ok ? 0 : 1;
}

int cmd_leading(const Config& cfg, const Partition& l) {
  const auto t0 = std::chrono::steady_clock::now();
  const BigInt j = leading_coefficient(l, options(cfg));
  const double wall = seconds_since(t0);
  Output out(cfg.out_path);
  auto& os = out.os();
  switch (cfg.format) {
    case Format::text: os << to_string(j) << '\n'; break;
    case Format::csv: os << "lambda,n,kind,integer\n" << csv_quote(l.str()) << ',' << l.weight() << ",leading," << to_string(j) << '\n'; break;
    case Format::json:
      os << json{{"schema_version", kSchemaVersion}, {"kind", "leading"}, {"lambda", partition_json(l)}, {"n", l.weight()},
                 {"integer", to_string(j)}, {"wall_time_s", wall}}.dump(2)
         << '\n';
      break;
  }
  return 0;
}

int cmd_char_table(const Config& cfg, int m) {
  if (m < 0 || m > kMaxCharacterDegree) throw UsageError("character table degree out of range");
  const FrozenCharacterTable t(m);
  Output out(cfg.out_path);
  t.write_csv(out.os());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and Monte Carlo moments of immanants of Haar-random unitary submatrices"};
  app.require_subcommand(1);
  Config cfg;
  std::string format = "text";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--d", cfg.d_spec, "symbolic (default), an integer, a range a..b, or a comma list");
    sub->add_option("--workers", cfg.workers, "worker threads (0: all hardware threads)");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_flag("--limit-override", cfg.limit_override, "lift the default size guards");
    sub->add_option("--out", cfg.out_path, "write output to FILE instead of stdout");
  };
  auto sampling = [&](CLI::App* sub) {
    sub->add_option("--samples", cfg.samples, "number of Haar samples (default 1e4 for power 2, 1e5 for power 4)");
    sub->add_option("--seed", cfg.seed, "64-bit seed");
    sub->add_option("--power", cfg.power, "2 or 4");
  };

  std::string lambda_text;
  int n_arg = 0;

  auto* mean_cmd = app.add_subcommand("mean", "E|Imm^λ M|² = n!/N^λ(d)");
  mean_cmd->add_option("lambda", lambda_text, "partition, e.g. 2,1 or 2,1^3")->required();
  auto* second_cmd = app.add_subcommand("second-moment", "E|Imm^λ M|⁴ as an exact rational function");
  second_cmd->add_option("lambda", lambda_text, "partition")->required();
  auto* leading_cmd = app.add_subcommand("leading", "coefficient J^λ of d^(-2n) in the fourth moment");
  leading_cmd->add_option("lambda", lambda_text, "partition")->required();
  auto* det_cmd = app.add_subcommand("det-moment", "E|Det M|^(2t) = 1/dim of the rectangle (t^n)");
  det_cmd->add_option("n", n_arg, "matrix size")->required();
  det_cmd->add_option("--t", cfg.t, "half the power (default 2)");
  auto* conj_cmd = app.add_subcommand("perm-conjecture", "closed-form candidate for E|Perm M|⁴");
  conj_cmd->add_option("n", n_arg, "matrix size")->required();
  auto* wg_cmd = app.add_subcommand("wg", "Weingarten function W(class, d)");
  wg_cmd->add_option("class", lambda_text, "cycle type, e.g. 2,1")->required();
  auto* dom_cmd = app.add_subcommand("dominance", "check mean(λ) > mean(μ) for all λ ◁ μ ⊢ n");
  dom_cmd->add_option("n", n_arg, "weight")->required();
  auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo estimate of E|Imm^λ M|^power");
  sample_cmd->add_option("lambda", lambda_text, "partition")->required();
  auto* verify_cmd = app.add_subcommand("verify", "exact value next to a Monte Carlo estimate");
  verify_cmd->add_option("lambda", lambda_text, "partition")->required();
  auto* t1_cmd = app.add_subcommand("table1", "means and fourth moments for n <= 5 against the reference table");
  t1_cmd->add_option("--max-n", cfg.max_n, "largest n (default 5)");
  auto* t2_cmd = app.add_subcommand("table2", "J^λ for every λ ⊢ n <= max-n against the reference table");
  t2_cmd->add_option("--max-n", cfg.max_n, "largest n (default 7)");
  auto* ct_cmd = app.add_subcommand("char-table", "CSV dump of the character table of S_m");
  ct_cmd->add_option("m", n_arg, "degree")->required();

  for (auto* sub : {mean_cmd, second_cmd, leading_cmd, det_cmd, conj_cmd, wg_cmd, dom_cmd, sample_cmd, verify_cmd, t1_cmd, t2_cmd, ct_cmd})
    common(sub);
  sampling(sample_cmd);
  sampling(verify_cmd);

  CLI11_PARSE(app, argc, argv);
  cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;

  try {
    const auto t0 = std::chrono::steady_clock::now();
    if (mean_cmd->parsed()) {
      const Partition l = parse_partition(lambda_text);
      const auto f = mean(l);
      return emit_formula(cfg, "mean", l, f, seconds_since(t0));
    }
    if (second_cmd->parsed()) {
      const Partition l = parse_partition(lambda_text);
      const auto r = second_moment(l, options(cfg));
      json coeffs = json::array();
      for (const auto& [xi, a] : r.coefficients)
        if (a != 0) coeffs.push_back({{"xi", partition_json(xi)}, {"a", to_string(a)}});
      return emit_formula(cfg, "second", l, r.result, r.wall_time_s, {{"xi_coefficients", coeffs}});
    }
    if (leading_cmd->parsed()) return cmd_leading(cfg, parse_partition(lambda_text));
    if (det_cmd->parsed()) {
      if (n_arg < 1 || cfg.t < 1) throw UsageError("det-moment needs n >= 1 and t >= 1");
      const auto f = det_moment(n_arg, cfg.t);
      return emit_formula(cfg, "det", Partition(std::vector<int>(n_arg, 1)), f, seconds_since(t0), {{"t", cfg.t}});
    }
    if (conj_cmd->parsed()) {
      if (n_arg < 1) throw UsageError("perm-conjecture needs n >= 1");
      const auto f = perm_fourth_conjecture(n_arg);
      return emit_formula(cfg, "perm_conj", Partition({n_arg}), f, seconds_since(t0));
    }
    if (wg_cmd->parsed()) {
      const Partition c = parse_partition(lambda_text);
      if (c.weight() > 12 && !cfg.limit_override) throw ResourceLimitError("wg: class weight above 12 needs --limit-override");
      const auto f = weingarten_w(c);
      return emit_formula(cfg, "wg", c, f, seconds_since(t0));
    }
    if (dom_cmd->parsed()) return cmd_dominance(cfg, n_arg);
    if (sample_cmd->parsed()) return cmd_sample(cfg, lambda_text, false);
    if (verify_cmd->parsed()) return cmd_sample(cfg, lambda_text, true);
    if (t1_cmd->parsed()) return cmd_table1(cfg);
    if (t2_cmd->parsed()) return cmd_table2(cfg);
    if (ct_cmd->parsed()) return cmd_char_table(cfg, n_arg);
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << " (use --limit-override)\n";
    return 3;
  } catch (const PoleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
