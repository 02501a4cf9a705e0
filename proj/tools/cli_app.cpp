#include "cli_app.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "psent/negativity.hpp"
#include "psent/oracles/selftest.hpp"
#include "psent/sweep.hpp"

namespace psent::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  double lambda = 0.5;
  double transmittance = 0.9;
  int kmax = 50;
  double tail_rel_tol = 1e-16;
  double beta = 1.5;
  std::string resource = "mixed";
  std::string measure = "logneg";
  std::string grid = "0.05:0.9:50";
  std::string format;
  std::string out;
  int jobs = 1;
  std::string bracket;
  std::vector<double> betas;
  double tol = kDefaultCrossingTol;
  bool db = false;

  ModelParams params() const {
    ModelParams p{.lambda = lambda, .transmittance = transmittance, .kmax = kmax, .tail_rel_tol = tail_rel_tol};
    p.validate();
    return p;
  }
  SignalParams signal() const {
    SignalParams s{beta};
    s.validate();
    return s;
  }
  Resource case_kind() const { return *parse_resource(resource); }
  Measure measure_kind() const { return *parse_measure(measure); }
};

std::string num(double v) { return fmt::format("{:.15g}", v); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);
  return parts;
}

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(fmt::format("cannot read {} from '{}'", what, s));
}

std::vector<double> parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("--grid expects a:b:n");
  const double a = to_double(parts[0], "grid start");
  const double b = to_double(parts[1], "grid end");
  const double n = to_double(parts[2], "grid size");
  if (n < 1 || n != std::floor(n) || !(a <= b)) throw UsageError("--grid needs a <= b and integer n >= 1");
  return uniform_grid(a, b, static_cast<int>(n));
}

std::optional<Bracket> parse_bracket(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw UsageError("--bracket expects lo:hi");
  return Bracket{to_double(parts[0], "bracket lo"), to_double(parts[1], "bracket hi")};
}

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }
std::string opt_csv(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

// --- subcommands -----------------------------------------------------------

void cmd_negativity(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ModelParams p = cfg.params();
  const EntanglementReport r = negativity(cfg.case_kind(), p, cfg.jobs);
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';
  if (cfg.format == "csv") {
    out << "negativity,log_negativity,delta_trace,kmax,lambda,transmittance" << (cfg.db ? ",squeezing_db" : "")
        << '\n';
    out << num(r.negativity) << ',' << num(r.log_negativity) << ',' << num(r.delta_trace) << ',' << r.kmax << ','
        << num(p.lambda) << ',' << num(p.transmittance);
    if (cfg.db) out << ',' << num(squeezing_db(p.lambda));
    out << '\n';
    return;
  }
  json j{{"case", cfg.resource},
         {"negativity", r.negativity},
         {"log_negativity", r.log_negativity},
         {"delta_trace", r.delta_trace},
         {"kmax", r.kmax},
         {"lambda", p.lambda},
         {"transmittance", p.transmittance},
         {"warnings", r.warnings}};
  if (cfg.db) j["squeezing_db"] = squeezing_db(p.lambda);
  out << j.dump(2) << '\n';
}

void cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto grid = parse_grid(cfg.grid);
  const Measure m = cfg.measure_kind();
  ModelParams base = cfg.params();
  std::optional<SignalParams> signal;
  if (m == Measure::MutualInfo) signal = cfg.signal();
  const auto rows = sweep(m, grid, base, signal, cfg.jobs);
  for (const auto& r : rows)
    for (const auto& w : r.warnings) err << "warning: lambda=" << num(r.lambda) << ": " << w << '\n';

  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"lambda", r.lambda},
                     {"value_sq", opt_json(r.value_sq)},
                     {"value_pure", opt_json(r.value_pure)},
                     {"value_mixed", opt_json(r.value_mixed)}});
    json j{{"measure", cfg.measure}, {"transmittance", base.transmittance}, {"kmax", base.kmax}, {"rows", arr}};
    if (signal) j["beta"] = signal->beta;
    out << j.dump(2) << '\n';
    return;
  }
  out << "lambda,value_sq,value_pure,value_mixed\n";
  for (const auto& r : rows)
    out << num(r.lambda) << ',' << opt_csv(r.value_sq) << ',' << opt_csv(r.value_pure) << ','
        << opt_csv(r.value_mixed) << '\n';
}

void cmd_crossover(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Measure m = cfg.measure_kind();
  const Resource kind = cfg.case_kind();
  if (kind == Resource::Sq) throw UsageError("crossover needs --case pure or --case mixed");
  std::optional<SignalParams> signal;
  if (m == Measure::MutualInfo) signal = cfg.signal();
  const auto res = measure_crossover(m, kind, cfg.params(), signal, parse_bracket(cfg.bracket), cfg.tol);
  if (cfg.format == "json") {
    json j{{"measure", cfg.measure},
           {"case", cfg.resource},
           {"lambda_star", res.lambda_star},
           {"bracket", {res.bracket.lo, res.bracket.hi}},
           {"residual", res.residual},
           {"iterations", res.iterations}};
    if (cfg.db) j["squeezing_db"] = squeezing_db(res.lambda_star);
    out << j.dump(2) << '\n';
    return;
  }
  out << "measure,case,lambda_star,bracket_lo,bracket_hi,residual,iterations" << (cfg.db ? ",squeezing_db" : "")
      << '\n';
  out << cfg.measure << ',' << cfg.resource << ',' << num(res.lambda_star) << ',' << num(res.bracket.lo) << ','
      << num(res.bracket.hi) << ',' << num(res.residual) << ',' << res.iterations;
  if (cfg.db) out << ',' << num(squeezing_db(res.lambda_star));
  out << '\n';
}

void cmd_dense_limit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto betas = cfg.betas.empty() ? default_limit_betas() : cfg.betas;
  const auto rows = dense_coding_limit_study(betas, cfg.params(), cfg.tol);
  for (const auto& r : rows) {
    if (!r.lambda_star_pure) err << "warning: beta=" << num(r.beta) << ": no pure crossing\n";
    if (!r.lambda_star_mixed) err << "warning: beta=" << num(r.beta) << ": no mixed crossing\n";
  }
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"beta", r.beta},
                     {"lambda_star_pure", opt_json(r.lambda_star_pure)},
                     {"lambda_star_mixed", opt_json(r.lambda_star_mixed)}});
    out << json{{"transmittance", cfg.transmittance}, {"rows", arr}}.dump(2) << '\n';
    return;
  }
  out << "beta,lambda_star_pure,lambda_star_mixed\n";
  for (const auto& r : rows)
    out << num(r.beta) << ',' << opt_csv(r.lambda_star_pure) << ',' << opt_csv(r.lambda_star_mixed) << '\n';
}

void cmd_state(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const ModelParams p = cfg.params();
  BlockDiagonalPT pt;
  switch (cfg.case_kind()) {
    case Resource::Sq: pt = build_pt_blocks(squeezed_vacuum_state(p), cfg.jobs); break;
    case Resource::Pure: pt = build_pt_blocks(pure_subtracted_state(p), cfg.jobs); break;
    case Resource::Mixed: pt = build_pt_blocks(p, cfg.jobs); break;
  }
  if (cfg.format == "json") {
    json blocks = json::array();
    for (const auto& b : pt.blocks) {
      json rows = json::array();
      for (std::size_t i = 0; i < b.matrix.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < b.matrix.size(); ++j) row.push_back(b.matrix(i, j));
        rows.push_back(row);
      }
      blocks.push_back({{"K", b.k_total}, {"matrix", rows}});
    }
    out << json{{"case", cfg.resource}, {"delta_trace", pt.delta_trace}, {"blocks", blocks}}.dump(2) << '\n';
    return;
  }
  out << "K,a,b,value\n";
  for (const auto& b : pt.blocks)
    for (std::size_t i = 0; i < b.matrix.size(); ++i)
      for (std::size_t j = 0; j < b.matrix.size(); ++j)
        if (b.matrix(i, j) != 0.0) out << b.k_total << ',' << i << ',' << j << ',' << num(b.matrix(i, j)) << '\n';
}

int cmd_selftest(std::ostream& out) {
  int failures = 0;
  for (const auto& c : oracles::run_selftest()) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    if (!c.passed) ++failures;
  }
  out << (failures ? fmt::format("{} check(s) failed\n", failures) : std::string("all checks passed\n"));
  return failures ? kNumericError : kOk;
}

// --- argument wiring -------------------------------------------------------

void add_params(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--lambda", cfg.lambda, "squeezing parameter tanh(r)")->capture_default_str();
  sub->add_option("--T", cfg.transmittance, "tapping beam-splitter transmittance")->capture_default_str();
  sub->add_option("--kmax", cfg.kmax, "Fock cutoff")->capture_default_str()->check(CLI::NonNegativeNumber);
  sub->add_option("--tail-tol", cfg.tail_rel_tol, "relative cut for the density-element series")
      ->capture_default_str();
  sub->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
}

void add_format(CLI::App* sub, RunConfig& cfg, const std::string& fallback) {
  sub->add_option("--format", cfg.format, "output format (default " + fallback + ")")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", cfg.out, "write output to PATH instead of stdout");
}

CLI::Option* add_case(CLI::App* sub, RunConfig& cfg) {
  return sub->add_option("--case", cfg.resource, "resource state")
      ->capture_default_str()
      ->check(CLI::IsMember({"sq", "pure", "mixed"}));
}

void add_measure(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--measure", cfg.measure, "logneg, neg, fidelity, mutualinfo or meanphoton")
      ->capture_default_str()
      ->check(CLI::IsMember({"logneg", "neg", "fidelity", "mutualinfo", "meanphoton"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Entanglement and operational measures of photon-subtracted squeezed vacuum", "psent"};
  app.require_subcommand(1);

  auto* neg = app.add_subcommand("negativity", "negativity and log-negativity at one point");
  add_params(neg, cfg);
  add_case(neg, cfg);
  add_format(neg, cfg, "json");
  neg->add_flag("--db", cfg.db, "also report the squeezing in dB");

  auto* swp = app.add_subcommand("sweep", "all three resources over a lambda grid");
  add_params(swp, cfg);
  add_measure(swp, cfg);
  add_format(swp, cfg, "csv");
  swp->add_option("--grid", cfg.grid, "lambda grid a:b:n")->capture_default_str();
  swp->add_option("--beta", cfg.beta, "QPSK amplitude (mutualinfo)")->capture_default_str();

  auto* cross = app.add_subcommand("crossover", "lambda where a subtracted resource meets the squeezed vacuum");
  add_params(cross, cfg);
  add_measure(cross, cfg);
  add_case(cross, cfg);
  add_format(cross, cfg, "csv");
  cross->add_option("--beta", cfg.beta, "QPSK amplitude (mutualinfo)")->capture_default_str();
  cross->add_option("--bracket", cfg.bracket, "search interval lo:hi (default: scan)");
  cross->add_option("--tol", cfg.tol, "bisection width in lambda")->capture_default_str();
  cross->add_flag("--db", cfg.db, "also report lambda_star in dB");

  auto* dense = app.add_subcommand("dense-limit", "dense-coding crossings as beta shrinks");
  add_params(dense, cfg);
  add_format(dense, cfg, "csv");
  dense->add_option("--betas", cfg.betas, "strictly decreasing beta list")->delimiter(',');
  dense->add_option("--tol", cfg.tol, "bisection width in lambda")->capture_default_str();

  auto* state = app.add_subcommand("state", "dump the partial-transpose blocks");
  add_params(state, cfg);
  add_case(state, cfg);
  add_format(state, cfg, "csv");

  auto* self = app.add_subcommand("selftest", "closed forms against their oracles");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }
  if (cfg.format.empty()) cfg.format = *neg ? "json" : "csv";

  try {
    std::ofstream file;
    if (!cfg.out.empty()) {
      file.open(cfg.out, std::ios::binary);
      if (!file) throw UsageError("cannot open " + cfg.out);
    }
    std::ostream& sink = cfg.out.empty() ? out : file;
    int status = kOk;
    if (*neg) cmd_negativity(cfg, sink, err);
    else if (*swp) cmd_sweep(cfg, sink, err);
    else if (*cross) cmd_crossover(cfg, sink, err);
    else if (*dense) cmd_dense_limit(cfg, sink, err);
    else if (*state) cmd_state(cfg, sink, err);
    else if (*self) status = cmd_selftest(sink);
    sink.flush();
    return status;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsageError;
  } catch (const psent::Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    return kNumericError;
  }
}

}  // namespace psent::cli
