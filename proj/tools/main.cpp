#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "su2ent/criteria.hpp"
#include "su2ent/json_io.hpp"
#include "su2ent/partial_transpose.hpp"
#include "su2ent/state.hpp"

namespace {

using namespace su2ent;

constexpr double kMethodTol = 1e-9;
constexpr double kResidualTol = 1e-10;

std::string read_input(const std::string& path) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
}

std::string format_csv(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct AnalyzeOpts {
  std::string state_path;
  int ts1 = 0, ts2 = 0;
  bool has_spins = false;
  std::vector<double> weights;
  bool thermal = false;
  double coupling = 1.0;
  std::optional<double> beta;
  int ring = 0;
  double tol = kVerdictTol;
  std::string out_path;
};

int run_analyze(const AnalyzeOpts& o) {
  const int modes = static_cast<int>(!o.state_path.empty()) +
                    static_cast<int>(!o.weights.empty()) +
                    static_cast<int>(o.thermal) + static_cast<int>(o.ring > 0);
  if (modes != 1)
    throw std::invalid_argument(
        "choose exactly one input: --state, --A, --thermal, or --ring");

  std::optional<SU2State> state;
  std::optional<double> residual;
  if (!o.state_path.empty()) {
    state = state_from_json(read_input(o.state_path));
  } else if (!o.weights.empty()) {
    if (!o.has_spins) throw std::invalid_argument("--A requires --ts1 and --ts2");
    state = SU2State(o.ts1, o.ts2, o.weights);
  } else if (o.thermal) {
    if (!o.has_spins) throw std::invalid_argument("--thermal requires --ts1 and --ts2");
    if (!o.beta) throw std::invalid_argument("--thermal requires --beta");
    state = thermal_pair(o.ts1, o.ts2, o.coupling, *o.beta);
  } else {
    if (!o.beta) throw std::invalid_argument("--ring requires --beta");
    const Extraction extraction = from_dense(ring_pair_density(o.ring, *o.beta), 1, 1);
    state = extraction.state;
    residual = extraction.invariance_residual;
  }

  const CriteriaReport report = full_report(*state, o.tol);
  const PTSpectrum spectrum = b_from_diagonal(*state);
  write_output(o.out_path, report_to_json(*state, spectrum, report, residual));
  return report.entangled() ? 2 : 0;
}

struct VerifyOpts {
  int ts1 = 0, ts2 = 0;
  int samples = 100;
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_verify(const VerifyOpts& o) {
  if (o.ts1 < 0 || o.ts1 > 11 || o.ts2 < 0 || o.ts2 > 11)
    throw std::invalid_argument("verify supports subsystem dimensions up to 12");
  if (o.samples < 1) throw std::invalid_argument("--samples must be positive");

  double max_dev = 0.0, max_residual = 0.0;
  std::optional<std::uint64_t> failing_seed;
  std::optional<SU2State> failing_state;
  for (int i = 0; i < o.samples; ++i) {
    const std::uint64_t sample_seed = o.seed + static_cast<std::uint64_t>(i);
    const SU2State state = random_state(o.ts1, o.ts2, sample_seed);
    const PTSpectrum diag = b_from_diagonal(state);
    const PTSpectrum rules = b_from_sum_rules(state);
    const PTSpectrum dense = b_from_dense(state);
    double dev = 0.0;
    for (std::size_t j = 0; j < diag.b.size(); ++j) {
      dev = std::max(dev, std::abs(diag.b[j] - rules.b[j]));
      dev = std::max(dev, std::abs(diag.b[j] - dense.b[j]));
      dev = std::max(dev, std::abs(rules.b[j] - dense.b[j]));
    }
    const double residual = std::abs(combined_sum_rule_residual(state, diag));
    max_dev = std::max(max_dev, dev);
    max_residual = std::max(max_residual, residual);
    if ((dev > kMethodTol || residual > kResidualTol) && !failing_seed) {
      failing_seed = sample_seed;
      failing_state = state;
    }
  }

  const double det = vandermonde_determinant(o.ts1, o.ts2);
  const bool pass = !failing_seed && det > 0.0;

  std::string out = "{\n";
  out += "  \"ts1\": " + std::to_string(o.ts1) + ",\n";
  out += "  \"ts2\": " + std::to_string(o.ts2) + ",\n";
  out += "  \"samples\": " + std::to_string(o.samples) + ",\n";
  out += "  \"seed\": " + std::to_string(o.seed) + ",\n";
  out += "  \"max_method_deviation\": " + format_double(max_dev) + ",\n";
  out += "  \"max_combined_residual\": " + format_double(max_residual) + ",\n";
  out += "  \"vandermonde_determinant\": " + format_double(det) + ",\n";
  if (failing_seed) {
    out += "  \"failing_seed\": " + std::to_string(*failing_seed) + ",\n";
    out += "  \"failing_state\": " + state_to_json(*failing_state) + ",\n";
  }
  out += std::string("  \"pass\": ") + (pass ? "true" : "false") + "\n}\n";
  write_output(o.out_path, out);
  return pass ? 0 : 3;
}

struct SweepAxis {
  std::string var;
  double from = 0.0, to = 0.0, step = 0.0;
  int count = 0;

  double value(int i) const { return from + i * step; }
};

SweepAxis parse_axis(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 4)
    throw std::invalid_argument("--sweep expects var:from:to:step, got \"" + text + "\"");
  SweepAxis axis;
  axis.var = parts[0];
  try {
    axis.from = std::stod(parts[1]);
    axis.to = std::stod(parts[2]);
    axis.step = std::stod(parts[3]);
  } catch (const std::exception&) {
    throw std::invalid_argument("--sweep has non-numeric bounds in \"" + text + "\"");
  }
  if (axis.step == 0.0)
    throw std::invalid_argument("--sweep step must be nonzero");
  const double span = (axis.to - axis.from) / axis.step;
  if (span < -1e-9)
    throw std::invalid_argument("--sweep grid for \"" + axis.var + "\" is empty");
  axis.count = static_cast<int>(std::floor(span + 1e-9)) + 1;
  return axis;
}

struct ScanOpts {
  int ts1 = 0, ts2 = 0;
  bool has_spins = false;
  std::vector<double> weights;
  bool thermal = false;
  double coupling = 1.0;
  std::optional<double> beta;
  int ring = 0;
  double tol = kVerdictTol;
  std::string out_path;
  std::vector<std::string> sweep_specs;
};

// One grid point: pin the swept values, then build the state.
struct GridPoint {
  std::optional<double> beta;
  std::optional<double> coupling;
  std::optional<int> ring;
  std::vector<std::pair<std::size_t, double>> pinned_weights;
};

// Pinned A-components keep their values; the rest share the leftover in
// proportion to the base weights (uniformly when the base gives them zero).
std::optional<std::vector<double>> renormalized_weights(
    const std::vector<double>& base,
    const std::vector<std::pair<std::size_t, double>>& pinned) {
  std::vector<double> out = base;
  std::vector<bool> is_pinned(base.size(), false);
  double leftover = 1.0;
  for (const auto& [index, value] : pinned) {
    if (value < -1e-12 || value > 1.0 + 1e-12) return std::nullopt;
    out[index] = std::max(value, 0.0);
    is_pinned[index] = true;
    leftover -= out[index];
  }
  if (leftover < -1e-12) return std::nullopt;
  leftover = std::max(leftover, 0.0);

  double base_free = 0.0;
  int n_free = 0;
  for (std::size_t i = 0; i < base.size(); ++i)
    if (!is_pinned[i]) {
      base_free += base[i];
      ++n_free;
    }
  if (n_free == 0)
    return std::abs(leftover) <= 1e-9 ? std::optional(out) : std::nullopt;
  for (std::size_t i = 0; i < base.size(); ++i)
    if (!is_pinned[i])
      out[i] = base_free > 0.0 ? leftover * base[i] / base_free : leftover / n_free;
  return out;
}

int run_scan(const ScanOpts& o) {
  const int modes = static_cast<int>(o.thermal) + static_cast<int>(o.ring > 0) +
                    static_cast<int>(o.has_spins && !o.thermal);
  if (modes != 1)
    throw std::invalid_argument(
        "choose exactly one generator: --thermal, --ring, or --ts1/--ts2 [--A]");
  if (o.sweep_specs.empty()) throw std::invalid_argument("at least one --sweep is required");
  if (o.sweep_specs.size() > 2) throw std::invalid_argument("at most two --sweep axes");

  std::vector<SweepAxis> axes;
  for (const auto& spec : o.sweep_specs) axes.push_back(parse_axis(spec));

  const bool ring_mode = o.ring > 0;
  const bool explicit_mode = !o.thermal && !ring_mode;

  std::vector<int> tjs;
  std::vector<double> base;
  if (o.thermal || explicit_mode) {
    if (!o.has_spins) throw std::invalid_argument("this generator requires --ts1 and --ts2");
    tjs = multiplet_range(o.ts1, o.ts2);
  } else {
    tjs = multiplet_range(1, 1);
  }
  if (explicit_mode) {
    base = o.weights;
    if (base.empty()) base.assign(tjs.size(), 1.0 / static_cast<double>(tjs.size()));
    if (base.size() != tjs.size())
      throw std::invalid_argument("--A has wrong length for the spin pair");
    for (double w : base)
      if (w < 0.0) throw std::invalid_argument("--A entries must be non-negative");
  }

  // Validate axis variables against the generator.
  std::vector<std::pair<std::size_t, int>> a_axes;  // (weight index, axis index)
  for (std::size_t ax = 0; ax < axes.size(); ++ax) {
    const std::string& var = axes[ax].var;
    if (var == "beta") {
      if (explicit_mode) throw std::invalid_argument("beta sweeps need --thermal or --ring");
    } else if (var == "coupling") {
      if (!o.thermal) throw std::invalid_argument("coupling sweeps need --thermal");
    } else if (var == "ring") {
      if (!ring_mode) throw std::invalid_argument("ring sweeps need --ring");
    } else if (var.size() > 1 && var[0] == 'A') {
      if (!explicit_mode)
        throw std::invalid_argument("A-component sweeps need the explicit generator");
      std::size_t index = 0;
      try {
        index = std::stoul(var.substr(1));
      } catch (const std::exception&) {
        throw std::invalid_argument("unknown sweep variable \"" + var + "\"");
      }
      if (index >= tjs.size())
        throw std::invalid_argument("sweep variable \"" + var + "\" is out of range");
      a_axes.emplace_back(index, static_cast<int>(ax));
    } else {
      throw std::invalid_argument("unknown sweep variable \"" + var + "\"");
    }
  }
  if (a_axes.size() == 2 && a_axes[0].first == a_axes[1].first)
    throw std::invalid_argument("both sweep axes pin the same A-component");
  if ((o.thermal || ring_mode) && !o.beta && std::none_of(axes.begin(), axes.end(), [](const SweepAxis& a) {
        return a.var == "beta";
      }))
    throw std::invalid_argument("this generator requires --beta or a beta sweep");

  std::string csv;
  for (const auto& axis : axes) csv += axis.var + ",";
  csv += "dot_correlator,dot_squared_correlator";
  for (int tk : tjs) csv += ",B_" + std::to_string(tk);
  csv += ",ppt_negative,reduction_violated,majorization_violated,lur_violated\n";

  const int outer = axes[0].count;
  const int inner = axes.size() == 2 ? axes[1].count : 1;
  for (int i = 0; i < outer; ++i) {
    for (int j = 0; j < inner; ++j) {
      std::vector<double> values{axes[0].value(i)};
      if (axes.size() == 2) values.push_back(axes[1].value(j));

      GridPoint point;
      point.beta = o.beta;
      point.coupling = o.coupling;
      if (ring_mode) point.ring = o.ring;
      for (std::size_t ax = 0; ax < axes.size(); ++ax) {
        const std::string& var = axes[ax].var;
        const double v = values[ax];
        if (var == "beta") {
          point.beta = v;
        } else if (var == "coupling") {
          point.coupling = v;
        } else if (var == "ring") {
          const int n = static_cast<int>(std::lround(v));
          if (std::abs(v - n) > 1e-9)
            throw std::invalid_argument("ring sweep values must be integers");
          point.ring = n;
        } else {
          for (const auto& [index, axis_index] : a_axes)
            if (axis_index == static_cast<int>(ax)) point.pinned_weights.emplace_back(index, v);
        }
      }

      std::optional<SU2State> state;
      if (o.thermal) {
        state = thermal_pair(o.ts1, o.ts2, *point.coupling, *point.beta);
      } else if (ring_mode) {
        state = ring_reduction(*point.ring, *point.beta);
      } else {
        const auto weights = renormalized_weights(base, point.pinned_weights);
        if (!weights) continue;  // outside the simplex
        state = SU2State(o.ts1, o.ts2, *weights);
      }

      const CriteriaReport report = full_report(*state, o.tol);
      const PTSpectrum spectrum = b_from_diagonal(*state);
      for (double v : values) csv += format_csv(v) + ",";
      csv += format_csv(report.dot_correlator) + "," +
             format_csv(report.dot_squared_correlator);
      for (double b : spectrum.b) csv += "," + format_csv(b);
      csv += std::string(",") + (report.ppt_negative ? "true" : "false");
      csv += std::string(",") + (report.reduction_violated ? "true" : "false");
      csv += std::string(",") + (report.majorization_violated ? "true" : "false");
      csv += std::string(",") + (report.lur_violated ? "true" : "false");
      csv += "\n";
    }
  }

  write_output(o.out_path, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement analysis for SU(2)-invariant two-spin states"};
  app.require_subcommand(1);

  AnalyzeOpts a;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Evaluate every entanglement criterion for one state");
  analyze->add_option("--state", a.state_path, "State JSON file (\"-\" reads standard input)");
  auto* a_ts1 = analyze->add_option("--ts1", a.ts1, "Doubled spin of subsystem 1");
  auto* a_ts2 = analyze->add_option("--ts2", a.ts2, "Doubled spin of subsystem 2");
  a_ts1->needs(a_ts2);
  a_ts2->needs(a_ts1);
  analyze->add_option("--A", a.weights, "Multiplet weights, ascending J")->delimiter(',');
  analyze->add_flag("--thermal", a.thermal, "Gibbs state of coupling * S1.S2");
  analyze->add_option("--coupling", a.coupling, "Heisenberg coupling strength (default 1)");
  analyze->add_option("--beta", a.beta, "Inverse temperature");
  analyze->add_option("--ring", a.ring, "Analyze a nearest-neighbor pair of this Heisenberg ring");
  analyze->add_option("--tol", a.tol, "Verdict tolerance");
  analyze->add_option("--out", a.out_path, "Write the report here instead of standard output");

  VerifyOpts v;
  CLI::App* verify = app.add_subcommand(
      "verify", "Cross-check the spectrum methods on seeded random states");
  verify->add_option("--ts1", v.ts1, "Doubled spin of subsystem 1")->required();
  verify->add_option("--ts2", v.ts2, "Doubled spin of subsystem 2")->required();
  verify->add_option("--samples", v.samples, "Number of random states (default 100)");
  verify->add_option("--seed", v.seed, "Base seed; sample i uses seed + i");
  verify->add_option("--out", v.out_path, "Write the summary here instead of standard output");

  ScanOpts s;
  CLI::App* scan = app.add_subcommand(
      "scan", "Sweep parameters and emit a CSV table of criteria");
  auto* s_ts1 = scan->add_option("--ts1", s.ts1, "Doubled spin of subsystem 1");
  auto* s_ts2 = scan->add_option("--ts2", s.ts2, "Doubled spin of subsystem 2");
  s_ts1->needs(s_ts2);
  s_ts2->needs(s_ts1);
  scan->add_option("--A", s.weights, "Base multiplet weights for A-component sweeps")
      ->delimiter(',');
  scan->add_flag("--thermal", s.thermal, "Gibbs-state generator");
  scan->add_option("--coupling", s.coupling, "Heisenberg coupling strength (default 1)");
  scan->add_option("--beta", s.beta, "Inverse temperature");
  scan->add_option("--ring", s.ring, "Heisenberg-ring generator with this ring size");
  scan->add_option("--sweep", s.sweep_specs,
                   "Sweep axis var:from:to:step (beta, coupling, A<i>, ring); up to two");
  scan->add_option("--tol", s.tol, "Verdict tolerance");
  scan->add_option("--out", s.out_path, "Write the table here instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  a.has_spins = a_ts1->count() > 0;
  s.has_spins = s_ts1->count() > 0;

  try {
    if (analyze->parsed()) return run_analyze(a);
    if (verify->parsed()) return run_verify(v);
    return run_scan(s);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
