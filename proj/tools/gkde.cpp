// gkde -- gamma kernel density and density-derivative estimation on the
// positive semi-axis: curve estimation, data-driven bandwidth selection and
// the Monte Carlo study harness behind one CLI.

#include "gkde/bandwidth.hpp"
#include "gkde/distributions.hpp"
#include "gkde/errors.hpp"
#include "gkde/estimators.hpp"
#include "gkde/format.hpp"
#include "gkde/sample.hpp"
#include "gkde/simulation.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using gkde::CurveTarget;
using gkde::EvaluationGrid;
using gkde::ParametricModel;
using gkde::Sample;

class InputError : public std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::vector<double> read_values(std::istream& in, const std::string& source)
{
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      if (token.front() == '#') {
        break; // comment to end of line
      }
      double v = 0.0;
      std::size_t consumed = 0;
      try {
        v = std::stod(token, &consumed);
      } catch (const std::exception&) {
        consumed = 0;
      }
      if (consumed != token.size()) {
        throw InputError(source + ":" + std::to_string(line_no) +
                         ": not a number: '" + token + "'");
      }
      if (!std::isfinite(v) || v <= 0.0) {
        throw InputError(source + ":" + std::to_string(line_no) +
                         ": observations must be strictly positive, got " + token);
      }
      values.push_back(v);
    }
  }
  if (values.empty()) {
    throw InputError(source + ": no observations");
  }
  return values;
}

Sample read_sample(const std::string& path)
{
  if (path == "-") {
    return Sample(read_values(std::cin, "<stdin>"));
  }
  std::ifstream in(path);
  if (!in) {
    throw InputError(path + ": cannot open for reading");
  }
  return Sample(read_values(in, path));
}

ParametricModel parse_model(const std::string& spec)
{
  const auto colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  try {
    if (family == "maxwell") {
      return ParametricModel::maxwell(std::stod(args));
    }
    if (family == "weibull") {
      return ParametricModel::weibull(std::stod(args));
    }
    if (family == "gamma") {
      const auto comma = args.find(',');
      if (comma == std::string::npos) {
        throw InputError("gamma model needs two parameters: gamma:<rho>,<b>");
      }
      return ParametricModel::gamma(std::stod(args.substr(0, comma)),
                                    std::stod(args.substr(comma + 1)));
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("cannot parse model parameters in '" + spec + "'");
  }
  throw InputError("unknown model '" + family +
                   "' (expected maxwell:<sigma>, weibull:<s> or gamma:<rho>,<b>)");
}

EvaluationGrid parse_grid(const std::string& spec)
{
  const auto c1 = spec.find(':');
  const auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw InputError("grid must be <min>:<max>:<points>, got '" + spec + "'");
  }
  try {
    return EvaluationGrid(std::stod(spec.substr(0, c1)),
                          std::stod(spec.substr(c1 + 1, c2 - c1 - 1)),
                          std::stoi(spec.substr(c2 + 1)));
  } catch (const std::invalid_argument& e) {
    throw InputError("bad grid '" + spec + "': " + e.what());
  } catch (const std::exception&) {
    throw InputError("cannot parse grid '" + spec + "'");
  }
}

gkde::sim::Selector parse_selector(const std::string& spec)
{
  if (spec == "rot") {
    return gkde::sim::Selector::rule_of_thumb();
  }
  if (spec == "oracle") {
    return gkde::sim::Selector::oracle();
  }
  if (spec.starts_with("fixed:")) {
    try {
      return gkde::sim::Selector::fixed(std::stod(spec.substr(6)));
    } catch (const std::exception&) {
      throw InputError("cannot parse fixed bandwidth in '" + spec + "'");
    }
  }
  throw InputError("unknown selector '" + spec +
                   "' (expected rot, oracle or fixed:<b>)");
}

CurveTarget parse_target(const std::string& spec)
{
  if (spec == "density") {
    return CurveTarget::density;
  }
  if (spec == "derivative") {
    return CurveTarget::derivative;
  }
  throw InputError("unknown target '" + spec + "' (expected density or derivative)");
}

struct OutputFile
{
  explicit OutputFile(const std::string& path)
  {
    if (path != "-") {
      file.open(path);
      if (!file) {
        throw InputError(path + ": cannot open for writing");
      }
    }
  }
  std::ostream& stream() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
};

int cmd_estimate(const std::string& input,
                 const std::string& output,
                 const std::string& target_spec,
                 const std::string& bandwidth_spec,
                 const std::string& grid_spec,
                 const std::string& model_spec,
                 double fallback_bandwidth)
{
  const Sample sample = read_sample(input);
  const CurveTarget target = parse_target(target_spec);
  std::optional<ParametricModel> model;
  if (!model_spec.empty()) {
    model = parse_model(model_spec);
  }

  double b = 0.0;
  std::string provenance;
  if (bandwidth_spec == "auto") {
    try {
      const auto sel = gkde::rule_of_thumb_bandwidth(sample);
      b = sel.b;
      if (sel.diagnostics.closed_form_mismatch) {
        std::cerr << "warning: the closed form for I_d deviates from "
                     "quadrature by more than 1% (rho_m="
                  << gkde::format::shortest(sel.diagnostics.rho_m)
                  << ", b_m=" << gkde::format::shortest(sel.diagnostics.b_m)
                  << "); quadrature value used\n";
      }
      provenance = "# bandwidth=" + gkde::format::g17(b) +
                   " method=rule_of_thumb rho_m=" +
                   gkde::format::g17(sel.diagnostics.rho_m) +
                   " b_m=" + gkde::format::g17(sel.diagnostics.b_m);
    } catch (const gkde::IntegrabilityError& e) {
      if (fallback_bandwidth > 0.0) {
        b = fallback_bandwidth;
        provenance = "# bandwidth=" + gkde::format::g17(b) + " method=fallback";
      } else {
        throw gkde::IntegrabilityError(
          std::string(e.what()) +
          "\nhint: pass --bandwidth <value> or --fallback-bandwidth <value>");
      }
    }
  } else {
    try {
      b = std::stod(bandwidth_spec);
    } catch (const std::exception&) {
      throw InputError("bandwidth must be 'auto' or a positive number, got '" +
                       bandwidth_spec + "'");
    }
    if (!std::isfinite(b) || b <= 0.0) {
      throw InputError("bandwidth must be positive, got " + bandwidth_spec);
    }
  }

  EvaluationGrid grid = [&]() {
    if (grid_spec != "auto") {
      return parse_grid(grid_spec);
    }
    if (model) {
      const double x_hi = model->quantile(0.999);
      return EvaluationGrid(0.01 * x_hi, x_hi, 500);
    }
    double x_hi = 0.0;
    for (double v : sample.values()) {
      x_hi = std::max(x_hi, v);
    }
    return EvaluationGrid(0.01 * x_hi, x_hi, 500);
  }();

  const auto curve = gkde::estimate_curve(sample, b, grid, target);

  OutputFile out(output);
  if (!provenance.empty()) {
    out.stream() << provenance << '\n';
  }
  out.stream() << (model ? "x,true_value,value" : "x,value") << '\n';
  for (int k = 0; k < grid.points(); ++k) {
    const double x = grid.at(k);
    out.stream() << gkde::format::g17(x) << ',';
    if (model) {
      const double truth =
        target == CurveTarget::density ? model->pdf(x) : model->pdf_d1(x);
      out.stream() << gkde::format::g17(truth) << ',';
    }
    out.stream() << gkde::format::g17(curve.values[static_cast<std::size_t>(k)])
                 << '\n';
  }
  return 0;
}

int cmd_bandwidth(const std::string& input, const std::string& output, bool json)
{
  const Sample sample = read_sample(input);
  const auto m = gkde::moment_summary(sample);
  const auto sel = gkde::rule_of_thumb_bandwidth(sample);

  if (sel.diagnostics.closed_form_mismatch) {
    std::cerr << "warning: the closed form for I_d ("
              << gkde::format::shortest(sel.diagnostics.closed_form_denominator)
              << ") deviates from quadrature ("
              << gkde::format::shortest(sel.diagnostics.denominator)
              << ") by more than 1%; quadrature value used\n";
  }

  OutputFile out(output);
  if (json) {
    nlohmann::ordered_json doc;
    doc["mean"] = m.mean;
    doc["variance"] = m.variance;
    doc["rho_m"] = sel.diagnostics.rho_m;
    doc["b_m"] = sel.diagnostics.b_m;
    doc["i_n"] = sel.diagnostics.numerator;
    doc["i_d"] = sel.diagnostics.denominator;
    doc["b_0g"] = sel.b;
    out.stream() << doc.dump(2) << '\n';
  } else {
    out.stream() << "mean      " << gkde::format::g17(m.mean) << '\n'
                 << "variance  " << gkde::format::g17(m.variance) << '\n'
                 << "rho_m     " << gkde::format::g17(sel.diagnostics.rho_m) << '\n'
                 << "b_m       " << gkde::format::g17(sel.diagnostics.b_m) << '\n'
                 << "i_n       " << gkde::format::g17(sel.diagnostics.numerator)
                 << '\n'
                 << "i_d       " << gkde::format::g17(sel.diagnostics.denominator)
                 << '\n'
                 << "b_0g      " << gkde::format::g17(sel.b) << '\n';
  }
  return 0;
}

int cmd_simulate(const std::string& dist,
                 const std::string& sizes_csv,
                 std::size_t reps,
                 std::uint64_t seed,
                 const std::string& selector_spec,
                 const std::string& target_spec,
                 const std::string& grid_spec,
                 bool json,
                 unsigned threads,
                 const std::string& output)
{
  gkde::sim::StudyConfig config{
    parse_model(dist), {},           reps,
    seed,              std::nullopt, parse_selector(selector_spec),
    parse_target(target_spec),
  };

  std::istringstream sizes(sizes_csv);
  std::string token;
  while (std::getline(sizes, token, ',')) {
    try {
      const long long n = std::stoll(token);
      if (n < 2) {
        throw InputError("sample sizes must be >= 2, got " + token);
      }
      config.sample_sizes.push_back(static_cast<std::size_t>(n));
    } catch (const InputError&) {
      throw;
    } catch (const std::exception&) {
      throw InputError("cannot parse sample size '" + token + "'");
    }
  }
  if (config.sample_sizes.empty()) {
    throw InputError("--sizes must list at least one sample size");
  }
  if (grid_spec != "auto") {
    config.explicit_grid = parse_grid(grid_spec);
  }

  const auto result = gkde::sim::run_study(config, threads);
  OutputFile out(output);
  if (json) {
    gkde::sim::write_json(result, out.stream());
  } else {
    gkde::sim::write_csv(result, out.stream());
  }
  return 0;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"gamma kernel density and density-derivative estimation on "
               "(0, inf) with data-driven bandwidth selection"};
  app.require_subcommand(1);

  // estimate
  auto* estimate = app.add_subcommand(
    "estimate", "estimate a density or density-derivative curve from a sample");
  std::string est_input = "-";
  std::string est_output = "-";
  std::string est_target = "density";
  std::string est_bandwidth = "auto";
  std::string est_grid = "auto";
  std::string est_model;
  double est_fallback = 0.0;
  estimate->add_option("--input,-i", est_input,
                       "sample file, one or more values per line ('-' = stdin)");
  estimate->add_option("--output,-o", est_output, "output CSV file ('-' = stdout)");
  estimate->add_option("--target", est_target, "density | derivative");
  estimate->add_option("--bandwidth,-b", est_bandwidth,
                       "'auto' (rule of thumb) or a positive value");
  estimate->add_option("--grid", est_grid, "<min>:<max>:<points> or 'auto'");
  estimate->add_option("--model", est_model,
                       "known truth for a true_value column: maxwell:<sigma>, "
                       "weibull:<s> or gamma:<rho>,<b>");
  estimate->add_option("--fallback-bandwidth", est_fallback,
                       "bandwidth to use when the rule of thumb is not "
                       "integrable for this sample");

  // bandwidth
  auto* bandwidth = app.add_subcommand(
    "bandwidth", "rule-of-thumb bandwidth report for a sample");
  std::string bw_input = "-";
  std::string bw_output = "-";
  bool bw_json = false;
  bandwidth->add_option("--input,-i", bw_input, "sample file ('-' = stdin)");
  bandwidth->add_option("--output,-o", bw_output, "output file ('-' = stdout)");
  bandwidth->add_flag("--json", bw_json, "machine-readable output");

  // simulate
  auto* simulate = app.add_subcommand(
    "simulate", "Monte Carlo study: kappa error of the estimated curve "
                "against a known model");
  std::string sim_dist;
  std::string sim_sizes;
  std::size_t sim_reps = 100;
  std::uint64_t sim_seed = 0;
  std::string sim_selector = "rot";
  std::string sim_target = "derivative";
  std::string sim_grid = "auto";
  bool sim_json = false;
  unsigned sim_threads = 1;
  std::string sim_output = "-";
  simulate->add_option("--dist", sim_dist,
                       "true model: maxwell:<sigma> | weibull:<s> | gamma:<rho>,<b>")
    ->required();
  simulate->add_option("--sizes", sim_sizes, "comma-separated sample sizes")
    ->required();
  simulate->add_option("--reps", sim_reps, "replications per sample size");
  simulate->add_option("--seed", sim_seed, "base seed (all randomness flows from it)")
    ->required();
  simulate->add_option("--selector", sim_selector, "rot | oracle | fixed:<b>");
  simulate->add_option("--target", sim_target, "density | derivative");
  simulate->add_option("--grid", sim_grid,
                       "<min>:<max>:<points>, or 'auto' for 500 points on "
                       "[0.01 q, q] with q the 0.999 quantile");
  simulate->add_flag("--json", sim_json, "full JSON output with per-replication detail");
  simulate->add_option("--threads", sim_threads,
                       "worker threads for replications (1 = serial)");
  simulate->add_option("--output,-o", sim_output, "output file ('-' = stdout)");

  try {
    app.parse(argc, argv);
    if (estimate->parsed()) {
      return cmd_estimate(est_input, est_output, est_target, est_bandwidth,
                          est_grid, est_model, est_fallback);
    }
    if (bandwidth->parsed()) {
      return cmd_bandwidth(bw_input, bw_output, bw_json);
    }
    return cmd_simulate(sim_dist, sim_sizes, sim_reps, sim_seed, sim_selector,
                        sim_target, sim_grid, sim_json, sim_threads, sim_output);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const gkde::IntegrabilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const gkde::QuadratureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
