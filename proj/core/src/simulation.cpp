#include "gkde/simulation.hpp"

#include "gkde/errors.hpp"
#include "gkde/estimators.hpp"
#include "gkde/format.hpp"
#include "gkde/rng.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <json.hpp>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace gkde::sim {

namespace {

void validate(const StudyConfig& config)
{
  if (config.replications < 1) {
    throw std::invalid_argument("StudyConfig: replications must be >= 1");
  }
  if (config.sample_sizes.empty()) {
    throw std::invalid_argument("StudyConfig: sample_sizes must not be empty");
  }
  for (std::size_t n : config.sample_sizes) {
    if (n < 2) {
      throw std::invalid_argument("StudyConfig: every sample size must be >= 2");
    }
  }
  if (config.selector.method == SelectionMethod::fixed &&
      (!std::isfinite(config.selector.fixed_bandwidth) ||
       config.selector.fixed_bandwidth <= 0.0)) {
    throw std::invalid_argument("StudyConfig: fixed selector needs a bandwidth > 0");
  }
}

std::vector<double> truth_curve(const StudyConfig& config, const EvaluationGrid& grid)
{
  std::vector<double> truth(static_cast<std::size_t>(grid.points()));
  for (int k = 0; k < grid.points(); ++k) {
    const double x = grid.at(k);
    truth[static_cast<std::size_t>(k)] = config.target == CurveTarget::density
                                           ? config.model.pdf(x)
                                           : config.model.pdf_d1(x);
  }
  return truth;
}

double select_bandwidth(const StudyConfig& config,
                        const Sample& sample,
                        std::size_t size)
{
  switch (config.selector.method) {
  case SelectionMethod::rule_of_thumb:
    return rule_of_thumb_bandwidth(sample).b;
  case SelectionMethod::oracle:
    return oracle_bandwidth(config.model, size).b;
  case SelectionMethod::fixed:
  default:
    return config.selector.fixed_bandwidth;
  }
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body)
{
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) {
        return;
      }
      body(i);
    }
  };
  std::vector<std::thread> pool;
  const unsigned spawn = std::min<unsigned>(threads, static_cast<unsigned>(count));
  pool.reserve(spawn);
  for (unsigned t = 0; t < spawn; ++t) {
    pool.emplace_back(worker);
  }
  for (auto& th : pool) {
    th.join();
  }
}

} // namespace

std::string selector_name(const Selector& selector)
{
  switch (selector.method) {
  case SelectionMethod::rule_of_thumb:
    return "rule_of_thumb";
  case SelectionMethod::oracle:
    return "oracle";
  case SelectionMethod::fixed:
  default:
    return "fixed(b=" + format::shortest(selector.fixed_bandwidth) + ")";
  }
}

double kappa_error(std::span<const double> truth, const CurveEstimate& estimate)
{
  if (truth.size() != estimate.values.size()) {
    throw std::invalid_argument(
      "kappa_error: truth and estimate evaluated on different grids (" +
      std::to_string(truth.size()) + " vs " +
      std::to_string(estimate.values.size()) + " points)");
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < truth.size(); ++k) {
    const double d = truth[k] - estimate.values[k];
    acc += d * d;
  }
  return estimate.grid.step() * acc;
}

EvaluationGrid resolve_grid(const StudyConfig& config)
{
  if (config.explicit_grid) {
    return *config.explicit_grid;
  }
  const double x_hi = config.model.quantile(0.999);
  return EvaluationGrid(0.01 * x_hi, x_hi, 500);
}

ReplicationOutcome run_replication(const StudyConfig& config,
                                   std::size_t size,
                                   std::size_t replication_index)
{
  validate(config);
  const EvaluationGrid grid = resolve_grid(config);
  const std::vector<double> truth = truth_curve(config, grid);

  const std::uint64_t stream =
    rng::derive_stream(config.seed, size, replication_index);
  const Sample sample = config.model.sample(size, stream);
  const double b = select_bandwidth(config, sample, size);
  const CurveEstimate estimate = estimate_curve(sample, b, grid, config.target);
  return {kappa_error(truth, estimate), b};
}

StudyResult run_study(const StudyConfig& config, unsigned threads)
{
  validate(config);
  const EvaluationGrid grid = resolve_grid(config);
  const std::vector<double> truth = truth_curve(config, grid);

  StudyResult result{config, grid, {}};
  result.rows.reserve(config.sample_sizes.size());

  for (std::size_t size : config.sample_sizes) {
    std::vector<ReplicationRecord> records(config.replications);

    parallel_for(config.replications, threads, [&](std::size_t rep) {
      ReplicationRecord& record = records[rep];
      record.index = rep;
      try {
        const std::uint64_t stream = rng::derive_stream(config.seed, size, rep);
        const Sample sample = config.model.sample(size, stream);
        record.bandwidth = select_bandwidth(config, sample, size);
        const CurveEstimate estimate =
          estimate_curve(sample, record.bandwidth, grid, config.target);
        record.kappa = kappa_error(truth, estimate);
      } catch (const std::exception& e) {
        record.failed = true;
        record.error = e.what();
        record.kappa = 0.0;
        record.bandwidth = 0.0;
      }
    });

    StudyRow row{size, 0.0, 0.0, 0.0, 0, std::move(records)};
    std::size_t successes = 0;
    for (const ReplicationRecord& r : row.replications) {
      if (r.failed) {
        ++row.failures;
      } else {
        ++successes;
        row.kappa_mean += r.kappa;
        row.bandwidth_mean += r.bandwidth;
      }
    }
    if (successes == 0) {
      throw IntegrabilityError("run_study: every replication failed for n = " +
                               std::to_string(size) + " (first error: " +
                               row.replications.front().error + ")");
    }
    row.kappa_mean /= static_cast<double>(successes);
    row.bandwidth_mean /= static_cast<double>(successes);
    double ss = 0.0;
    for (const ReplicationRecord& r : row.replications) {
      if (!r.failed) {
        const double d = r.kappa - row.kappa_mean;
        ss += d * d;
      }
    }
    row.kappa_std = std::sqrt(ss / static_cast<double>(successes));
    result.rows.push_back(std::move(row));
  }
  return result;
}

void write_csv(const StudyResult& result, std::ostream& os)
{
  os << "n,kappa_mean,kappa_std,bandwidth_mean,failures\n";
  for (const StudyRow& row : result.rows) {
    os << row.n << ',' << format::g17(row.kappa_mean) << ','
       << format::g17(row.kappa_std) << ',' << format::g17(row.bandwidth_mean)
       << ',' << row.failures << '\n';
  }
}

void write_json(const StudyResult& result, std::ostream& os)
{
  nlohmann::ordered_json doc;
  doc["model"] = result.config.model.describe();
  doc["target"] =
    result.config.target == CurveTarget::density ? "density" : "derivative";
  doc["selector"] = selector_name(result.config.selector);
  doc["seed"] = result.config.seed;
  doc["replications"] = result.config.replications;
  doc["grid"] = {{"x_min", result.grid.x_min()},
                 {"x_max", result.grid.x_max()},
                 {"points", result.grid.points()}};
  doc["rows"] = nlohmann::ordered_json::array();
  for (const StudyRow& row : result.rows) {
    nlohmann::ordered_json jrow;
    jrow["n"] = row.n;
    jrow["kappa_mean"] = row.kappa_mean;
    jrow["kappa_std"] = row.kappa_std;
    jrow["bandwidth_mean"] = row.bandwidth_mean;
    jrow["failures"] = row.failures;
    jrow["replications"] = nlohmann::ordered_json::array();
    for (const ReplicationRecord& r : row.replications) {
      nlohmann::ordered_json jrep;
      jrep["index"] = r.index;
      if (r.failed) {
        jrep["failed"] = true;
        jrep["error"] = r.error;
      } else {
        jrep["kappa"] = r.kappa;
        jrep["bandwidth"] = r.bandwidth;
      }
      jrow["replications"].push_back(std::move(jrep));
    }
    doc["rows"].push_back(std::move(jrow));
  }
  os << doc.dump(2) << '\n';
}

} // namespace gkde::sim
