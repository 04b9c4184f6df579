#pragma once

#include "gkde/bandwidth.hpp"
#include "gkde/distributions.hpp"
#include "gkde/sample.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gkde::sim {

//! Bandwidth selection policy of a study.
struct Selector
{
  SelectionMethod method = SelectionMethod::rule_of_thumb;
  double fixed_bandwidth = 0.0;

  static Selector rule_of_thumb() { return {SelectionMethod::rule_of_thumb, 0.0}; }
  static Selector oracle() { return {SelectionMethod::oracle, 0.0}; }
  static Selector fixed(double b) { return {SelectionMethod::fixed, b}; }
};

std::string selector_name(const Selector& selector);

//! Monte Carlo study description: true model, sample sizes, replication
//! count and the bandwidth/grid/target policy.
struct StudyConfig
{
  ParametricModel model;
  std::vector<std::size_t> sample_sizes;
  std::size_t replications = 100;
  std::uint64_t seed = 0;
  //! Explicit evaluation grid; when absent the automatic policy applies:
  //! 500 points on [0.01 q, q] with q the model's 0.999 quantile.
  std::optional<EvaluationGrid> explicit_grid;
  Selector selector;
  CurveTarget target = CurveTarget::derivative;
};

//! Discretised integrated squared error:
//! kappa = step * sum over the grid of (truth - estimate)^2.
//! Throws std::invalid_argument when the lengths differ (grid mismatch).
double kappa_error(std::span<const double> truth, const CurveEstimate& estimate);

//! The grid a study will evaluate on (explicit grid or automatic policy).
EvaluationGrid resolve_grid(const StudyConfig& config);

struct ReplicationOutcome
{
  double kappa;
  double bandwidth;
};

//! One replication: draw a sample of the given size from the model on the
//! stream derived from (seed, size, replication_index), select the
//! bandwidth, estimate the target curve, and score it against the model's
//! closed-form curve. Selector errors propagate.
ReplicationOutcome run_replication(const StudyConfig& config,
                                   std::size_t size,
                                   std::size_t replication_index);

struct ReplicationRecord
{
  std::size_t index = 0;
  double kappa = 0.0;
  double bandwidth = 0.0;
  bool failed = false;
  std::string error;
};

struct StudyRow
{
  std::size_t n;
  double kappa_mean;
  double kappa_std; //!< population standard deviation over successes
  double bandwidth_mean;
  std::size_t failures;
  std::vector<ReplicationRecord> replications;
};

struct StudyResult
{
  StudyConfig config;
  EvaluationGrid grid;
  std::vector<StudyRow> rows;
};

//! Full study: every sample size times `replications` replications, each on
//! its own derived stream. Replications may run on `threads` workers; the
//! per-replication results are ordered by index, so serial and parallel
//! runs produce identical output. Failed replications are recorded, not
//! dropped; a row where everything failed aborts the study.
StudyResult run_study(const StudyConfig& config, unsigned threads = 1);

//! CSV: header `n,kappa_mean,kappa_std,bandwidth_mean,failures`, one row
//! per sample size, numbers in round-trip-exact form.
void write_csv(const StudyResult& result, std::ostream& os);

//! JSON mirror of the CSV plus config echo and per-replication detail.
void write_json(const StudyResult& result, std::ostream& os);

} // namespace gkde::sim
