#ifndef ANTISGD_BENCH_HPP
#define ANTISGD_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "antisgd/loss.hpp"

namespace antisgd {

// Declarative description of one experiment, loadable from JSON with CLI
// overrides. Negative or empty fields are derived from the dataset:
//   eta < 0             -> lambda when lambda > 0, else 1e-2
//   iterations < 0      -> 5 effective epochs (5 * max(1, n / batch_size))
//   checkpoint_every < 0 -> once per effective epoch (max(1, n / batch_size))
//   seeds empty         -> 1..10
struct ExperimentSpec {
  std::string dataset_path;
  LossKind loss_kind = LossKind::LogisticPm1;
  double lambda = 1e-2;
  double eta0 = 0.1;
  double eta = -1.0;  // step-size decay
  long long iterations = -1;
  int batch_size = 2;
  std::vector<std::uint64_t> seeds;
  long long checkpoint_every = -1;
  std::string table_path;  // empty: build the table in memory
  std::string output_dir = ".";
  bool scale_features = false;
};

// "logistic" or "svm" (the two losses the harness exposes).
LossKind loss_kind_from_cli(const std::string& name);

ExperimentSpec load_spec_json(const std::string& path);

// Builds the pairing table and writes it plus a `.stats` sidecar with the
// pairing statistics. Byte-idempotent.
int cmd_build_table(const std::string& dataset_path,
                    const std::string& out_path, bool scale_features);

// Runs every (strategy, seed) combination with one shared schedule and
// w0 = 0. Writes `<stem>_<strategy>_<seed>.csv` traces plus a
// `<stem>_summary.csv` of per-checkpoint means across seeds. Diverged runs
// are reported, excluded from the means, and make the exit status nonzero.
int cmd_run(const ExperimentSpec& spec);

// Checks a stored table against its dataset — permutation, fixed points,
// stored metric values — printing every violation rather than the first.
// On a clean table prints the pairing stats and the variance of both batch
// strategies at the zero iterate. Nonzero exit on any violation.
int cmd_verify(const std::string& dataset_path, const std::string& table_path,
               LossKind kind, double lambda, int batch_size,
               bool scale_features);

}  // namespace antisgd

#endif
