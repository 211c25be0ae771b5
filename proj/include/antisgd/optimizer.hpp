#ifndef ANTISGD_OPTIMIZER_HPP
#define ANTISGD_OPTIMIZER_HPP

#include <cstdint>
#include <vector>

#include "antisgd/antithetic.hpp"
#include "antisgd/dataset.hpp"
#include "antisgd/loss.hpp"
#include "antisgd/sampling.hpp"

namespace antisgd {

// Decaying step size eta0 / (1 + eta0 * decay * t), t = 0, 1, 2, ...
struct StepSchedule {
  double eta0 = 0.1;
  double decay = 0.01;
};

void validate_schedule(const StepSchedule& s);
double step_size(const StepSchedule& s, long long t);

struct RunConfig {
  long long iterations = 0;
  long long checkpoint_every = 1;
  DenseVector w0;                // empty = zeros(dim)
  bool record_batches = false;   // keep every mini-batch for inspection
};

// One trace row per checkpoint. eta is the step size the run applies when
// leaving this iterate (step_size(t)), so the t = 0 row shows eta0.
struct TraceRecord {
  long long t = 0;
  double eta = 0.0;
  double objective = 0.0;
  double variance = 0.0;  // exact mini-batch gradient variance at this iterate
};

struct RunResult {
  DenseVector w;
  std::vector<TraceRecord> trace;
  std::vector<MiniBatch> batches;  // filled only when record_batches
};

// Mini-batch SGD on the full objective. All gradients in a batch are taken at
// the same iterate, then w moves by -(eta_t / b) * their sum. Checkpoints are
// written at t = 0, every checkpoint_every steps, and at the final iteration;
// each records the exact gradient variance for the configured strategy.
// Throws divergence_error when an iterate stops being finite or its norm
// passes 1e12.
RunResult run_sgd(const Dataset& data, const LossModel& model,
                  const StepSchedule& schedule, const SamplerConfig& sampler_cfg,
                  const AntitheticTable* table, const RunConfig& run_cfg);

}  // namespace antisgd

#endif
