#include "antisgd/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "antisgd/errors.hpp"
#include "antisgd/metrics.hpp"

namespace antisgd {

void validate_schedule(const StepSchedule& s) {
  if (!(s.eta0 > 0.0) || !std::isfinite(s.eta0))
    throw config_error("eta0 must be positive and finite");
  if (!(s.decay > 0.0) || !std::isfinite(s.decay))
    throw config_error("step decay must be positive and finite");
}

double step_size(const StepSchedule& s, long long t) {
  return s.eta0 / (1.0 + s.eta0 * s.decay * static_cast<double>(t));
}

namespace {

bool iterate_ok(const DenseVector& w) {
  double norm_sq = 0.0;
  for (double v : w) {
    if (!std::isfinite(v)) return false;
    norm_sq += v * v;
  }
  return norm_sq <= 1e24;  // ||w|| <= 1e12
}

double checkpoint_variance(const Dataset& data, const LossModel& model,
                           const AntitheticTable* table, const DenseVector& w,
                           const SamplerConfig& cfg) {
  if (cfg.strategy == Strategy::Antithetic)
    return exact_variance_antithetic(model, w, data, *table, cfg.batch_size)
        .variance;
  return exact_variance_uniform(model, w, data, cfg.batch_size).variance;
}

}  // namespace

RunResult run_sgd(const Dataset& data, const LossModel& model,
                  const StepSchedule& schedule, const SamplerConfig& sampler_cfg,
                  const AntitheticTable* table, const RunConfig& run_cfg) {
  validate_model(model);
  validate_schedule(schedule);
  if (run_cfg.iterations < 0)
    throw config_error("iterations must be >= 0, got " +
                       std::to_string(run_cfg.iterations));
  if (run_cfg.checkpoint_every < 1)
    throw config_error("checkpoint_every must be >= 1, got " +
                       std::to_string(run_cfg.checkpoint_every));

  const int d = data.dim();
  DenseVector w;
  if (run_cfg.w0.empty()) {
    w.assign(static_cast<std::size_t>(d), 0.0);
  } else {
    if (static_cast<int>(run_cfg.w0.size()) != d)
      throw dimension_error("w0 has " + std::to_string(run_cfg.w0.size()) +
                            " coordinates but dataset has dimension " +
                            std::to_string(d));
    w = run_cfg.w0;
  }

  Sampler sampler(sampler_cfg, data.n(), table);
  const int b = sampler_cfg.batch_size;

  RunResult result;
  auto checkpoint = [&](long long t) {
    TraceRecord rec;
    rec.t = t;
    rec.eta = step_size(schedule, t);
    rec.objective = full_objective(model, w, data);
    rec.variance = checkpoint_variance(data, model, table, w, sampler_cfg);
    result.trace.push_back(rec);
  };

  checkpoint(0);
  DenseVector grad(static_cast<std::size_t>(d), 0.0);
  for (long long t = 0; t < run_cfg.iterations; ++t) {
    const MiniBatch batch = sampler.next();
    if (run_cfg.record_batches) result.batches.push_back(batch);

    std::fill(grad.begin(), grad.end(), 0.0);
    for (int idx : batch.indices)
      add_sample_grad(model, w, data.sample(idx), 1.0, grad);

    const double scale = step_size(schedule, t) / static_cast<double>(b);
    for (int j = 0; j < d; ++j)
      w[static_cast<std::size_t>(j)] -= scale * grad[static_cast<std::size_t>(j)];

    if (!iterate_ok(w))
      throw divergence_error(t + 1, "iterate norm exceeded 1e12 or went non-finite");

    const long long done = t + 1;
    if (done % run_cfg.checkpoint_every == 0 || done == run_cfg.iterations)
      checkpoint(done);
  }

  result.w = std::move(w);
  return result;
}

}  // namespace antisgd
