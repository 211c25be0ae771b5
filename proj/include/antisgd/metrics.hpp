#ifndef ANTISGD_METRICS_HPP
#define ANTISGD_METRICS_HPP

#include <cstdint>
#include <optional>

#include "antisgd/antithetic.hpp"
#include "antisgd/dataset.hpp"
#include "antisgd/loss.hpp"
#include "antisgd/sampling.hpp"

namespace antisgd {

// Exact second-order statistics of one mini-batch gradient estimator g_B at
// a fixed iterate: variance = E||g_B - grad f||^2 = second_moment minus
// full_grad_norm_sq (tiny negative float residue is clamped to 0).
// mean_pair_inner = (1/n) sum_i <grad f_i, grad f_S[i]>, present only for
// the antithetic estimator; mean_pair_inner - full_grad_norm_sq is the
// covariance term that decides whether pairing beats uniform draws.
struct VarianceReport {
  Strategy strategy = Strategy::Uniform;
  double variance = 0.0;
  double second_moment = 0.0;
  double full_grad_norm_sq = 0.0;
  std::optional<double> mean_pair_inner;
};

// Uniform-with-replacement batches of size b: single-sample variance / b.
VarianceReport exact_variance_uniform(const LossModel& model,
                                      const DenseVector& w,
                                      const Dataset& data, int b);

// Antithetic batches of b/2 table pairs: pair-average variance / (b/2).
// b must be even and >= 2.
VarianceReport exact_variance_antithetic(const LossModel& model,
                                         const DenseVector& w,
                                         const Dataset& data,
                                         const AntitheticTable& table, int b);

// Monte-Carlo check of the exact formulas: average of || g_B - grad f ||^2
// over `trials` freshly drawn batches (trials >= 2). table may be null for
// the uniform strategy.
double empirical_variance(const LossModel& model, const DenseVector& w,
                          const Dataset& data, const SamplerConfig& cfg,
                          const AntitheticTable* table, long long trials);

}  // namespace antisgd

#endif
