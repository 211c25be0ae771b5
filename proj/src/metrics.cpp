#include "antisgd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "antisgd/errors.hpp"
#include "antisgd/log.hpp"

namespace antisgd {

namespace {

void check_dim(const Dataset& data, const DenseVector& w) {
  if (static_cast<int>(w.size()) != data.dim())
    throw dimension_error("iterate has " + std::to_string(w.size()) +
                          " coordinates but dataset has dimension " +
                          std::to_string(data.dim()));
}

// `noise` is the caller's bound on accumulated summation rounding; without it
// the check would misfire on well-formed inputs whose raw moments dwarf the
// centered values (large feature scales, or iterates far from the origin).
bool close(double a, double b, double noise) {
  return std::abs(a - b) <=
         1e-10 * std::max({1.0, std::abs(a), std::abs(b)}) + noise;
}

// Second moments of per-sample gradients and, with a table, of the
// pair-average gradients plus the raw pair inner products.
// fill(i, out) must overwrite `out` with the gradient of sample i.
struct RawMoments {
  double second_single = 0.0;  // (1/n) sum ||g_i||^2
  double second_pair = 0.0;    // (1/n) sum ||(g_i + g_S[i]) / 2||^2
  double pair_inner = 0.0;     // (1/n) sum <g_i, g_S[i]>
};

template <class FillGrad>
RawMoments raw_moments(const Dataset& data, const AntitheticTable* table,
                       std::size_t d, FillGrad fill) {
  const int n = data.n();
  DenseVector gi(d), gj(d);
  RawMoments m;
  for (int i = 1; i <= n; ++i) {
    fill(i, gi);
    double norm_i = 0.0;
    for (std::size_t k = 0; k < d; ++k) norm_i += gi[k] * gi[k];
    m.second_single += norm_i;
    if (table != nullptr) {
      fill(table->partner(i), gj);
      double norm_pair = 0.0, inner = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        const double a = 0.5 * (gi[k] + gj[k]);
        norm_pair += a * a;
        inner += gi[k] * gj[k];
      }
      m.second_pair += norm_pair;
      m.pair_inner += inner;
    }
  }
  m.second_single /= n;
  m.second_pair /= n;
  m.pair_inner /= n;
  return m;
}

// Variances along two float paths: full per-sample gradients against
// ||grad f||^2, and data-only gradients against their own mean. The
// regularizer shifts every gradient equally, so the centered quantities of
// both paths must agree (up to summation rounding); a larger gap means the
// gradient code lost that cancellation. The data-only values are the ones
// reported: data gradients are bounded by the feature norms no matter how
// far the iterate wanders, so that path never cancels catastrophically.
struct CenteredStats {
  double var_single = 0.0;  // data-gradient path
  double var_pair = 0.0;    // data-gradient path
  double cov = 0.0;         // data-gradient path
  double full_norm_sq = 0.0;
  double pair_inner = 0.0;  // raw, full-gradient path
  double noise = 0.0;       // rounding bound for identity checks
};

CenteredStats checked_stats(const LossModel& model, const DenseVector& w,
                            const Dataset& data, const AntitheticTable* table) {
  const std::size_t d = w.size();
  const DenseVector full = full_gradient(model, w, data);
  const double full_nsq = norm_sq(full);

  auto fill_full = [&](int i, DenseVector& out) {
    std::fill(out.begin(), out.end(), 0.0);
    add_sample_grad(model, w, data.sample(i), 1.0, out);
  };
  const RawMoments via_full = raw_moments(data, table, d, fill_full);

  auto fill_data = [&](int i, DenseVector& out) {
    std::fill(out.begin(), out.end(), 0.0);
    const Sample& s = data.sample(i);
    const double m = s.label * dense_dot(w, s.features);
    axpy(data_gradient_factor(model, m) * s.label, s.features, out);
  };
  DenseVector mean_data(d, 0.0);
  DenseVector scratch(d);
  for (int i = 1; i <= data.n(); ++i) {
    fill_data(i, scratch);
    for (std::size_t k = 0; k < d; ++k) mean_data[k] += scratch[k];
  }
  for (double& v : mean_data) v /= data.n();
  const double mean_data_nsq = norm_sq(mean_data);
  const RawMoments via_data = raw_moments(data, table, d, fill_data);

  CenteredStats st;
  st.full_norm_sq = full_nsq;
  st.pair_inner = via_full.pair_inner;
  st.var_single = via_data.second_single - mean_data_nsq;
  st.var_pair = via_data.second_pair - mean_data_nsq;
  st.cov = via_data.pair_inner - mean_data_nsq;

  const double scale = std::max({via_full.second_single, via_data.second_single,
                                 full_nsq, mean_data_nsq});
  st.noise = 64.0 * std::numeric_limits<double>::epsilon() *
             static_cast<double>(data.n() + static_cast<int>(d)) * scale;

  const double var_single_full = via_full.second_single - full_nsq;
  const double var_pair_full = via_full.second_pair - full_nsq;
  const double cov_full = via_full.pair_inner - full_nsq;
  if (!close(st.var_single, var_single_full, st.noise) ||
      (table != nullptr && (!close(st.var_pair, var_pair_full, st.noise) ||
                            !close(st.cov, cov_full, st.noise))))
    throw consistency_error(
        "centered gradient statistics disagree between the full-gradient and "
        "data-gradient paths");
  return st;
}

double clamp_variance(double v) {
  if (v >= 0.0) return v;
  if (v > -1e-10) {
    log::warn("clamping tiny negative variance to 0");
    return 0.0;
  }
  throw consistency_error("computed gradient variance is negative");
}

}  // namespace

VarianceReport exact_variance_uniform(const LossModel& model,
                                      const DenseVector& w,
                                      const Dataset& data, int b) {
  validate_model(model);
  check_dim(data, w);
  if (b < 1)
    throw config_error("batch size must be >= 1, got " + std::to_string(b));
  const CenteredStats st = checked_stats(model, w, data, nullptr);
  VarianceReport report;
  report.strategy = Strategy::Uniform;
  report.full_grad_norm_sq = st.full_norm_sq;
  report.variance = clamp_variance(st.var_single / b);
  report.second_moment = st.full_norm_sq + report.variance;
  return report;
}

VarianceReport exact_variance_antithetic(const LossModel& model,
                                         const DenseVector& w,
                                         const Dataset& data,
                                         const AntitheticTable& table, int b) {
  validate_model(model);
  check_dim(data, w);
  if (b < 2 || b % 2 != 0)
    throw config_error("antithetic batches must have even size >= 2, got " +
                       std::to_string(b));
  if (table.n() != data.n())
    throw config_error("pairing table covers " + std::to_string(table.n()) +
                       " samples but dataset has " + std::to_string(data.n()));
  const CenteredStats st = checked_stats(model, w, data, &table);

  // Pair averages over a permutation satisfy
  // var_pair = (var_single + cov) / 2 exactly; enforce it numerically.
  const double rhs = 0.5 * (st.var_single + st.cov);
  if (!close(st.var_pair, rhs, st.noise))
    throw consistency_error(
        "pair-average variance violates the (single + covariance) / 2 "
        "identity");

  VarianceReport report;
  report.strategy = Strategy::Antithetic;
  report.full_grad_norm_sq = st.full_norm_sq;
  report.variance = clamp_variance(st.var_pair / (b / 2));
  report.second_moment = st.full_norm_sq + report.variance;
  report.mean_pair_inner = st.pair_inner;
  return report;
}

double empirical_variance(const LossModel& model, const DenseVector& w,
                          const Dataset& data, const SamplerConfig& cfg,
                          const AntitheticTable* table, long long trials) {
  validate_model(model);
  check_dim(data, w);
  if (trials < 2)
    throw config_error("empirical variance needs trials >= 2, got " +
                       std::to_string(trials));
  const DenseVector full = full_gradient(model, w, data);
  Sampler sampler(cfg, data.n(), table);
  const std::size_t d = w.size();
  DenseVector g(d);
  double acc = 0.0;
  for (long long trial = 0; trial < trials; ++trial) {
    const MiniBatch batch = sampler.next();
    std::fill(g.begin(), g.end(), 0.0);
    for (int idx : batch.indices)
      add_sample_grad(model, w, data.sample(idx), 1.0, g);
    double dist = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double diff = g[k] / cfg.batch_size - full[k];
      dist += diff * diff;
    }
    acc += dist;
  }
  return acc / static_cast<double>(trials);
}

}  // namespace antisgd
