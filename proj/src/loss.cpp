#include "antisgd/loss.hpp"

#include <cmath>
#include <string>

#include "antisgd/errors.hpp"

namespace antisgd {

namespace {

// log(1 + exp(t)) without overflow for large |t|.
double softplus(double t) {
  if (t > 0.0) return t + std::log1p(std::exp(-t));
  return std::log1p(std::exp(t));
}

// sigma(-m) = 1 / (1 + exp(m)); exp overflow saturates cleanly to 0.
double sigmoid_neg(double m) { return 1.0 / (1.0 + std::exp(m)); }

void check_finite(std::span<const double> w) {
  for (double v : w)
    if (!std::isfinite(v))
      throw domain_error("non-finite entry in weight vector");
}

double margin_of(std::span<const double> w, const Sample& s) {
  return s.label * dense_dot(w, s.features);
}

}  // namespace

const char* loss_kind_name(LossKind k) {
  switch (k) {
    case LossKind::LogisticPm1: return "logistic_pm1";
    case LossKind::Logistic01: return "logistic_01";
    case LossKind::HingeL2: return "hinge_l2";
  }
  return "?";
}

void validate_model(const LossModel& model) {
  if (!(model.lambda >= 0.0))
    throw config_error("lambda must be nonnegative");
  if (model.kind == LossKind::HingeL2 && model.lambda == 0.0)
    throw config_error("hinge_l2 requires lambda > 0");
}

double data_gradient_factor(const LossModel& model, double margin) {
  switch (model.kind) {
    case LossKind::LogisticPm1:
    case LossKind::Logistic01:
      return -sigmoid_neg(margin);
    case LossKind::HingeL2:
      return margin <= 1.0 ? -1.0 : 0.0;
  }
  return 0.0;
}

double sample_loss(const LossModel& model, std::span<const double> w,
                   const Sample& s) {
  check_finite(w);
  const double m = margin_of(w, s);
  double data = 0.0;
  switch (model.kind) {
    case LossKind::LogisticPm1:
    case LossKind::Logistic01:
      data = softplus(-m);
      break;
    case LossKind::HingeL2:
      data = std::max(0.0, 1.0 - m);
      break;
  }
  return data + 0.5 * model.lambda * norm_sq(w);
}

GradientVector data_grad(const LossModel& model, std::span<const double> w,
                         const Sample& s) {
  check_finite(w);
  GradientVector g(w.size(), 0.0);
  const double c = data_gradient_factor(model, margin_of(w, s));
  axpy(c * s.label, s.features, g);
  return g;
}

GradientVector sample_grad(const LossModel& model, std::span<const double> w,
                           const Sample& s) {
  GradientVector g = data_grad(model, w, s);
  if (model.lambda != 0.0)
    for (std::size_t k = 0; k < g.size(); ++k) g[k] += model.lambda * w[k];
  return g;
}

void add_sample_grad(const LossModel& model, std::span<const double> w,
                     const Sample& s, double coeff, std::span<double> out) {
  check_finite(w);
  const double c = data_gradient_factor(model, margin_of(w, s));
  axpy(coeff * c * s.label, s.features, out);
  if (model.lambda != 0.0)
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] += coeff * model.lambda * w[k];
}

double full_objective(const LossModel& model, std::span<const double> w,
                      const Dataset& ds) {
  check_finite(w);
  double sum = 0.0;
  LossModel data_only{model.kind, 0.0};
  for (const Sample& s : ds.samples()) sum += sample_loss(data_only, w, s);
  return sum / ds.n() + 0.5 * model.lambda * norm_sq(w);
}

GradientVector full_gradient(const LossModel& model, std::span<const double> w,
                             const Dataset& ds) {
  check_finite(w);
  GradientVector g(w.size(), 0.0);
  for (const Sample& s : ds.samples()) {
    const double c = data_gradient_factor(model, margin_of(w, s));
    axpy(c * s.label, s.features, g);
  }
  const double inv_n = 1.0 / ds.n();
  for (double& v : g) v *= inv_n;
  if (model.lambda != 0.0)
    for (std::size_t k = 0; k < g.size(); ++k) g[k] += model.lambda * w[k];
  return g;
}

}  // namespace antisgd
