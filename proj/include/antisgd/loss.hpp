#ifndef ANTISGD_LOSS_HPP
#define ANTISGD_LOSS_HPP

#include <span>

#include "antisgd/dataset.hpp"
#include "antisgd/sparse_vector.hpp"

namespace antisgd {

enum class LossKind { LogisticPm1, Logistic01, HingeL2 };

const char* loss_kind_name(LossKind k);

// Per-sample objective f_i(w) = g_i(w) + (lambda/2)||w||^2. The data term
// g_i and the common L2 regularizer are kept separable so that variance and
// pairing computations can work on the data term alone.
struct LossModel {
  LossKind kind = LossKind::LogisticPm1;
  double lambda = 0.0;
};

// Rejects lambda < 0, and lambda == 0 for the hinge model (its objective
// includes the L2 term by definition). The low-level evaluators below stay
// permissive so the data term can be studied at any lambda.
void validate_model(const LossModel& model);

using GradientVector = DenseVector;

// Scalar c such that the data gradient is c * y * x at margin m = y*<w,x>.
// Logistic: -sigma(-m); hinge: -1 when m <= 1 (subgradient at the kink takes
// the descent branch), else 0. Both logistic forms coincide on canonical
// labels, so they share this factor.
double data_gradient_factor(const LossModel& model, double margin);

double sample_loss(const LossModel& model, std::span<const double> w,
                   const Sample& s);

GradientVector sample_grad(const LossModel& model, std::span<const double> w,
                           const Sample& s);

// Data-dependent part only: grad g_i(w), no lambda*w term.
GradientVector data_grad(const LossModel& model, std::span<const double> w,
                         const Sample& s);

// Mean of the per-sample terms. The shared regularizer is applied once,
// which equals the mean of n identical copies.
double full_objective(const LossModel& model, std::span<const double> w,
                      const Dataset& ds);
GradientVector full_gradient(const LossModel& model, std::span<const double> w,
                             const Dataset& ds);

// Accumulates coeff * sample_grad(model, w, s) into out without allocating.
void add_sample_grad(const LossModel& model, std::span<const double> w,
                     const Sample& s, double coeff, std::span<double> out);

}  // namespace antisgd

#endif
