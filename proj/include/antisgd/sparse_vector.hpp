#ifndef ANTISGD_SPARSE_VECTOR_HPP
#define ANTISGD_SPARSE_VECTOR_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "antisgd/errors.hpp"

namespace antisgd {

using DenseVector = std::vector<double>;

struct SparseEntry {
  int index;  // 1-based
  double value;

  bool operator==(const SparseEntry&) const = default;
};

// Sparse instance vector. Indices are 1-based, strictly increasing and no
// stored value is zero; `dim` is an upper bound on the indices, shared by all
// vectors of one dataset.
class SparseVector {
 public:
  SparseVector() : dim_(1) {}

  // Drops zero-valued entries; rejects indices that are non-positive,
  // non-increasing or beyond `dim`.
  SparseVector(std::vector<SparseEntry> entries, int dim) : dim_(dim) {
    if (dim < 1) throw dimension_error("sparse vector dim must be positive");
    entries_.reserve(entries.size());
    int prev = 0;
    for (const SparseEntry& e : entries) {
      if (e.index < 1)
        throw dimension_error("sparse index " + std::to_string(e.index) +
                              " is not positive");
      if (e.index <= prev)
        throw dimension_error("sparse indices must be strictly increasing");
      if (e.index > dim)
        throw dimension_error("sparse index " + std::to_string(e.index) +
                              " exceeds dim " + std::to_string(dim));
      prev = e.index;
      if (e.value != 0.0) entries_.push_back(e);
    }
  }

  const std::vector<SparseEntry>& entries() const { return entries_; }
  int dim() const { return dim_; }
  std::size_t nnz() const { return entries_.size(); }

  double norm_sq() const {
    double s = 0.0;
    for (const SparseEntry& e : entries_) s += e.value * e.value;
    return s;
  }

  bool operator==(const SparseVector&) const = default;

 private:
  std::vector<SparseEntry> entries_;
  int dim_;
};

// Merge over the two sorted index lists, accumulating products in ascending
// index order. The canonical order makes dot(a,b) and dot(b,a) bitwise equal.
inline double dot(const SparseVector& a, const SparseVector& b) {
  double s = 0.0;
  auto ia = a.entries().begin(), ea = a.entries().end();
  auto ib = b.entries().begin(), eb = b.entries().end();
  while (ia != ea && ib != eb) {
    if (ia->index < ib->index) {
      ++ia;
    } else if (ib->index < ia->index) {
      ++ib;
    } else {
      s += ia->value * ib->value;
      ++ia;
      ++ib;
    }
  }
  return s;
}

inline void check_fits(std::span<const double> w, const SparseVector& x,
                       const char* who) {
  if (static_cast<std::size_t>(x.dim()) > w.size())
    throw dimension_error(std::string(who) + ": dense vector of length " +
                          std::to_string(w.size()) +
                          " cannot address sparse dim " +
                          std::to_string(x.dim()));
}

inline double dense_dot(std::span<const double> w, const SparseVector& x) {
  check_fits(w, x, "dense_dot");
  double s = 0.0;
  for (const SparseEntry& e : x.entries()) s += e.value * w[e.index - 1];
  return s;
}

// w[i] += alpha * x[i] on the stored entries only.
inline void axpy(double alpha, const SparseVector& x, std::span<double> w) {
  check_fits(w, x, "axpy");
  for (const SparseEntry& e : x.entries()) w[e.index - 1] += alpha * e.value;
}

inline double norm_sq(std::span<const double> w) {
  double s = 0.0;
  for (double v : w) s += v * v;
  return s;
}

}  // namespace antisgd

#endif
