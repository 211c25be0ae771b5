#ifndef ANTISGD_TESTS_SYNTH_HPP
#define ANTISGD_TESTS_SYNTH_HPP

#include <string>
#include <utility>
#include <vector>

#include "antisgd/dataset.hpp"
#include "antisgd/rng.hpp"

namespace testsupport {

using antisgd::Dataset;
using antisgd::DenseVector;
using antisgd::Sample;
using antisgd::SparseEntry;
using antisgd::SparseVector;

inline Sample make_sample(const std::vector<std::pair<int, double>>& entries,
                          int dim, int label) {
  std::vector<SparseEntry> es;
  es.reserve(entries.size());
  for (const auto& [idx, v] : entries) es.push_back({idx, v});
  Sample s;
  s.features = SparseVector(std::move(es), dim);
  s.label = label;
  s.raw_label = label;
  return s;
}

// `pairs` clone pairs with opposite labels and disjoint one-feature
// supports: the ideal case where every paired gradient cancels exactly.
inline Dataset antipodal_dataset(int pairs) {
  std::vector<Sample> samples;
  for (int k = 1; k <= pairs; ++k) {
    const double v = 1.0 + 0.5 * k;
    samples.push_back(make_sample({{k, v}}, pairs, +1));
    samples.push_back(make_sample({{k, v}}, pairs, -1));
  }
  return Dataset::from_samples(std::move(samples), pairs);
}

// Random sparse dataset; the first two samples carry opposite labels so both
// classes are always present.
inline Dataset random_dataset(antisgd::SplitMix64& rng, int n, int dim,
                              double density = 0.8) {
  std::vector<Sample> samples;
  samples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<SparseEntry> entries;
    for (int k = 1; k <= dim; ++k)
      if (rng.uniform01() < density)
        entries.push_back({k, 4.0 * rng.uniform01() - 2.0});
    int label;
    if (i == 0)
      label = +1;
    else if (i == 1)
      label = -1;
    else
      label = rng.bounded(2) == 0 ? +1 : -1;
    Sample s;
    s.features = SparseVector(std::move(entries), dim);
    s.label = label;
    s.raw_label = label;
    samples.push_back(std::move(s));
  }
  return Dataset::from_samples(std::move(samples), dim);
}

inline DenseVector random_w(antisgd::SplitMix64& rng, int dim,
                            double scale = 1.0) {
  DenseVector w(static_cast<std::size_t>(dim));
  for (double& v : w) v = scale * (2.0 * rng.uniform01() - 1.0);
  return w;
}

// Two overlapping class blobs with dense positive-ish features, shaped like
// the benchmark datasets (n, dim, lambda follow the published table rows).
// Overlap guarantees opposite-label sample pairs with positive inner
// products, which is where antithetic pairing helps.
inline Dataset blob_dataset(std::uint64_t seed, int n, int dim) {
  antisgd::SplitMix64 rng(seed);
  DenseVector base(static_cast<std::size_t>(dim)), delta(base.size());
  for (std::size_t k = 0; k < base.size(); ++k) {
    base[k] = 0.5 + rng.uniform01();          // class-shared center
    delta[k] = 0.3 * (2.0 * rng.uniform01() - 1.0);  // class separation
  }
  std::vector<Sample> samples;
  samples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int label;
    if (i == 0)
      label = +1;
    else if (i == 1)
      label = -1;
    else
      label = rng.bounded(2) == 0 ? +1 : -1;
    std::vector<SparseEntry> entries;
    entries.reserve(base.size());
    for (int k = 1; k <= dim; ++k) {
      const double noise = rng.uniform01() - 0.5;
      const double v =
          base[static_cast<std::size_t>(k - 1)] +
          label * delta[static_cast<std::size_t>(k - 1)] + noise;
      if (v != 0.0) entries.push_back({k, v});
    }
    Sample s;
    s.features = SparseVector(std::move(entries), dim);
    s.label = label;
    s.raw_label = label;
    samples.push_back(std::move(s));
  }
  return Dataset::from_samples(std::move(samples), dim);
}

}  // namespace testsupport

#endif
