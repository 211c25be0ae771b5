#ifndef ANTISGD_TESTS_REFERENCE_GREEDY_HPP
#define ANTISGD_TESTS_REFERENCE_GREEDY_HPP

#include <vector>

#include "antisgd/dataset.hpp"

namespace testsupport {

// Straight-line restatement of the pairing construction, deliberately naive
// and independent of the production code: boolean claimed[] scan, its own
// entry-by-entry inner product. Ties go to the smallest index; when the last
// sample finds everyone claimed it steals the cheapest assigned partner.
inline std::vector<int> reference_greedy(const antisgd::Dataset& ds) {
  const int n = ds.n();
  auto metric = [&](int i, int j) {
    double s = 0.0;
    for (const auto& ea : ds.sample(i).features.entries())
      for (const auto& eb : ds.sample(j).features.entries())
        if (ea.index == eb.index) s += ea.value * eb.value;
    return ds.sample(i).label * ds.sample(j).label * s;
  };

  std::vector<bool> claimed(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> partner(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int best = 0;
    double best_metric = 0.0;
    for (int j = 1; j <= n; ++j) {
      if (j == i || claimed[static_cast<std::size_t>(j)]) continue;
      const double m = metric(i, j);
      if (best == 0 || m < best_metric) {
        best = j;
        best_metric = m;
      }
    }
    if (best == 0) {
      int donor = 0;
      double donor_metric = 0.0;
      for (int p = 1; p <= n; ++p) {
        if (p == i || partner[static_cast<std::size_t>(p)] == 0) continue;
        const double m = metric(i, partner[static_cast<std::size_t>(p)]);
        if (donor == 0 || m < donor_metric) {
          donor = p;
          donor_metric = m;
        }
      }
      partner[static_cast<std::size_t>(i)] =
          partner[static_cast<std::size_t>(donor)];
      partner[static_cast<std::size_t>(donor)] = i;
    } else {
      partner[static_cast<std::size_t>(i)] = best;
      claimed[static_cast<std::size_t>(best)] = true;
    }
  }
  return std::vector<int>(partner.begin() + 1, partner.end());
}

}  // namespace testsupport

#endif
