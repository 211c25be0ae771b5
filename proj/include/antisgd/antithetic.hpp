#ifndef ANTISGD_ANTITHETIC_HPP
#define ANTISGD_ANTITHETIC_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "antisgd/dataset.hpp"

namespace antisgd {

// Pairing metric y_i * y_j * <x_i, x_j>: a w-independent bound on the inner
// product of the two samples' data gradients. Symmetric in its arguments.
double pairing_metric(const Sample& a, const Sample& b);

// Fixed-point-free permutation S of {1..n} mapping each sample to its
// antithetic partner, with the realized metric value per pair.
class AntitheticTable {
 public:
  // Validates that `pairing` is a permutation of 1..n with no fixed points,
  // then recomputes the metric values against the dataset.
  static AntitheticTable from_pairing(std::vector<int> pairing,
                                      const Dataset& ds);

  int n() const { return static_cast<int>(pairing_.size()); }
  int partner(int i) const { return pairing_[i - 1]; }  // 1-based
  const std::vector<int>& pairing() const { return pairing_; }
  const std::vector<double>& metric_values() const { return metric_values_; }

 private:
  AntitheticTable() = default;
  friend AntitheticTable build_table(const Dataset& ds);
  std::vector<int> pairing_;
  std::vector<double> metric_values_;
};

// Greedy construction: for i = 1..n pick the not-yet-claimed j != i with the
// smallest pairing metric (ties to the smallest index) and remove it from the
// candidate pool. If at i == n only i itself remains unclaimed, repair by
// stealing: choose the assigned p minimizing metric(i, S[p]), set
// S[i] = S[p], S[p] = i. The result is always a fixed-point-free permutation
// and identical across rebuilds of the same dataset.
AntitheticTable build_table(const Dataset& ds);

struct PairingStats {
  int n = 0;
  double fraction_negative = 0.0;  // share of pairs with metric < 0
  double mean_metric = 0.0;
  double min_metric = 0.0;
  double max_metric = 0.0;
};

// Recomputes every metric from the dataset and cross-checks the stored
// values before aggregating.
PairingStats pairing_stats(const AntitheticTable& table, const Dataset& ds);

// Text format, one line per sample: `i S[i] metric`. Round-trip exact and
// byte-stable across rebuilds.
void write_table(const AntitheticTable& table, std::ostream& out);
void write_table_file(const AntitheticTable& table, const std::string& path);

struct TableRow {
  int index;
  int partner;
  double metric;
};

// Syntax-level read: row structure only, no permutation checks. The verify
// command uses this to enumerate semantic violations itself.
std::vector<TableRow> read_table_rows(std::istream& in);

// Strict read: parses rows, checks them against the dataset and returns a
// validated table (throws consistency_error on any violation).
AntitheticTable read_table(std::istream& in, const Dataset& ds);
AntitheticTable read_table_file(const std::string& path, const Dataset& ds);

}  // namespace antisgd

#endif
