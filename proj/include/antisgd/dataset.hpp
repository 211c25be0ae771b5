#ifndef ANTISGD_DATASET_HPP
#define ANTISGD_DATASET_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "antisgd/sparse_vector.hpp"

namespace antisgd {

struct Sample {
  SparseVector features;
  int label = 1;           // canonical, in {-1, +1}
  double raw_label = 1.0;  // as read from the source file

  bool operator==(const Sample&) const = default;
};

// Binary-classification dataset with canonical {-1,+1} labels.
//
// Files parsed from LIBSVM text get the strict invariants: at least two
// samples, exactly two distinct raw labels, smaller raw label mapped to -1
// and larger to +1 (so {0,1} files land on the z = 2y - 1 convention).
// Programmatic construction via from_samples is deliberately looser — tests
// and diagnostics build single-label or single-sample datasets.
class Dataset {
 public:
  static Dataset from_samples(std::vector<Sample> samples, int dim);

  const std::vector<Sample>& samples() const { return samples_; }
  const Sample& sample(int i) const { return samples_[i - 1]; }  // 1-based
  int n() const { return static_cast<int>(samples_.size()); }
  int dim() const { return dim_; }

  // raw label -> canonical label, for every raw label present
  const std::map<double, int>& label_map() const { return label_map_; }

  bool operator==(const Dataset&) const = default;

  friend Dataset parse_libsvm(std::istream& in);

 private:
  Dataset() = default;
  std::vector<Sample> samples_;
  int dim_ = 1;
  std::map<double, int> label_map_;
};

// LIBSVM text: one `<label> <idx>:<val> ...` sample per line, indices
// 1-based strictly ascending. Lines starting with '#' and blank lines are
// skipped. dim is inferred as the largest index seen.
Dataset parse_libsvm(std::istream& in);
Dataset parse_libsvm_string(const std::string& text);
Dataset parse_libsvm_file(const std::string& path);

// Inverse of parse_libsvm up to dropped zero entries: writes raw labels and
// entries with shortest round-trip formatting.
void serialize_libsvm(const Dataset& ds, std::ostream& out);
std::string serialize_libsvm_string(const Dataset& ds);

// Per-feature max-abs scaling (optional CLI preprocessing, off by default).
// Features whose max |value| is zero are left untouched.
Dataset scale_features_max_abs(const Dataset& ds);

}  // namespace antisgd

#endif
