#include "antisgd/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "antisgd/errors.hpp"
#include "antisgd/text_format.hpp"

namespace antisgd {

namespace {

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

struct RawLine {
  double label;
  std::vector<SparseEntry> entries;
};

}  // namespace

Dataset Dataset::from_samples(std::vector<Sample> samples, int dim) {
  if (samples.empty()) throw schema_error("dataset needs at least one sample");
  if (dim < 1) throw dimension_error("dataset dim must be positive");
  Dataset ds;
  for (Sample& s : samples) {
    if (s.label != -1 && s.label != 1)
      throw schema_error("canonical label must be -1 or +1");
    if (s.features.dim() > dim)
      throw dimension_error("sample feature dim exceeds dataset dim");
    ds.label_map_[s.raw_label] = s.label;
  }
  ds.samples_ = std::move(samples);
  ds.dim_ = dim;
  return ds;
}

Dataset parse_libsvm(std::istream& in) {
  std::vector<RawLine> rows;
  std::set<double> raw_labels;
  int max_index = 0;

  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line) || line[line.find_first_not_of(" \t")] == '#') continue;

    auto toks = split_ws(line);
    auto label = parse_double(toks[0]);
    if (!label || !std::isfinite(*label))
      throw parse_error("bad label token '" + std::string(toks[0]) + "'",
                        line_no);

    RawLine row;
    row.label = *label;
    int prev_index = 0;
    for (std::size_t k = 1; k < toks.size(); ++k) {
      std::string_view tok = toks[k];
      std::size_t colon = tok.find(':');
      if (colon == std::string_view::npos || colon == 0 ||
          colon + 1 == tok.size())
        throw parse_error("expected idx:val, got '" + std::string(tok) + "'",
                          line_no);
      auto idx = parse_int(tok.substr(0, colon));
      auto val = parse_double(tok.substr(colon + 1));
      if (!idx || *idx < 1)
        throw parse_error("bad feature index in '" + std::string(tok) + "'",
                          line_no);
      if (!val || !std::isfinite(*val))
        throw parse_error("bad feature value in '" + std::string(tok) + "'",
                          line_no);
      if (*idx <= prev_index)
        throw parse_error("feature indices not strictly ascending at '" +
                              std::string(tok) + "'",
                          line_no);
      prev_index = static_cast<int>(*idx);
      max_index = std::max(max_index, prev_index);
      row.entries.push_back({prev_index, *val});
    }
    raw_labels.insert(row.label);
    rows.push_back(std::move(row));
  }

  if (rows.size() < 2)
    throw schema_error("dataset needs at least 2 samples, got " +
                       std::to_string(rows.size()));
  if (raw_labels.size() != 2)
    throw schema_error("dataset needs exactly 2 distinct labels, got " +
                       std::to_string(raw_labels.size()));

  // Smaller raw label -> -1, larger -> +1.
  const double raw_minus = *raw_labels.begin();
  const double raw_plus = *std::next(raw_labels.begin());

  Dataset ds;
  ds.dim_ = std::max(max_index, 1);
  ds.label_map_[raw_minus] = -1;
  ds.label_map_[raw_plus] = +1;
  ds.samples_.reserve(rows.size());
  for (RawLine& row : rows) {
    Sample s;
    s.features = SparseVector(std::move(row.entries), ds.dim_);
    s.raw_label = row.label;
    s.label = (row.label == raw_minus) ? -1 : +1;
    ds.samples_.push_back(std::move(s));
  }
  return ds;
}

Dataset parse_libsvm_string(const std::string& text) {
  std::istringstream in(text);
  return parse_libsvm(in);
}

Dataset parse_libsvm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open dataset file: " + path);
  try {
    return parse_libsvm(in);
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what(), 0);
  } catch (const schema_error& e) {
    throw schema_error(path + ": " + e.what());
  }
}

void serialize_libsvm(const Dataset& ds, std::ostream& out) {
  for (const Sample& s : ds.samples()) {
    out << format_double(s.raw_label);
    for (const SparseEntry& e : s.features.entries())
      out << ' ' << e.index << ':' << format_double(e.value);
    out << '\n';
  }
}

std::string serialize_libsvm_string(const Dataset& ds) {
  std::ostringstream out;
  serialize_libsvm(ds, out);
  return out.str();
}

Dataset scale_features_max_abs(const Dataset& ds) {
  std::vector<double> max_abs(static_cast<std::size_t>(ds.dim()), 0.0);
  for (const Sample& s : ds.samples())
    for (const SparseEntry& e : s.features.entries())
      max_abs[e.index - 1] = std::max(max_abs[e.index - 1], std::abs(e.value));

  std::vector<Sample> scaled;
  scaled.reserve(ds.samples().size());
  for (const Sample& s : ds.samples()) {
    std::vector<SparseEntry> entries = s.features.entries();
    for (SparseEntry& e : entries)
      if (max_abs[e.index - 1] > 0.0) e.value /= max_abs[e.index - 1];
    Sample t = s;
    t.features = SparseVector(std::move(entries), ds.dim());
    scaled.push_back(std::move(t));
  }
  return Dataset::from_samples(std::move(scaled), ds.dim());
}

}  // namespace antisgd
