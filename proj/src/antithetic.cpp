#include "antisgd/antithetic.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "antisgd/errors.hpp"
#include "antisgd/text_format.hpp"

namespace antisgd {

double pairing_metric(const Sample& a, const Sample& b) {
  return a.label * b.label * dot(a.features, b.features);
}

namespace {

std::vector<double> recompute_metrics(const std::vector<int>& pairing,
                                      const Dataset& ds) {
  std::vector<double> m(pairing.size());
  for (std::size_t i = 0; i < pairing.size(); ++i)
    m[i] = pairing_metric(ds.sample(static_cast<int>(i) + 1),
                          ds.sample(pairing[i]));
  return m;
}

void check_permutation_no_fixed_point(const std::vector<int>& pairing) {
  const int n = static_cast<int>(pairing.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    const int j = pairing[i - 1];
    if (j < 1 || j > n)
      throw consistency_error("pairing target " + std::to_string(j) +
                              " out of range at index " + std::to_string(i));
    if (seen[j - 1])
      throw consistency_error("pairing target " + std::to_string(j) +
                              " appears more than once");
    seen[j - 1] = 1;
    if (j == i)
      throw consistency_error("pairing has fixed point at index " +
                              std::to_string(i));
  }
}

}  // namespace

AntitheticTable AntitheticTable::from_pairing(std::vector<int> pairing,
                                              const Dataset& ds) {
  if (static_cast<int>(pairing.size()) != ds.n())
    throw consistency_error("pairing length " +
                            std::to_string(pairing.size()) +
                            " does not match dataset n=" +
                            std::to_string(ds.n()));
  check_permutation_no_fixed_point(pairing);
  AntitheticTable t;
  t.metric_values_ = recompute_metrics(pairing, ds);
  t.pairing_ = std::move(pairing);
  return t;
}

AntitheticTable build_table(const Dataset& ds) {
  const int n = ds.n();
  if (n < 2)
    throw size_error("antithetic table needs n >= 2, got " +
                     std::to_string(n));

  std::vector<int> pairing(static_cast<std::size_t>(n), 0);
  // Unclaimed sample indices, kept sorted ascending so that scanning in
  // order with a strict '<' realizes the smallest-index tie-break.
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[i] = i + 1;

  for (int i = 1; i <= n; ++i) {
    const Sample& si = ds.sample(i);
    int best = 0;
    double best_metric = std::numeric_limits<double>::infinity();
    for (int j : pool) {
      if (j == i) continue;
      const double m = pairing_metric(si, ds.sample(j));
      if (m < best_metric) {
        best_metric = m;
        best = j;
      }
    }

    if (best == 0) {
      // Only i itself is left unclaimed; possible solely at i == n. Steal
      // from the assigned pair whose partner sits best opposite i.
      int steal_p = 0;
      double steal_metric = std::numeric_limits<double>::infinity();
      for (int p = 1; p < n; ++p) {
        const double m = pairing_metric(si, ds.sample(pairing[p - 1]));
        if (m < steal_metric) {
          steal_metric = m;
          steal_p = p;
        }
      }
      pairing[i - 1] = pairing[steal_p - 1];
      pairing[steal_p - 1] = i;
      pool.clear();
      break;
    }

    pairing[i - 1] = best;
    pool.erase(std::lower_bound(pool.begin(), pool.end(), best));
  }

  AntitheticTable t;
  t.metric_values_ = recompute_metrics(pairing, ds);
  t.pairing_ = std::move(pairing);
  return t;
}

PairingStats pairing_stats(const AntitheticTable& table, const Dataset& ds) {
  if (table.n() != ds.n())
    throw consistency_error("table n=" + std::to_string(table.n()) +
                            " does not match dataset n=" +
                            std::to_string(ds.n()));
  PairingStats st;
  st.n = table.n();
  st.min_metric = std::numeric_limits<double>::infinity();
  st.max_metric = -std::numeric_limits<double>::infinity();
  int negatives = 0;
  double sum = 0.0;
  for (int i = 1; i <= table.n(); ++i) {
    const double stored = table.metric_values()[i - 1];
    const double fresh = pairing_metric(ds.sample(i), ds.sample(table.partner(i)));
    if (std::abs(fresh - stored) > 1e-12)
      throw consistency_error("stored metric at index " + std::to_string(i) +
                              " (" + format_double(stored) +
                              ") disagrees with recomputed value " +
                              format_double(fresh));
    if (fresh < 0.0) ++negatives;
    sum += fresh;
    st.min_metric = std::min(st.min_metric, fresh);
    st.max_metric = std::max(st.max_metric, fresh);
  }
  st.fraction_negative = static_cast<double>(negatives) / table.n();
  st.mean_metric = sum / table.n();
  return st;
}

void write_table(const AntitheticTable& table, std::ostream& out) {
  for (int i = 1; i <= table.n(); ++i)
    out << i << ' ' << table.partner(i) << ' '
        << format_double(table.metric_values()[i - 1]) << '\n';
}

void write_table_file(const AntitheticTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot open table file for writing: " + path);
  write_table(table, out);
}

std::vector<TableRow> read_table_rows(std::istream& in) {
  std::vector<TableRow> rows;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string a, b, c, extra;
    if (!(ls >> a >> b >> c) || (ls >> extra))
      throw parse_error("expected `i partner metric`", line_no);
    auto i = parse_int(a);
    auto p = parse_int(b);
    auto m = parse_double(c);
    if (!i || !p || !m)
      throw parse_error("bad table row '" + line + "'", line_no);
    rows.push_back({static_cast<int>(*i), static_cast<int>(*p), *m});
  }
  return rows;
}

AntitheticTable read_table(std::istream& in, const Dataset& ds) {
  auto rows = read_table_rows(in);
  if (static_cast<int>(rows.size()) != ds.n())
    throw consistency_error("table has " + std::to_string(rows.size()) +
                            " rows but dataset has n=" +
                            std::to_string(ds.n()));
  std::vector<int> pairing(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].index != static_cast<int>(k) + 1)
      throw consistency_error("table row " + std::to_string(k + 1) +
                              " carries index " + std::to_string(rows[k].index));
    pairing[k] = rows[k].partner;
  }
  AntitheticTable t = AntitheticTable::from_pairing(std::move(pairing), ds);
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (std::abs(rows[k].metric - t.metric_values()[k]) > 1e-12)
      throw consistency_error("table metric at index " + std::to_string(k + 1) +
                              " disagrees with dataset");
  return t;
}

AntitheticTable read_table_file(const std::string& path, const Dataset& ds) {
  std::ifstream in(path);
  if (!in) throw error("cannot open table file: " + path);
  return read_table(in, ds);
}

}  // namespace antisgd
