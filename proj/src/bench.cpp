#include "antisgd/bench.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "json.hpp"

#include "antisgd/antithetic.hpp"
#include "antisgd/dataset.hpp"
#include "antisgd/errors.hpp"
#include "antisgd/log.hpp"
#include "antisgd/metrics.hpp"
#include "antisgd/optimizer.hpp"
#include "antisgd/sampling.hpp"
#include "antisgd/text_format.hpp"

namespace fs = std::filesystem;

namespace antisgd {

LossKind loss_kind_from_cli(const std::string& name) {
  if (name == "logistic") return LossKind::LogisticPm1;
  if (name == "svm") return LossKind::HingeL2;
  throw config_error("unknown loss '" + name + "' (expected logistic or svm)");
}

ExperimentSpec load_spec_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open spec file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error("spec file " + path + ": " + e.what());
  }
  if (!j.is_object())
    throw schema_error("spec file " + path + " must hold a JSON object");

  ExperimentSpec spec;
  std::string key;
  try {
    for (const auto& item : j.items()) {
      key = item.key();
      const auto& v = item.value();
      if (key == "dataset")
        spec.dataset_path = v.get<std::string>();
      else if (key == "loss")
        spec.loss_kind = loss_kind_from_cli(v.get<std::string>());
      else if (key == "lambda")
        spec.lambda = v.get<double>();
      else if (key == "eta0")
        spec.eta0 = v.get<double>();
      else if (key == "eta")
        spec.eta = v.get<double>();
      else if (key == "iterations")
        spec.iterations = v.get<long long>();
      else if (key == "batch")
        spec.batch_size = v.get<int>();
      else if (key == "seeds")
        spec.seeds = v.get<std::vector<std::uint64_t>>();
      else if (key == "checkpoint_every")
        spec.checkpoint_every = v.get<long long>();
      else if (key == "table")
        spec.table_path = v.get<std::string>();
      else if (key == "out_dir")
        spec.output_dir = v.get<std::string>();
      else if (key == "scale_features")
        spec.scale_features = v.get<bool>();
      else
        throw schema_error("unknown spec key: " + key);
    }
  } catch (const nlohmann::json::exception& e) {
    throw schema_error("spec key '" + key + "': " + e.what());
  }
  if (spec.dataset_path.empty())
    throw schema_error("spec file " + path + " needs a dataset path");
  return spec;
}

namespace {

std::string dataset_stem(const std::string& path) {
  return fs::path(path).stem().string();
}

Dataset load_dataset(const std::string& path, bool scale) {
  Dataset ds = parse_libsvm_file(path);
  return scale ? scale_features_max_abs(ds) : ds;
}

void fill_defaults(ExperimentSpec& spec, const Dataset& ds) {
  const long long epoch =
      std::max<long long>(1, ds.n() / std::max(1, spec.batch_size));
  if (spec.eta < 0.0) spec.eta = spec.lambda > 0.0 ? spec.lambda : 1e-2;
  if (spec.iterations < 0) spec.iterations = 5 * epoch;
  if (spec.checkpoint_every < 0) spec.checkpoint_every = epoch;
  if (spec.seeds.empty())
    for (std::uint64_t s = 1; s <= 10; ++s) spec.seeds.push_back(s);
}

void write_trace_csv(const std::string& path, Strategy strategy,
                     std::uint64_t seed,
                     const std::vector<TraceRecord>& trace) {
  std::ofstream out(path);
  if (!out) throw config_error("cannot write trace file: " + path);
  out << "# rng=splitmix64 strategy=" << strategy_name(strategy)
      << " seed=" << seed << "\n";
  out << "t,eta,objective,variance\n";
  for (const TraceRecord& rec : trace)
    out << rec.t << ',' << format_double(rec.eta) << ','
        << format_double(rec.objective) << ',' << format_double(rec.variance)
        << "\n";
}

struct StrategyTraces {
  Strategy strategy = Strategy::Uniform;
  int attempted = 0;
  std::vector<std::vector<TraceRecord>> completed;
};

void append_summary_rows(std::ofstream& out, const StrategyTraces& st) {
  if (st.completed.empty()) return;
  const std::size_t rows = st.completed.front().size();
  for (const auto& trace : st.completed)
    if (trace.size() != rows ||
        trace.front().t != st.completed.front().front().t ||
        trace.back().t != st.completed.front().back().t)
      throw consistency_error(
          "completed runs disagree on checkpoint placement");
  for (std::size_t k = 0; k < rows; ++k) {
    double obj = 0.0, var = 0.0;
    for (const auto& trace : st.completed) {
      obj += trace[k].objective;
      var += trace[k].variance;
    }
    obj /= static_cast<double>(st.completed.size());
    var /= static_cast<double>(st.completed.size());
    out << strategy_name(st.strategy) << ',' << st.completed.front()[k].t
        << ',' << format_double(st.completed.front()[k].eta) << ','
        << format_double(obj) << ',' << format_double(var) << "\n";
  }
}

}  // namespace

int cmd_build_table(const std::string& dataset_path,
                    const std::string& out_path, bool scale_features) {
  const Dataset ds = load_dataset(dataset_path, scale_features);
  const AntitheticTable table = build_table(ds);
  write_table_file(table, out_path);
  const PairingStats stats = pairing_stats(table, ds);
  const std::string stats_path = out_path + ".stats";
  std::ofstream out(stats_path);
  if (!out) throw config_error("cannot write stats file: " + stats_path);
  out << "n " << stats.n << "\n";
  out << "dim " << ds.dim() << "\n";
  out << "fraction_negative " << format_double(stats.fraction_negative) << "\n";
  out << "mean_metric " << format_double(stats.mean_metric) << "\n";
  out << "min_metric " << format_double(stats.min_metric) << "\n";
  out << "max_metric " << format_double(stats.max_metric) << "\n";
  log::info("wrote " + out_path + " and " + stats_path);
  return 0;
}

int cmd_run(const ExperimentSpec& spec_in) {
  const Dataset ds = load_dataset(spec_in.dataset_path, spec_in.scale_features);
  ExperimentSpec spec = spec_in;
  fill_defaults(spec, ds);

  const LossModel model{spec.loss_kind, spec.lambda};
  validate_model(model);
  const StepSchedule schedule{spec.eta0, spec.eta};
  validate_schedule(schedule);
  if (spec.seeds.empty()) throw config_error("seed list is empty");

  const AntitheticTable table =
      spec.table_path.empty() ? build_table(ds)
                              : read_table_file(spec.table_path, ds);

  fs::create_directories(spec.output_dir);
  const std::string stem = dataset_stem(spec.dataset_path);

  RunConfig run_cfg;
  run_cfg.iterations = spec.iterations;
  run_cfg.checkpoint_every = spec.checkpoint_every;

  int diverged = 0;
  std::vector<StrategyTraces> results;
  for (Strategy strategy : {Strategy::Uniform, Strategy::Antithetic}) {
    StrategyTraces st;
    st.strategy = strategy;
    for (std::uint64_t seed : spec.seeds) {
      ++st.attempted;
      SamplerConfig sampler_cfg{strategy, spec.batch_size, seed};
      const std::string trace_path =
          (fs::path(spec.output_dir) /
           (stem + "_" + strategy_name(strategy) + "_" + std::to_string(seed) +
            ".csv"))
              .string();
      try {
        RunResult result =
            run_sgd(ds, model, schedule, sampler_cfg, &table, run_cfg);
        write_trace_csv(trace_path, strategy, seed, result.trace);
        st.completed.push_back(std::move(result.trace));
      } catch (const divergence_error& e) {
        ++diverged;
        log::error(std::string(strategy_name(strategy)) + " seed " +
                   std::to_string(seed) + ": " + e.what());
      }
    }
    results.push_back(std::move(st));
  }

  const std::string summary_path =
      (fs::path(spec.output_dir) / (stem + "_summary.csv")).string();
  std::ofstream out(summary_path);
  if (!out) throw config_error("cannot write summary file: " + summary_path);
  out << "# rng=splitmix64 dataset=" << stem << " n=" << ds.n()
      << " dim=" << ds.dim() << " loss=" << loss_kind_name(spec.loss_kind)
      << " lambda=" << format_double(spec.lambda);
  for (const StrategyTraces& st : results)
    out << " " << strategy_name(st.strategy) << "_runs="
        << st.completed.size() << "/" << st.attempted;
  out << "\n";
  out << "strategy,t,eta,mean_objective,mean_variance\n";
  for (const StrategyTraces& st : results) append_summary_rows(out, st);
  log::info("wrote " + summary_path);
  return diverged == 0 ? 0 : 1;
}

int cmd_verify(const std::string& dataset_path, const std::string& table_path,
               LossKind kind, double lambda, int batch_size,
               bool scale_features) {
  const Dataset ds = load_dataset(dataset_path, scale_features);
  std::ifstream in(table_path);
  if (!in) throw config_error("cannot open table file: " + table_path);
  const std::vector<TableRow> rows = read_table_rows(in);

  const int n = ds.n();
  std::vector<std::string> violations;
  if (static_cast<int>(rows.size()) != n)
    violations.push_back("table has " + std::to_string(rows.size()) +
                         " rows but dataset has " + std::to_string(n) +
                         " samples");

  std::vector<int> partner_hits(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const TableRow& row = rows[k];
    const int i = static_cast<int>(k) + 1;
    if (row.index != i)
      violations.push_back("row " + std::to_string(i) + ": index " +
                           std::to_string(row.index) + " out of sequence");
    if (row.partner < 1 || row.partner > n) {
      violations.push_back("row " + std::to_string(i) + ": partner " +
                           std::to_string(row.partner) + " out of range");
      continue;
    }
    ++partner_hits[static_cast<std::size_t>(row.partner)];
    if (i <= n) {
      if (row.partner == i)
        violations.push_back("row " + std::to_string(i) +
                             ": sample pairs with itself");
      const double fresh = pairing_metric(ds.sample(i), ds.sample(row.partner));
      if (std::abs(fresh - row.metric) > 1e-12)
        violations.push_back("row " + std::to_string(i) + ": stored metric " +
                             format_double(row.metric) +
                             " differs from recomputed " +
                             format_double(fresh));
    }
  }
  if (static_cast<int>(rows.size()) == n) {
    for (int j = 1; j <= n; ++j) {
      const int hits = partner_hits[static_cast<std::size_t>(j)];
      if (hits == 0)
        violations.push_back("sample " + std::to_string(j) +
                             " is never a partner");
      else if (hits > 1)
        violations.push_back("sample " + std::to_string(j) + " is a partner " +
                             std::to_string(hits) + " times");
    }
  }

  for (const std::string& v : violations) std::cout << "violation: " << v << "\n";
  if (!violations.empty()) return 1;

  std::vector<int> pairing;
  pairing.reserve(rows.size());
  for (const TableRow& row : rows) pairing.push_back(row.partner);
  const AntitheticTable table = AntitheticTable::from_pairing(pairing, ds);
  const PairingStats stats = pairing_stats(table, ds);
  std::cout << "n " << stats.n << "\n";
  std::cout << "fraction_negative " << format_double(stats.fraction_negative)
            << "\n";
  std::cout << "mean_metric " << format_double(stats.mean_metric) << "\n";
  std::cout << "min_metric " << format_double(stats.min_metric) << "\n";
  std::cout << "max_metric " << format_double(stats.max_metric) << "\n";

  const LossModel model{kind, lambda};
  validate_model(model);
  const DenseVector w0(static_cast<std::size_t>(ds.dim()), 0.0);
  const VarianceReport uniform =
      exact_variance_uniform(model, w0, ds, batch_size);
  const VarianceReport anti =
      exact_variance_antithetic(model, w0, ds, table, batch_size);
  std::cout << "variance_uniform_w0 " << format_double(uniform.variance)
            << "\n";
  std::cout << "variance_antithetic_w0 " << format_double(anti.variance)
            << "\n";
  std::cout << "mean_pair_inner_w0 " << format_double(*anti.mean_pair_inner)
            << "\n";
  return 0;
}

}  // namespace antisgd
