#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "antisgd/bench.hpp"
#include "antisgd/errors.hpp"

// Subcommands: build-table (pairing table + stats sidecar), run (uniform vs
// antithetic SGD traces + summary), verify (table diagnostics). Exit codes:
// 0 success, 1 reported violations/divergence, 2 hard errors.
int main(int argc, char** argv) {
  CLI::App app{"Antithetic-pair mini-batch SGD benchmark harness"};
  app.require_subcommand(1);

  std::string dataset_path, table_path, out_path, spec_path;
  std::string loss_name = "logistic";
  double lambda = 1e-2;
  double eta0 = 0.1;
  double eta = -1.0;
  long long iterations = -1;
  int batch = 2;
  long long checkpoint_every = -1;
  std::vector<std::uint64_t> seeds;
  bool scale_features = false;

  CLI::App* build = app.add_subcommand(
      "build-table", "Build the antithetic pairing table for a dataset");
  build->add_option("--dataset", dataset_path, "LIBSVM dataset file")
      ->required();
  build->add_option("--out", out_path, "Output table file")->required();
  build->add_flag("--scale-features", scale_features,
                  "Per-feature max-abs scaling before pairing");

  CLI::App* run = app.add_subcommand(
      "run", "Run uniform and antithetic SGD across seeds and emit CSV traces");
  run->add_option("--spec", spec_path,
                  "JSON experiment spec; explicit flags override its fields");
  auto* run_dataset = run->add_option("--dataset", dataset_path, "LIBSVM dataset file");
  auto* run_table = run->add_option(
      "--table", table_path, "Stored pairing table (built in memory if absent)");
  auto* run_loss =
      run->add_option("--loss", loss_name, "Loss kind: logistic or svm")
          ->check(CLI::IsMember({"logistic", "svm"}));
  auto* run_lambda = run->add_option("--lambda", lambda, "L2 regularization weight");
  auto* run_eta0 = run->add_option("--eta0", eta0, "Initial step size");
  auto* run_eta = run->add_option(
      "--eta", eta, "Step-size decay (default: lambda, or 1e-2 when lambda=0)");
  auto* run_iters = run->add_option(
      "--iters", iterations, "SGD steps (default: 5 effective epochs)");
  auto* run_batch = run->add_option("--batch", batch, "Mini-batch size");
  auto* run_seeds =
      run->add_option("--seeds", seeds, "Comma-separated seed list (default 1..10)")
          ->delimiter(',');
  auto* run_ckpt = run->add_option("--checkpoint-every", checkpoint_every,
                                   "Steps between checkpoints (default: one epoch)");
  auto* run_out = run->add_option("--out", out_path, "Output directory");
  auto* run_scale = run->add_flag("--scale-features", scale_features,
                                  "Per-feature max-abs scaling");

  CLI::App* verify = app.add_subcommand(
      "verify", "Validate a stored table and report pairing diagnostics");
  verify->add_option("--dataset", dataset_path, "LIBSVM dataset file")
      ->required();
  verify->add_option("--table", table_path, "Stored pairing table")->required();
  verify->add_option("--loss", loss_name, "Loss for the w=0 variance report")
      ->check(CLI::IsMember({"logistic", "svm"}));
  double verify_lambda = 0.0;
  verify->add_option("--lambda", verify_lambda,
                     "Regularization for the w=0 variance report");
  verify->add_option("--batch", batch, "Batch size for the w=0 variance report");
  verify->add_flag("--scale-features", scale_features,
                   "Per-feature max-abs scaling");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed())
      return antisgd::cmd_build_table(dataset_path, out_path, scale_features);

    if (run->parsed()) {
      antisgd::ExperimentSpec spec;
      if (!spec_path.empty()) spec = antisgd::load_spec_json(spec_path);
      if (run_dataset->count()) spec.dataset_path = dataset_path;
      if (run_table->count()) spec.table_path = table_path;
      if (run_loss->count())
        spec.loss_kind = antisgd::loss_kind_from_cli(loss_name);
      if (run_lambda->count()) spec.lambda = lambda;
      if (run_eta0->count()) spec.eta0 = eta0;
      if (run_eta->count()) spec.eta = eta;
      if (run_iters->count()) spec.iterations = iterations;
      if (run_batch->count()) spec.batch_size = batch;
      if (run_seeds->count()) spec.seeds = seeds;
      if (run_ckpt->count()) spec.checkpoint_every = checkpoint_every;
      if (run_out->count()) spec.output_dir = out_path;
      if (run_scale->count()) spec.scale_features = scale_features;
      if (spec.dataset_path.empty())
        throw antisgd::config_error("run needs --dataset or a spec file");
      return antisgd::cmd_run(spec);
    }

    return antisgd::cmd_verify(dataset_path, table_path,
                               antisgd::loss_kind_from_cli(loss_name),
                               verify_lambda, batch, scale_features);
  } catch (const antisgd::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
