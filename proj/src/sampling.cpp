#include "antisgd/sampling.hpp"

#include <string>

#include "antisgd/errors.hpp"

namespace antisgd {

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Uniform:
      return "uniform";
    case Strategy::Antithetic:
      return "antithetic";
  }
  return "?";
}

MiniBatch next_batch_uniform(SplitMix64& state, int n, int b) {
  if (n < 1) throw config_error("sampler needs n >= 1, got " + std::to_string(n));
  if (b < 1) throw config_error("batch size must be >= 1, got " + std::to_string(b));
  MiniBatch batch;
  batch.indices.reserve(static_cast<std::size_t>(b));
  for (int k = 0; k < b; ++k)
    batch.indices.push_back(
        1 + static_cast<int>(state.bounded(static_cast<std::uint64_t>(n))));
  return batch;
}

MiniBatch next_batch_antithetic(SplitMix64& state, const AntitheticTable& table,
                                int b) {
  if (b < 2 || b % 2 != 0)
    throw config_error("antithetic batches must have even size >= 2, got " +
                       std::to_string(b));
  const int n = table.n();
  MiniBatch batch;
  batch.indices.reserve(static_cast<std::size_t>(b));
  for (int k = 0; k < b / 2; ++k) {
    const int i =
        1 + static_cast<int>(state.bounded(static_cast<std::uint64_t>(n)));
    batch.indices.push_back(i);
    batch.indices.push_back(table.partner(i));
  }
  return batch;
}

Sampler::Sampler(const SamplerConfig& cfg, int n, const AntitheticTable* table)
    : cfg_(cfg), n_(n), table_(table), rng_(cfg.seed) {
  if (n < 1) throw config_error("sampler needs n >= 1, got " + std::to_string(n));
  if (cfg.batch_size < 1)
    throw config_error("batch size must be >= 1, got " +
                       std::to_string(cfg.batch_size));
  if (cfg.strategy == Strategy::Antithetic) {
    if (table == nullptr)
      throw config_error("antithetic sampling requires a pairing table");
    if (table->n() != n)
      throw config_error("pairing table covers " + std::to_string(table->n()) +
                         " samples but dataset has " + std::to_string(n));
    if (cfg.batch_size < 2 || cfg.batch_size % 2 != 0)
      throw config_error("antithetic batches must have even size >= 2, got " +
                         std::to_string(cfg.batch_size));
  }
}

MiniBatch Sampler::next() {
  if (cfg_.strategy == Strategy::Antithetic)
    return next_batch_antithetic(rng_, *table_, cfg_.batch_size);
  return next_batch_uniform(rng_, n_, cfg_.batch_size);
}

}  // namespace antisgd
