#ifndef ANTISGD_SAMPLING_HPP
#define ANTISGD_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "antisgd/antithetic.hpp"
#include "antisgd/rng.hpp"

namespace antisgd {

enum class Strategy { Uniform, Antithetic };

const char* strategy_name(Strategy s);

struct SamplerConfig {
  Strategy strategy = Strategy::Uniform;
  int batch_size = 2;  // even and >= 2 for Antithetic
  std::uint64_t seed = 1;
};

struct MiniBatch {
  std::vector<int> indices;  // 1-based sample indices, length = batch size
};

// b indices drawn i.i.d. uniform with replacement from {1..n}.
MiniBatch next_batch_uniform(SplitMix64& state, int n, int b);

// b/2 pair heads drawn i.i.d. uniform; the batch interleaves each head with
// its table partner: [i1, S[i1], i2, S[i2], ...]. Because S is a permutation
// the partner slot is uniform on {1..n} as well.
MiniBatch next_batch_antithetic(SplitMix64& state, const AntitheticTable& table,
                                int b);

// One generator stream per optimizer run; not shared across runs.
class Sampler {
 public:
  // table may be null for Uniform; required for Antithetic.
  Sampler(const SamplerConfig& cfg, int n, const AntitheticTable* table);

  MiniBatch next();
  const SamplerConfig& config() const { return cfg_; }

 private:
  SamplerConfig cfg_;
  int n_;
  const AntitheticTable* table_;
  SplitMix64 rng_;
};

}  // namespace antisgd

#endif
