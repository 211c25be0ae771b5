#ifndef ANTISGD_ERRORS_HPP
#define ANTISGD_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace antisgd {

// Base for everything this library throws.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (carries a 1-based line number when known).
struct parse_error : error {
  parse_error(const std::string& msg, std::int64_t line_no = 0)
      : error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
        line(line_no) {}
  std::int64_t line;
};

// Structurally valid input that violates a dataset-level rule
// (wrong label count, too few samples).
struct schema_error : error {
  using error::error;
};

// Vector/feature index exceeding the declared dimension.
struct dimension_error : error {
  using error::error;
};

// Invalid run or sampler configuration.
struct config_error : error {
  using error::error;
};

// Stored and recomputed quantities disagree, or sizes mismatch.
struct consistency_error : error {
  using error::error;
};

// Non-finite numeric input where a finite value is required.
struct domain_error : error {
  using error::error;
};

// Operation needs more samples than the dataset has.
struct size_error : error {
  using error::error;
};

// Optimizer iterate left the finite regime.
struct divergence_error : error {
  divergence_error(std::int64_t at_iteration, const std::string& what_happened)
      : error("diverged at iteration " + std::to_string(at_iteration) + ": " +
              what_happened),
        iteration(at_iteration) {}
  std::int64_t iteration;
};

}  // namespace antisgd

#endif
