#pragma once

#include <stdexcept>
#include <string>

namespace cdboot {

// Mismatched or invalid dimensions.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Argument outside its mathematical domain.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Bad user-facing configuration.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Training diverged (non-finite loss or gradient). Carries the epoch index.
struct TrainingError : std::runtime_error {
  int epoch;
  TrainingError(const std::string& msg, int epoch_idx)
      : std::runtime_error(msg + " (epoch " + std::to_string(epoch_idx) + ")"),
        epoch(epoch_idx) {}
};

// Trajectory blew up mid-sampling. Carries the step index.
struct SamplingError : std::runtime_error {
  int step;
  SamplingError(const std::string& msg, int step_idx)
      : std::runtime_error(msg + " (step " + std::to_string(step_idx) + ")"),
        step(step_idx) {}
};

}  // namespace cdboot
