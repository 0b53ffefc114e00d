#pragma once

#include <cstdint>
#include <vector>

namespace hermex {

struct IterationRecord {
  int iter;
  double objective;
  double grad_norm;
};

/// Per-run optimization record shared by both training strategies.
struct TrainTrace {
  std::vector<IterationRecord> iterations;
  std::vector<double> final_params;
  bool converged = false;
  int restarts_used = 0;
  double final_objective = 0.0;
};

/// Deterministic uniform double in [0, 1) from the top 53 bits of the
/// generator output. std::uniform_real_distribution is implementation
/// defined, which would break byte-identical reruns.
template <typename Rng>
double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace hermex
