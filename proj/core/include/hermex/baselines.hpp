#pragma once

#include "hermex/pauli.hpp"
#include "hermex/state.hpp"

namespace hermex {

/// Lie-Trotter product plan: (prod_i e^{-i h_i t/n})^n.
struct TrotterPlan {
  PauliSum h;
  double t = 0.0;
  int n_steps = 1;
};

struct TrotterResult {
  StateVector state;
  long long gate_count = 0;
  long long depth = 0;  // n_steps * layers of one pass
};

TrotterResult trotter_evolve(const TrotterPlan& plan, const StateVector& input);

/// tr_p[e^{-i S dt} (rho (x) sigma) e^{i S dt}] with S the swap operator,
/// computed exactly via e^{-i S theta} = cos(theta) I - i sin(theta) S.
DensityMatrix dme_step(const DensityMatrix& rho, const DensityMatrix& sigma,
                       double dt);

/// Density matrix exponentiation: n_copies nested dme_steps at dt = t/n.
struct DmePlan {
  DensityMatrix rho;
  DensityMatrix sigma;
  double t = 0.0;
  int n_copies = 1;
};

struct DmeResult {
  DensityMatrix state;
  int copies_used = 0;
  int depth = 0;  // one layer per infinitesimal swap
};

DmeResult dme_evolve(const DmePlan& plan);

}  // namespace hermex
