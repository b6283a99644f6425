#pragma once

#include <cstdint>

#include "qgraph/types.hpp"

namespace qgraph {

// Idealized mode returns exact answers at theoretical cost; Stochastic mode
// samples measurement outcomes so failures actually happen.
enum class Fidelity { Idealized, Stochastic };

struct SimConfig {
  Fidelity fidelity = Fidelity::Idealized;
  double delta = 0.1;                 // tolerated failure probability
  double lambda = 1.2;                // growth factor of the search schedule
  double qsearch_cutoff_const = 3.0;  // give up after this many sqrt(N) rounds
  double sssp_polylog_exp = 1.5;      // log exponent in the sssp charge
  double charge_const = 1.0;          // leading constant of all charges
  std::uint64_t seed = 1;

  void validate() const {
    if (delta < 0.0 || delta > 1.0) throw InvalidParam("delta must be in [0,1]");
    if (lambda <= 1.0) throw InvalidParam("lambda must exceed 1");
    if (qsearch_cutoff_const <= 0.0) throw InvalidParam("cutoff const must be positive");
    if (sssp_polylog_exp < 0.0) throw InvalidParam("polylog exponent must be nonnegative");
    if (charge_const <= 0.0) throw InvalidParam("charge const must be positive");
  }

  bool stochastic() const { return fidelity == Fidelity::Stochastic; }
};

}  // namespace qgraph
