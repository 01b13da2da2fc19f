#pragma once

#include <vector>

#include "nearring/nearring.hpp"
#include "nearring/regularity.hpp"
#include "nearring/subset.hpp"

namespace nearring::serial {

// Plain single-threaded reference implementations of the parallel kernels.
// Kept deliberately simple (straight loops, early exits) so tests can compare
// them against the OpenMP paths and the benchmark can measure the speedup.

std::vector<AxiomFailure> scan_axioms(int order, const std::vector<int>& add,
                                      const std::vector<int>& mul);

bool scan_left_distributivity(const FiniteNearring& nr);

std::vector<Subset> enumerate_subgroups(const FiniteNearring& nr);

// Smallest-y witness map for xyx - x in P; failing_element = smallest element
// with no witness, or -1.
struct WitnessScan {
  std::vector<RegularityWitness> witnesses;
  int failing_element = -1;
};
WitnessScan regularity_scan(const FiniteNearring& nr, const Subset& p);

}  // namespace nearring::serial
