#pragma once

#include <vector>

#include "nearring/regularity.hpp"
#include "nearring/theorems.hpp"

namespace nearring {

// Independent re-evaluators. These read the Cayley tables directly and share
// no code with the searches and constructors they check.

// Re-evaluates every witness triple: mul(mul(x,y),x) + neg(x) must equal the
// recorded p and p must lie in ideal_p.
bool verify_certificate(const FiniteNearring& nr, const RegularityCertificate& cert);

// Re-evaluates a decomposition: chain has odd length, every block element
// belongs to its declared block, p lies in P, p + chain product reproduces
// the decomposed element, and when containment_verified is set the scan
// (chain product) * x * P <= P is redone (over all x when free_x is absent).
bool verify_decomposition(const FiniteNearring& nr, const Subset& p,
                          const std::vector<Subset>& blocks,
                          const DecompositionWitness& witness);

}  // namespace nearring
