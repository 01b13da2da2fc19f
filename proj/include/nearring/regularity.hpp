#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nearring/nearring.hpp"
#include "nearring/subset.hpp"

namespace nearring {

enum class UnityMode { lenient, strict };

// Witness for one element x: the smallest y with xyx - x = p, p in ideal_p.
struct RegularityWitness {
  int y;
  int p;
};

// Per-element witness map proving (P-)regularity. witnesses[x] covers element
// x; for plain regularity ideal_p is {0} and every p is 0.
struct RegularityCertificate {
  Subset ideal_p;
  std::vector<RegularityWitness> witnesses;
  bool strict_unity_mode = false;
};

// Either a certificate or the smallest element with no witness.
struct RegularityResult {
  std::optional<RegularityCertificate> certificate;
  int failing_element = -1;

  bool regular() const { return certificate.has_value(); }
};

// Def-1.8 regularity: xyx = x exactly.
RegularityResult is_regular(const FiniteNearring& nr);

// P-regularity: xyx - x in P, smallest y per element. Throws NotAnIdealError
// when P is not a two-sided ideal; in strict mode throws NoUnityError when
// the nearring has no unity.
RegularityResult is_p_regular(const FiniteNearring& nr, const Subset& p,
                              UnityMode mode = UnityMode::lenient);

// The raw witness scan behind is_p_regular. Precondition (not re-checked
// here): p is a two-sided ideal. Callers that just enumerated the ideal
// lattice use this directly.
RegularityResult p_regular_scan(const FiniteNearring& nr, const Subset& p,
                                UnityMode mode = UnityMode::lenient);

// Every two-sided ideal P for which is_p_regular succeeds, canonically
// ordered with its certificate. Strict mode throws NoUnityError up front when
// the nearring has no unity.
std::vector<std::pair<Subset, RegularityCertificate>> find_p_regular_ideals(
    const FiniteNearring& nr, UnityMode mode = UnityMode::lenient);

// Witness for the P-regular consequence "for each n there is n' with n'n in
// P". smallest is always 0 (0n = 0 is forced); smallest_nonzero reports
// whether a nonzero witness exists without guessing which one was intended.
struct LeftAnnihilationWitness {
  int element;
  int smallest;
  std::optional<int> smallest_nonzero;
};

// Throws HypothesisError when N is not P-regular for the given P.
LeftAnnihilationWitness theorem_3_1_witness(const FiniteNearring& nr, const Subset& p,
                                            int element);

}  // namespace nearring
