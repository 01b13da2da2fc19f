#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nearring/nearring.hpp"
#include "nearring/regularity.hpp"
#include "nearring/subset.hpp"

namespace nearring {

enum class Verdict { holds, fails, inapplicable };

const char* verdict_name(Verdict v);

// Explicit decomposition b = p + b1 x1 b2 ... x_{n-1} bn realizing the
// bi-ideal representation theorems. chain alternates block elements and
// nearring elements, so it always has odd length 2n-1. free_x is the extra
// parameter quantified in the containment (chain product) * x * P <= P.
struct DecompositionWitness {
  int element;             // the decomposed element
  int p;                   // additive P-part of the representation
  std::vector<int> chain;  // [b1, x1, b2, ..., bn]
  std::optional<int> free_x;
  bool containment_verified = false;
};

struct TheoremReport {
  std::string theorem_id;
  std::string instance;
  Verdict verdict;
  std::string detail;  // failed hypothesis, counterexample, strictness note
  std::vector<DecompositionWitness> witnesses;
};

// Lemma: {0}-regular implies regular (vacuous when N is not {0}-regular,
// including when {0} is not a two-sided ideal).
TheoremReport check_lemma_2_1(const FiniteNearring& nr);

// Lemma: the intersection of a nonempty family of bi-ideals is a bi-ideal.
// Throws NotABiIdealError naming the first offending input, EmptyFamilyError
// on an empty family.
TheoremReport check_bi_ideal_intersection(const FiniteNearring& nr,
                                          const std::vector<Subset>& family);

// Lemma: every quasi-ideal is a bi-ideal.
TheoremReport check_quasi_implies_bi(const FiniteNearring& nr);

// (P+R) n (P+L) = P+RL for distributive P-regular N, R a right ideal, L a
// left ideal. Raw elementwise sets on both sides.
TheoremReport check_theorem_3_2(const FiniteNearring& nr, const Subset& p,
                                const Subset& r, const Subset& l);

// x = p' + b' with p' in P, b' = xyx in B. Throws HypothesisError when a
// stated hypothesis fails.
DecompositionWitness decompose_thm_3_3(const FiniteNearring& nr, const Subset& p,
                                       const Subset& b, int x);

// b = p + b1 x1 b2 with b1 x1 b2 * x * P <= P, following the proof's
// distributivity expansion. When free_x is absent the containment is
// verified for every x in N.
DecompositionWitness decompose_thm_3_4(const FiniteNearring& nr, const Subset& p,
                                       const Subset& b1, const Subset& b2, int b,
                                       std::optional<int> free_x);

// Inductive n-block generalization; n=1 reduces to 3.3 and n=2 matches 3.4
// bit for bit under the shared smallest-index tie-breaking.
DecompositionWitness decompose_thm_3_5(const FiniteNearring& nr, const Subset& p,
                                       const std::vector<Subset>& blocks, int b,
                                       std::optional<int> free_x);

// P+B = P+BNB.
TheoremReport check_theorem_3_6(const FiniteNearring& nr, const Subset& p,
                                const Subset& b);

// P+(B1 n B2) <= P+(B1NB2 n B2NB1); records strictness as a note.
TheoremReport check_theorem_3_7(const FiniteNearring& nr, const Subset& p,
                                const Subset& b1, const Subset& b2);

// P + n-fold intersection <= P + (B1NBn n ... n B_{n-1}NBn n BnNB1 n ... n
// BnNB_{n-1}); requires n >= 2 blocks.
TheoremReport check_theorem_3_8(const FiniteNearring& nr, const Subset& p,
                                const std::vector<Subset>& blocks);

struct SuiteOptions {
  int max_chain = 3;  // longest 3.5/3.8 block tuple exercised
};

// Runs every applicable check over all enumerated substructures, for the
// given P or for every P from find_p_regular_ideals. Reports come back in a
// fixed canonical order independent of scheduling.
std::vector<TheoremReport> run_full_suite(const FiniteNearring& nr,
                                          std::optional<Subset> p = std::nullopt,
                                          const SuiteOptions& opts = {});

}  // namespace nearring
