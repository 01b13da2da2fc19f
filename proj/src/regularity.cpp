#include "nearring/regularity.hpp"

#include <limits>

#include "nearring/errors.hpp"
#include "nearring/parallel.hpp"
#include "nearring/substructures.hpp"

namespace nearring {

namespace {

constexpr int kNoFailure = std::numeric_limits<int>::max();

// Shared scan shape for both regularity notions: per element the y search is
// sequential from 0 so the smallest y wins; elements scan in parallel.
template <class Accept>
RegularityResult witness_scan(const FiniteNearring& nr, Subset ideal_p, Accept&& accept,
                              bool strict_mode) {
  int n = nr.order();
  std::vector<RegularityWitness> witnesses(static_cast<size_t>(n), {-1, -1});
  int failed = kNoFailure;
  long long scan_work = static_cast<long long>(n) * n;

#pragma omp parallel for reduction(min : failed) schedule(static) if (detail::use_parallel(scan_work))
  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (int y = 0; y < n; ++y) {
      int xyx = nr.mul(nr.mul(x, y), x);
      int p = nr.add(xyx, nr.neg(x));  // xyx - x, left-to-right
      if (accept(xyx, p)) {
        witnesses[static_cast<size_t>(x)] = {y, p};
        found = true;
        break;
      }
    }
    if (!found && x < failed) failed = x;
  }

  if (failed != kNoFailure) return {std::nullopt, failed};
  return {RegularityCertificate{std::move(ideal_p), std::move(witnesses), strict_mode},
          -1};
}

}  // namespace

RegularityResult is_regular(const FiniteNearring& nr) {
  return witness_scan(
      nr, nr.zero_subset(), [](int, int p) { return p == 0; }, false);
}

RegularityResult is_p_regular(const FiniteNearring& nr, const Subset& p, UnityMode mode) {
  if (!is_ideal(nr, p, Side::two_sided))
    throw NotAnIdealError("P is not a two-sided ideal");
  return p_regular_scan(nr, p, mode);
}

RegularityResult p_regular_scan(const FiniteNearring& nr, const Subset& p, UnityMode mode) {
  if (mode == UnityMode::strict && !nr.unity())
    throw NoUnityError("strict mode requires a unity element");
  return witness_scan(
      nr, p, [&](int, int val) { return p.contains(val); },
      mode == UnityMode::strict);
}

std::vector<std::pair<Subset, RegularityCertificate>> find_p_regular_ideals(
    const FiniteNearring& nr, UnityMode mode) {
  if (mode == UnityMode::strict && !nr.unity())
    throw NoUnityError("strict mode requires a unity element");
  std::vector<std::pair<Subset, RegularityCertificate>> out;
  for (const Subset& p : enumerate(nr, StructureKind::ideal).members) {
    RegularityResult r = p_regular_scan(nr, p, mode);
    if (r.regular()) out.emplace_back(p, std::move(*r.certificate));
  }
  return out;
}

LeftAnnihilationWitness theorem_3_1_witness(const FiniteNearring& nr, const Subset& p,
                                            int element) {
  RegularityResult reg = is_p_regular(nr, p);
  if (!reg.regular())
    throw HypothesisError("N is not P-regular for the given P");

  LeftAnnihilationWitness w{element, -1, std::nullopt};
  for (int cand = 0; cand < nr.order(); ++cand) {
    if (!p.contains(nr.mul(cand, element))) continue;
    if (w.smallest < 0) w.smallest = cand;
    if (cand > 0) {
      w.smallest_nonzero = cand;
      break;
    }
  }
  return w;
}

}  // namespace nearring
