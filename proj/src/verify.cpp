#include "nearring/verify.hpp"

namespace nearring {

// Both verifiers work off the raw row-major tables on purpose; they must not
// reuse the accessors' call chain the searches were built on.

bool verify_certificate(const FiniteNearring& nr, const RegularityCertificate& cert) {
  const int n = nr.order();
  const std::vector<int>& add = nr.add_table();
  const std::vector<int>& mul = nr.mul_table();
  const std::vector<int>& neg = nr.neg_table();

  if (static_cast<int>(cert.witnesses.size()) != n) return false;
  if (cert.ideal_p.universe() != n) return false;

  for (int x = 0; x < n; ++x) {
    const RegularityWitness& w = cert.witnesses[static_cast<size_t>(x)];
    if (w.y < 0 || w.y >= n) return false;
    int xy = mul[static_cast<size_t>(x) * n + w.y];
    int xyx = mul[static_cast<size_t>(xy) * n + x];
    int p = add[static_cast<size_t>(xyx) * n + neg[static_cast<size_t>(x)]];
    if (p != w.p) return false;
    if (!cert.ideal_p.contains(p)) return false;
  }
  return true;
}

bool verify_decomposition(const FiniteNearring& nr, const Subset& p,
                          const std::vector<Subset>& blocks,
                          const DecompositionWitness& w) {
  const int n = nr.order();
  const std::vector<int>& add = nr.add_table();
  const std::vector<int>& mul = nr.mul_table();

  if (w.chain.empty() || w.chain.size() % 2 == 0) return false;
  if (w.chain.size() != 2 * blocks.size() - 1) return false;
  if (!p.contains(w.p)) return false;

  for (size_t i = 0; i < w.chain.size(); ++i) {
    int e = w.chain[i];
    if (e < 0 || e >= n) return false;
    if (i % 2 == 0 && !blocks[i / 2].contains(e)) return false;
  }

  int prod = w.chain[0];
  for (size_t i = 1; i + 1 < w.chain.size(); i += 2) {
    prod = mul[static_cast<size_t>(prod) * n + w.chain[i]];
    prod = mul[static_cast<size_t>(prod) * n + w.chain[i + 1]];
  }
  if (add[static_cast<size_t>(w.p) * n + prod] != w.element) return false;

  if (w.containment_verified) {
    auto contained_for = [&](int x) {
      int px = mul[static_cast<size_t>(prod) * n + x];
      bool ok = true;
      p.for_each([&](int q) {
        if (ok && !p.contains(mul[static_cast<size_t>(px) * n + q])) ok = false;
      });
      return ok;
    };
    if (w.free_x) {
      if (*w.free_x < 0 || *w.free_x >= n) return false;
      if (!contained_for(*w.free_x)) return false;
    } else {
      for (int x = 0; x < n; ++x)
        if (!contained_for(x)) return false;
    }
  }
  return true;
}

}  // namespace nearring
