#include "nearring/serial.hpp"

#include <algorithm>
#include <set>

namespace nearring::serial {

std::vector<AxiomFailure> scan_axioms(int n, const std::vector<int>& add,
                                      const std::vector<int>& mul) {
  auto at = [&](const std::vector<int>& t, int a, int b) {
    return t[static_cast<size_t>(a) * n + b];
  };
  std::vector<AxiomFailure> failures;

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(add, at(add, a, b), c) != at(add, a, at(add, b, c))) {
          failures.push_back({Axiom::add_associativity, {a, b, c}});
          goto assoc_done;
        }
assoc_done:

  for (int a = 0; a < n; ++a)
    if (at(add, 0, a) != a || at(add, a, 0) != a) {
      failures.push_back({Axiom::add_identity, {a, -1, -1}});
      break;
    }

  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n; ++b)
      if (at(add, a, b) == 0 && at(add, b, a) == 0) {
        found = true;
        break;
      }
    if (!found) {
      failures.push_back({Axiom::add_inverse, {a, -1, -1}});
      break;
    }
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(mul, at(mul, a, b), c) != at(mul, a, at(mul, b, c))) {
          failures.push_back({Axiom::mul_associativity, {a, b, c}});
          goto mul_assoc_done;
        }
mul_assoc_done:

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(mul, at(add, a, b), c) != at(add, at(mul, a, c), at(mul, b, c))) {
          failures.push_back({Axiom::right_distributivity, {a, b, c}});
          goto dist_done;
        }
dist_done:

  for (int a = 0; a < n; ++a)
    if (at(mul, 0, a) != 0) {
      failures.push_back({Axiom::zero_left_absorption, {a, -1, -1}});
      break;
    }

  return failures;
}

bool scan_left_distributivity(const FiniteNearring& nr) {
  int n = nr.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (nr.mul(a, nr.add(b, c)) != nr.add(nr.mul(a, b), nr.mul(a, c))) return false;
  return true;
}

std::vector<Subset> enumerate_subgroups(const FiniteNearring& nr) {
  int n = nr.order();
  Subset trivial = additive_closure(nr, nr.empty_subset());
  std::set<Subset> seen = {trivial};
  std::vector<Subset> frontier = {trivial};
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const Subset& s : frontier)
      for (int g = 1; g < n; ++g) {
        if (s.contains(g)) continue;
        Subset gen = s;
        gen.insert(g);
        Subset closed = additive_closure(nr, gen);
        if (seen.insert(closed).second) next.push_back(closed);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

WitnessScan regularity_scan(const FiniteNearring& nr, const Subset& p) {
  int n = nr.order();
  WitnessScan out;
  out.witnesses.assign(static_cast<size_t>(n), {-1, -1});
  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (int y = 0; y < n; ++y) {
      int val = nr.add(nr.mul(nr.mul(x, y), x), nr.neg(x));
      if (p.contains(val)) {
        out.witnesses[static_cast<size_t>(x)] = {y, val};
        found = true;
        break;
      }
    }
    if (!found) {
      out.failing_element = x;
      return out;
    }
  }
  return out;
}

}  // namespace nearring::serial
