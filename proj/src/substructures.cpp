#include "nearring/substructures.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nearring/errors.hpp"
#include "nearring/parallel.hpp"

namespace nearring {

const char* kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::subgroup: return "subgroup";
    case StructureKind::normal_subgroup: return "normal-subgroup";
    case StructureKind::left_n_subgroup: return "left-n-subgroup";
    case StructureKind::right_n_subgroup: return "right-n-subgroup";
    case StructureKind::left_ideal: return "left-ideal";
    case StructureKind::right_ideal: return "right-ideal";
    case StructureKind::ideal: return "ideal";
    case StructureKind::quasi_ideal: return "quasi-ideal";
    case StructureKind::bi_ideal: return "bi-ideal";
  }
  return "?";
}

StructureKind kind_from_name(const std::string& name) {
  std::string s = name;
  std::replace(s.begin(), s.end(), '_', '-');
  for (StructureKind k : all_kinds())
    if (s == kind_name(k)) return k;
  throw std::invalid_argument("unknown structure kind: " + name);
}

const std::vector<StructureKind>& all_kinds() {
  static const std::vector<StructureKind> kinds = {
      StructureKind::subgroup,        StructureKind::normal_subgroup,
      StructureKind::left_n_subgroup, StructureKind::right_n_subgroup,
      StructureKind::left_ideal,      StructureKind::right_ideal,
      StructureKind::ideal,           StructureKind::quasi_ideal,
      StructureKind::bi_ideal,
  };
  return kinds;
}

bool is_subgroup(const FiniteNearring& nr, const Subset& s) {
  if (s.empty() || !s.contains(0)) return false;
  bool ok = true;
  s.for_each([&](int a) {
    if (!ok) return;
    if (!s.contains(nr.neg(a))) {
      ok = false;
      return;
    }
    s.for_each([&](int b) {
      if (ok && !s.contains(nr.add(a, b))) ok = false;
    });
  });
  return ok;
}

bool is_normal_subgroup(const FiniteNearring& nr, const Subset& s) {
  if (!is_subgroup(nr, s)) return false;
  for (int x = 0; x < nr.order(); ++x) {
    int nx = nr.neg(x);
    bool ok = true;
    s.for_each([&](int e) {
      if (ok && !s.contains(nr.add(nr.add(nx, e), x))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_n_subgroup(const FiniteNearring& nr, const Subset& s, Side side) {
  if (side == Side::two_sided)
    throw std::invalid_argument("is_n_subgroup: side must be left or right");
  if (!is_subgroup(nr, s)) return false;
  Subset full = nr.full_subset();
  Subset prod = side == Side::left ? subset_product(nr, full, s) : subset_product(nr, s, full);
  return prod.is_subset_of(s);
}

namespace {

// Clause (4): n1(n2+s) - n1n2 in S for all s in S, n1,n2 in N.
bool ideal_clause4(const FiniteNearring& nr, const Subset& s) {
  int n = nr.order();
  for (int n1 = 0; n1 < n; ++n1)
    for (int n2 = 0; n2 < n; ++n2) {
      int m = nr.neg(nr.mul(n1, n2));
      bool ok = true;
      s.for_each([&](int e) {
        if (ok && !s.contains(nr.add(nr.mul(n1, nr.add(n2, e)), m))) ok = false;
      });
      if (!ok) return false;
    }
  return true;
}

}  // namespace

bool is_ideal(const FiniteNearring& nr, const Subset& s, Side side) {
  if (!is_normal_subgroup(nr, s)) return false;
  Subset full = nr.full_subset();
  switch (side) {
    case Side::right:
      return subset_product(nr, s, full).is_subset_of(s);
    case Side::left:
      return subset_product(nr, full, s).is_subset_of(s) && ideal_clause4(nr, s);
    case Side::two_sided:
      return subset_product(nr, s, full).is_subset_of(s) &&
             subset_product(nr, full, s).is_subset_of(s) && ideal_clause4(nr, s);
  }
  return false;
}

bool is_quasi_ideal(const FiniteNearring& nr, const Subset& q) {
  if (!is_subgroup(nr, q)) return false;
  Subset full = nr.full_subset();
  Subset qn = subset_product(nr, q, full);
  Subset nq = subset_product(nr, full, q);
  return (qn & nq).is_subset_of(q);
}

bool is_bi_ideal(const FiniteNearring& nr, const Subset& b) {
  if (!is_subgroup(nr, b)) return false;
  Subset full = nr.full_subset();
  Subset bnb = subset_product(nr, subset_product(nr, b, full), b);
  return bnb.is_subset_of(b);
}

bool satisfies(const FiniteNearring& nr, const Subset& s, StructureKind kind) {
  switch (kind) {
    case StructureKind::subgroup: return is_subgroup(nr, s);
    case StructureKind::normal_subgroup: return is_normal_subgroup(nr, s);
    case StructureKind::left_n_subgroup: return is_n_subgroup(nr, s, Side::left);
    case StructureKind::right_n_subgroup: return is_n_subgroup(nr, s, Side::right);
    case StructureKind::left_ideal: return is_ideal(nr, s, Side::left);
    case StructureKind::right_ideal: return is_ideal(nr, s, Side::right);
    case StructureKind::ideal: return is_ideal(nr, s, Side::two_sided);
    case StructureKind::quasi_ideal: return is_quasi_ideal(nr, s);
    case StructureKind::bi_ideal: return is_bi_ideal(nr, s);
  }
  return false;
}

std::vector<Subset> enumerate_subgroups(const FiniteNearring& nr) {
  int n = nr.order();
  if (n > order_cap()) throw OrderCapError("order " + std::to_string(n) +
                                           " exceeds cap " + std::to_string(order_cap()));

  Subset trivial = additive_closure(nr, nr.empty_subset());
  std::set<Subset> seen = {trivial};
  std::vector<Subset> frontier = {trivial};

  // Level-synchronous growth: extend every frontier subgroup by every missing
  // generator; merge per-level so output is independent of scheduling.
  while (!frontier.empty()) {
    std::vector<std::pair<int, int>> work;  // (frontier index, generator)
    for (int i = 0; i < static_cast<int>(frontier.size()); ++i)
      for (int g = 1; g < n; ++g)
        if (!frontier[static_cast<size_t>(i)].contains(g)) work.emplace_back(i, g);

    std::vector<Subset> produced(work.size(), Subset(n));
    long long level_work = static_cast<long long>(work.size()) * n * n;
#pragma omp parallel for schedule(dynamic) if (detail::use_parallel(level_work))
    for (int w = 0; w < static_cast<int>(work.size()); ++w) {
      Subset gen = frontier[static_cast<size_t>(work[static_cast<size_t>(w)].first)];
      gen.insert(work[static_cast<size_t>(w)].second);
      produced[static_cast<size_t>(w)] = additive_closure(nr, gen);
    }

    std::sort(produced.begin(), produced.end());
    produced.erase(std::unique(produced.begin(), produced.end()), produced.end());

    std::vector<Subset> next;
    for (auto& s : produced)
      if (seen.insert(s).second) next.push_back(std::move(s));
    frontier = std::move(next);
  }

  return {seen.begin(), seen.end()};
}

StructureList enumerate(const FiniteNearring& nr, StructureKind kind) {
  std::vector<Subset> subgroups = enumerate_subgroups(nr);
  std::vector<char> keep(subgroups.size(), 0);
  long long filter_work = static_cast<long long>(subgroups.size()) * nr.order() * nr.order() * nr.order();
#pragma omp parallel for schedule(dynamic) if (detail::use_parallel(filter_work))
  for (int i = 0; i < static_cast<int>(subgroups.size()); ++i)
    keep[static_cast<size_t>(i)] = satisfies(nr, subgroups[static_cast<size_t>(i)], kind);

  StructureList out{kind, {}};
  for (size_t i = 0; i < subgroups.size(); ++i)
    if (keep[i]) out.members.push_back(std::move(subgroups[i]));
  return out;
}

}  // namespace nearring
