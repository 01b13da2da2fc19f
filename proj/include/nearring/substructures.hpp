#pragma once

#include <string>
#include <vector>

#include "nearring/nearring.hpp"
#include "nearring/subset.hpp"

namespace nearring {

enum class StructureKind {
  subgroup,
  normal_subgroup,
  left_n_subgroup,
  right_n_subgroup,
  left_ideal,
  right_ideal,
  ideal,
  quasi_ideal,
  bi_ideal,
};

enum class Side { left, right, two_sided };

const char* kind_name(StructureKind k);

// Parses names like "bi-ideal" / "bi_ideal"; throws std::invalid_argument.
StructureKind kind_from_name(const std::string& name);

// All kinds, in declaration order.
const std::vector<StructureKind>& all_kinds();

// Every predicate returns false on the empty set.
bool is_subgroup(const FiniteNearring& nr, const Subset& s);
bool is_normal_subgroup(const FiniteNearring& nr, const Subset& s);
bool is_n_subgroup(const FiniteNearring& nr, const Subset& s, Side side);
bool is_ideal(const FiniteNearring& nr, const Subset& s, Side side);
bool is_quasi_ideal(const FiniteNearring& nr, const Subset& q);
bool is_bi_ideal(const FiniteNearring& nr, const Subset& b);

bool satisfies(const FiniteNearring& nr, const Subset& s, StructureKind kind);

struct StructureList {
  StructureKind kind;
  std::vector<Subset> members;  // canonically ordered, duplicate-free
};

// All additive subgroups, generated by closure from {0} one generator at a
// time (never a powerset scan). Throws OrderCapError when order() exceeds
// the configured cap.
std::vector<Subset> enumerate_subgroups(const FiniteNearring& nr);

// All substructures of the given kind: the subgroup lattice filtered by the
// kind's predicate.
StructureList enumerate(const FiniteNearring& nr, StructureKind kind);

}  // namespace nearring
