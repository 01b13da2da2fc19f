#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nearring/nearring.hpp"

namespace nearring {

// Facts recorded when an entry was first constructed; re-checked against the
// freshly derived fields in tests.
struct ExpectedFlags {
  std::optional<bool> distributive;
  std::optional<bool> has_unity;
};

struct CatalogEntry {
  std::string name;
  FiniteNearring nearring;
  std::string provenance;
  ExpectedFlags expected;
};

// Z_m with ring addition and multiplication.
CatalogEntry ring_as_nearring(int modulus);

// ab = 0 on an arbitrary additive group; the source of non-abelian addition
// and unity-free instances. Throws NotAGroupError.
CatalogEntry zero_mul_nearring(const std::string& group_name,
                               const std::vector<std::vector<int>>& group_add);

// M(G): all self-maps of G under pointwise addition and composition.
// A map f is encoded base-|G|, digit t = f(t), lowest digit = f(0).
CatalogEntry transformation_nearring(const std::string& group_name,
                                     const std::vector<std::vector<int>>& group_add);

// Componentwise tables on pairs, index = a*|B| + b.
CatalogEntry direct_product(const CatalogEntry& a, const CatalogEntry& b);

// The fixed shipped list filtered by order, in deterministic order:
// Z1..Z8, zero-mul on Z2/Z4/V4/S3, M(Z2), M(Z3), Z2xZ2, Z2xZ3, Z2xM(Z2).
std::vector<CatalogEntry> standard_catalog(int max_order);

// Cayley tables for the groups the catalog is built from (identity at 0).
std::vector<std::vector<int>> cyclic_group_table(int n);
std::vector<std::vector<int>> klein_four_table();
std::vector<std::vector<int>> symmetric_group_3_table();

}  // namespace nearring
