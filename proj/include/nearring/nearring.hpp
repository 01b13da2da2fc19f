#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nearring/errors.hpp"
#include "nearring/subset.hpp"

namespace nearring {

// A nearring axiom (or a fact forced by the axioms) that a validation scan
// can report as violated. Order here is the report order.
enum class Axiom {
  add_associativity,
  add_identity,
  add_inverse,
  mul_associativity,
  right_distributivity,
  zero_left_absorption,
};

const char* axiom_name(Axiom a);

// One violated axiom with the lexicographically smallest witness.
// Unused witness slots hold -1 (identity/inverse/absorption take one element).
struct AxiomFailure {
  Axiom axiom;
  std::array<int, 3> witness;
};

// Thrown where an invalid table is an input error (file loading) rather than
// a result; carries the full violation report.
struct AxiomViolationError : Error {
  explicit AxiomViolationError(std::vector<AxiomFailure> f)
      : Error("nearring axioms violated"), failures(std::move(f)) {}
  std::vector<AxiomFailure> failures;
};

// Finite nearring on elements 0..n-1 given by full Cayley tables.
// Index 0 is the additive identity. Instances are immutable once built and
// only come out of validate(); all accessors are pure.
class FiniteNearring {
 public:
  int order() const { return n_; }

  int add(int a, int b) const { return add_[static_cast<size_t>(a) * n_ + b]; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
  int neg(int a) const { return neg_[static_cast<size_t>(a)]; }

  // a - b evaluated as a + (-b); longer expressions fold left-to-right.
  int sub(int a, int b) const { return add(a, neg(b)); }

  std::optional<int> unity() const { return unity_; }
  bool distributive() const { return distributive_; }

  // Row-major n*n tables.
  const std::vector<int>& add_table() const { return add_; }
  const std::vector<int>& mul_table() const { return mul_; }
  const std::vector<int>& neg_table() const { return neg_; }

  Subset empty_subset() const { return Subset(n_); }
  Subset full_subset() const { return Subset::full(n_); }
  Subset zero_subset() const { return Subset::of(n_, {0}); }

 private:
  friend struct ValidationAccess;
  FiniteNearring(int n, std::vector<int> add, std::vector<int> mul, std::vector<int> neg,
                 std::optional<int> unity, bool distributive)
      : n_(n),
        add_(std::move(add)),
        mul_(std::move(mul)),
        neg_(std::move(neg)),
        unity_(unity),
        distributive_(distributive) {}

  int n_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  std::optional<int> unity_;
  bool distributive_;
};

// Outcome of validate_nearring: either a validated instance or the full list
// of violated axioms, one lexicographically smallest witness each.
struct ValidationResult {
  std::optional<FiniteNearring> nearring;
  std::vector<AxiomFailure> failures;

  bool ok() const { return nearring.has_value(); }
};

// Validates the nearring axioms on the given tables and derives negation,
// unity and the left-distributivity flag. Throws MalformedTableError when the
// tables are ragged, non-square or contain out-of-range entries.
ValidationResult validate_nearring(const std::vector<std::vector<int>>& add_table,
                                   const std::vector<std::vector<int>>& mul_table);

// Flattened row-major variant.
ValidationResult validate_nearring(int order, const std::vector<int>& add_table,
                                   const std::vector<int>& mul_table);

// True iff a(b+c) = ab+ac for all n^3 triples.
bool is_distributive(const FiniteNearring& nr);

// Raw elementwise sum set {a+b | a in A, b in B}; never a closure.
Subset subset_sum(const FiniteNearring& nr, const Subset& a, const Subset& b);

// Raw elementwise product set {ab | a in A, b in B}.
Subset subset_product(const FiniteNearring& nr, const Subset& a, const Subset& b);

// {-a | a in A}.
Subset subset_negate(const FiniteNearring& nr, const Subset& a);

// Smallest additively closed, inverse-closed subset containing A and 0.
Subset additive_closure(const FiniteNearring& nr, const Subset& a);

// Enumeration/order cap: default 64, overridable via NEARRING_ORDER_CAP.
int order_cap();

}  // namespace nearring
