#include <doctest.h>

#include <random>

#include "nearring/catalog.hpp"
#include "nearring/errors.hpp"
#include "nearring/nearring.hpp"

using namespace nearring;

namespace {

Subset random_subset(const FiniteNearring& nr, std::mt19937& rng) {
  Subset s(nr.order());
  std::uniform_int_distribution<int> coin(0, 1);
  for (int e = 0; e < nr.order(); ++e)
    if (coin(rng)) s.insert(e);
  return s;
}

const AxiomFailure* find_failure(const ValidationResult& r, Axiom a) {
  for (const AxiomFailure& f : r.failures)
    if (f.axiom == a) return &f;
  return nullptr;
}

}  // namespace

TEST_CASE("validate accepts ring tables and derives fields") {
  auto z4 = ring_as_nearring(4);
  CHECK(z4.nearring.order() == 4);
  CHECK(z4.nearring.unity() == 1);
  CHECK(z4.nearring.distributive());

  auto z6 = ring_as_nearring(6);
  CHECK(z6.nearring.unity() == 1);
  CHECK(z6.nearring.distributive());
}

TEST_CASE("validate accepts zero multiplication on Z2") {
  auto e = zero_mul_nearring("Z2", cyclic_group_table(2));
  CHECK(!e.nearring.unity().has_value());
  CHECK(e.nearring.distributive());
}

TEST_CASE("Z4 with mul=add is rejected at the smallest distributivity witness") {
  auto add = cyclic_group_table(4);
  ValidationResult r = validate_nearring(add, add);
  REQUIRE(!r.ok());

  const AxiomFailure* dist = find_failure(r, Axiom::right_distributivity);
  REQUIRE(dist != nullptr);
  CHECK(dist->witness == std::array<int, 3>{0, 0, 1});

  // The triple (1,1,1) violates right distributivity too, just not minimally:
  // (1+1)+1 = 3 while (1+1)+(1+1) = 0.
  auto at = [&](int a, int b) { return add[size_t(a)][size_t(b)]; };
  CHECK(at(at(1, 1), 1) != at(at(1, 1), at(1, 1)));

  // Additive structure and mul associativity are fine here.
  CHECK(find_failure(r, Axiom::add_associativity) == nullptr);
  CHECK(find_failure(r, Axiom::mul_associativity) == nullptr);
}

TEST_CASE("malformed tables throw") {
  std::vector<std::vector<int>> ragged = {{0, 1}, {1}};
  CHECK_THROWS_AS(validate_nearring(ragged, ragged), MalformedTableError);

  std::vector<std::vector<int>> out_of_range = {{0, 1}, {1, 7}};
  std::vector<std::vector<int>> ok = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(validate_nearring(out_of_range, ok), MalformedTableError);
  CHECK_THROWS_AS(validate_nearring(ok, out_of_range), MalformedTableError);
}

TEST_CASE("left distributivity flag") {
  CHECK(is_distributive(ring_as_nearring(6).nearring));
  CHECK(is_distributive(zero_mul_nearring("Z2", cyclic_group_table(2)).nearring));
  CHECK(!is_distributive(transformation_nearring("Z2", cyclic_group_table(2)).nearring));
}

TEST_CASE("subset sum is the raw elementwise set") {
  auto z6 = ring_as_nearring(6).nearring;
  CHECK(subset_sum(z6, Subset::of(6, {0, 3}), Subset::of(6, {0, 2, 4})) == Subset::full(6));
  Subset a = Subset::of(6, {1, 4});
  CHECK(subset_sum(z6, a, z6.zero_subset()) == a);

  auto z4 = ring_as_nearring(4).nearring;
  CHECK(subset_sum(z4, Subset::of(4, {1}), Subset::of(4, {1})) == Subset::of(4, {2}));
  CHECK(subset_sum(z4, Subset(4), Subset::of(4, {1})).empty());
}

TEST_CASE("subset product is the raw elementwise set") {
  auto z6 = ring_as_nearring(6).nearring;
  CHECK(subset_product(z6, Subset::of(6, {0, 2, 4}), Subset::of(6, {0, 3})) ==
        Subset::of(6, {0}));
  CHECK(subset_product(z6, Subset::of(6, {1, 5}), z6.zero_subset()) == Subset::of(6, {0}));
  Subset b = Subset::of(6, {2, 3});
  CHECK(subset_product(z6, Subset::of(6, {1}), b) == b);  // 1 is unity
  CHECK(subset_product(z6, Subset(6), b).empty());
}

TEST_CASE("subset negation") {
  auto z6 = ring_as_nearring(6).nearring;
  CHECK(subset_negate(z6, Subset::of(6, {0, 2, 4})) == Subset::of(6, {0, 2, 4}));
  CHECK(subset_negate(z6, Subset::of(6, {1, 2})) == Subset::of(6, {4, 5}));
  CHECK(subset_negate(z6, z6.zero_subset()) == z6.zero_subset());
}

TEST_CASE("additive closure") {
  auto z6 = ring_as_nearring(6).nearring;
  CHECK(additive_closure(z6, Subset::of(6, {2})) == Subset::of(6, {0, 2, 4}));
  CHECK(additive_closure(z6, Subset(6)) == z6.zero_subset());
  auto z4 = ring_as_nearring(4).nearring;
  CHECK(additive_closure(z4, Subset::of(4, {1})) == Subset::full(4));
}

TEST_CASE("group facts hold on every catalog entry") {
  for (const auto& e : standard_catalog(27)) {
    const FiniteNearring& nr = e.nearring;
    for (int a = 0; a < nr.order(); ++a) {
      CHECK(nr.add(0, a) == a);
      CHECK(nr.add(a, 0) == a);
      CHECK(nr.add(a, nr.neg(a)) == 0);
      CHECK(nr.mul(0, a) == 0);
    }
  }
}

TEST_CASE("subset operation laws on random subsets") {
  std::mt19937 rng(20260810);
  for (const auto& e : standard_catalog(8)) {
    const FiniteNearring& nr = e.nearring;
    for (int round = 0; round < 20; ++round) {
      Subset a = random_subset(nr, rng);
      Subset b = random_subset(nr, rng);
      Subset c = random_subset(nr, rng);

      // monotonicity: A <= A|C implies A+B <= (A|C)+B and AB <= (A|C)B
      Subset a2 = a | c;
      CHECK(subset_sum(nr, a, b).is_subset_of(subset_sum(nr, a2, b)));
      CHECK(subset_product(nr, a, b).is_subset_of(subset_product(nr, a2, b)));

      // (AB)C = A(BC) lifted from associative mul
      CHECK(subset_product(nr, subset_product(nr, a, b), c) ==
            subset_product(nr, a, subset_product(nr, b, c)));

      // negation is an involution
      CHECK(subset_negate(nr, subset_negate(nr, a)) == a);

      // closure is extensive, idempotent, monotone
      Subset ca = additive_closure(nr, a);
      CHECK(a.is_subset_of(ca));
      CHECK(additive_closure(nr, ca) == ca);
      CHECK(ca.is_subset_of(additive_closure(nr, a2)));
    }
  }
}

TEST_CASE("subset guards ambient order") {
  CHECK_THROWS_AS(Subset::of(4, {0}) & Subset::of(6, {0}), std::invalid_argument);
  CHECK_THROWS_AS(Subset(4).insert(4), std::out_of_range);
}
