#include <doctest.h>

#include "nearring/catalog.hpp"
#include "nearring/errors.hpp"
#include "nearring/substructures.hpp"

using namespace nearring;

TEST_CASE("every shipped entry validates and matches its recorded flags") {
  auto entries = standard_catalog(27);
  CHECK(entries.size() == 17);
  for (const auto& e : entries) {
    CAPTURE(e.name);
    ValidationResult r =
        validate_nearring(e.nearring.order(), e.nearring.add_table(), e.nearring.mul_table());
    CHECK(r.ok());
    if (e.expected.distributive)
      CHECK(e.nearring.distributive() == *e.expected.distributive);
    if (e.expected.has_unity)
      CHECK(e.nearring.unity().has_value() == *e.expected.has_unity);
  }
}

TEST_CASE("ring construction") {
  CHECK(ring_as_nearring(1).nearring.order() == 1);
  auto z6 = ring_as_nearring(6);
  CHECK(z6.name == "Z6");
  CHECK(z6.nearring.mul(4, 5) == 2);
  CHECK(z6.nearring.add(4, 5) == 3);
  CHECK_THROWS_AS(ring_as_nearring(0), MalformedTableError);
  CHECK_THROWS_AS(ring_as_nearring(65), OrderCapError);
}

TEST_CASE("zero-multiplication construction") {
  auto s3 = zero_mul_nearring("S3", symmetric_group_3_table());
  CHECK(s3.nearring.order() == 6);
  CHECK(!s3.nearring.unity().has_value());
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(s3.nearring.mul(a, b) == 0);

  // non-abelian addition shows up
  bool abelian = true;
  for (int a = 0; a < 6 && abelian; ++a)
    for (int b = 0; b < 6; ++b)
      if (s3.nearring.add(a, b) != s3.nearring.add(b, a)) {
        abelian = false;
        break;
      }
  CHECK(!abelian);

  std::vector<std::vector<int>> not_group = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS(zero_mul_nearring("bad", not_group), NotAGroupError);
  std::vector<std::vector<int>> shifted = {{1, 0}, {0, 1}};
  CHECK_THROWS_AS(zero_mul_nearring("bad", shifted), NotAGroupError);
}

TEST_CASE("transformation nearring M(G)") {
  auto mz2 = transformation_nearring("Z2", cyclic_group_table(2));
  CHECK(mz2.nearring.order() == 4);
  CHECK(mz2.nearring.unity() == 2);  // identity map encodes to 0 + 2*1
  CHECK(!mz2.nearring.distributive());

  auto mz3 = transformation_nearring("Z3", cyclic_group_table(3));
  CHECK(mz3.nearring.order() == 27);
  CHECK(mz3.nearring.unity() == 21);  // 0 + 1*3 + 2*9
  CHECK(!mz3.nearring.distributive());

  auto m1 = transformation_nearring("Z1", cyclic_group_table(1));
  CHECK(m1.nearring.order() == 1);

  CHECK_THROWS_AS(transformation_nearring("Z4", cyclic_group_table(4)), OrderCapError);
}

TEST_CASE("M(G) composition matches hand evaluation") {
  // In M(Z2): 1 encodes the swap (f(0)=1, f(1)=0), 3 the constant-1 map.
  auto mz2 = transformation_nearring("Z2", cyclic_group_table(2)).nearring;
  CHECK(mz2.mul(1, 1) == 2);  // swap after swap = identity
  CHECK(mz2.mul(3, 1) == 3);  // constant stays constant
  CHECK(mz2.mul(1, 3) == 0);  // swap of constant-1 = constant-0
  CHECK(mz2.mul(1, 0) == 3);  // swap of constant-0 = constant-1
  CHECK(mz2.add(1, 3) == 2);  // pointwise sum
}

TEST_CASE("direct products") {
  auto z2 = ring_as_nearring(2);
  auto z3 = ring_as_nearring(3);
  auto prod = direct_product(z2, z3);
  CHECK(prod.name == "Z2xZ3");
  CHECK(prod.nearring.order() == 6);
  CHECK(prod.nearring.unity() == 4);  // (1,1) at index 1*3+1
  CHECK(prod.nearring.distributive());

  auto z1 = ring_as_nearring(1);
  auto same = direct_product(z2, z1);
  CHECK(same.nearring.add_table() == z2.nearring.add_table());
  CHECK(same.nearring.mul_table() == z2.nearring.mul_table());

  auto mixed = direct_product(z2, zero_mul_nearring("Z2", cyclic_group_table(2)));
  CHECK(mixed.nearring.order() == 4);
  CHECK(!mixed.nearring.unity().has_value());

  CHECK_THROWS_AS(direct_product(ring_as_nearring(8), ring_as_nearring(63)), OrderCapError);
}

TEST_CASE("every additive subgroup of a zero-mul entry is a bi-ideal") {
  for (const auto& e : standard_catalog(27)) {
    if (e.name.rfind("zero_", 0) != 0) continue;
    for (const Subset& s : enumerate_subgroups(e.nearring)) {
      CAPTURE(e.name);
      CHECK(is_bi_ideal(e.nearring, s));
    }
  }
}

TEST_CASE("catalog filtering is deterministic") {
  auto six = standard_catalog(6);
  std::vector<std::string> names;
  for (const auto& e : six) names.push_back(e.name);
  CHECK(names == std::vector<std::string>{"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "zero_Z2",
                                          "zero_Z4", "zero_V4", "zero_S3", "M_Z2",
                                          "Z2xZ2", "Z2xZ3"});

  auto one = standard_catalog(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].name == "Z1");

  CHECK(standard_catalog(27).size() == 17);
}
