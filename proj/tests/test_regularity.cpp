#include <doctest.h>

#include "nearring/catalog.hpp"
#include "nearring/errors.hpp"
#include "nearring/regularity.hpp"
#include "nearring/substructures.hpp"
#include "nearring/verify.hpp"

using namespace nearring;

TEST_CASE("plain regularity") {
  auto z6 = ring_as_nearring(6).nearring;
  RegularityResult r = is_regular(z6);
  REQUIRE(r.regular());
  CHECK(r.certificate->ideal_p == z6.zero_subset());
  CHECK(r.certificate->witnesses[2].y == 2);  // 2*2*2 = 2 mod 6
  CHECK(r.certificate->witnesses[2].p == 0);
  CHECK(verify_certificate(z6, *r.certificate));

  RegularityResult z4 = is_regular(ring_as_nearring(4).nearring);
  CHECK(!z4.regular());
  CHECK(z4.failing_element == 2);

  RegularityResult zm = is_regular(zero_mul_nearring("Z2", cyclic_group_table(2)).nearring);
  CHECK(!zm.regular());
  CHECK(zm.failing_element == 1);
}

TEST_CASE("P-regularity witness map for Z4 with P={0,2}") {
  auto z4 = ring_as_nearring(4).nearring;
  Subset p = Subset::of(4, {0, 2});
  RegularityResult r = is_p_regular(z4, p);
  REQUIRE(r.regular());
  const auto& w = r.certificate->witnesses;
  CHECK(w[0].y == 0);
  CHECK(w[0].p == 0);
  CHECK(w[1].y == 1);
  CHECK(w[1].p == 0);
  CHECK(w[2].y == 0);
  CHECK(w[2].p == 2);
  CHECK(w[3].y == 1);
  CHECK(w[3].p == 2);
  CHECK(verify_certificate(z4, *r.certificate));
}

TEST_CASE("P = N is always P-regular with y = 0") {
  for (const auto& e : standard_catalog(8)) {
    RegularityResult r = is_p_regular(e.nearring, Subset::full(e.nearring.order()));
    REQUIRE(r.regular());
    for (const RegularityWitness& w : r.certificate->witnesses) CHECK(w.y == 0);
    CHECK(verify_certificate(e.nearring, *r.certificate));
  }
}

TEST_CASE("P = {0} agrees with plain regularity") {
  auto z6 = ring_as_nearring(6).nearring;
  RegularityResult via_p = is_p_regular(z6, z6.zero_subset());
  RegularityResult plain = is_regular(z6);
  REQUIRE(via_p.regular());
  REQUIRE(plain.regular());
  for (int x = 0; x < 6; ++x) {
    CHECK(via_p.certificate->witnesses[size_t(x)].y ==
          plain.certificate->witnesses[size_t(x)].y);
    CHECK(via_p.certificate->witnesses[size_t(x)].p == 0);
  }
}

TEST_CASE("P-regularity rejects non-ideals") {
  auto z4 = ring_as_nearring(4).nearring;
  CHECK_THROWS_AS(is_p_regular(z4, Subset::of(4, {0, 1})), NotAnIdealError);

  // {0} is not even an ideal of M(Z2): a genuinely failing precondition.
  auto mz2 = transformation_nearring("Z2", cyclic_group_table(2)).nearring;
  CHECK_THROWS_AS(is_p_regular(mz2, mz2.zero_subset()), NotAnIdealError);
}

TEST_CASE("strict unity mode") {
  auto zm = zero_mul_nearring("Z2", cyclic_group_table(2)).nearring;
  CHECK_THROWS_AS(is_p_regular(zm, Subset::full(2), UnityMode::strict), NoUnityError);
  CHECK(is_p_regular(zm, Subset::full(2), UnityMode::lenient).regular());

  // With unity present the two modes agree witness for witness.
  auto z6 = ring_as_nearring(6).nearring;
  auto lenient = is_p_regular(z6, Subset::of(6, {0, 3}), UnityMode::lenient);
  auto strict = is_p_regular(z6, Subset::of(6, {0, 3}), UnityMode::strict);
  REQUIRE(lenient.regular());
  REQUIRE(strict.regular());
  for (int x = 0; x < 6; ++x) {
    CHECK(lenient.certificate->witnesses[size_t(x)].y ==
          strict.certificate->witnesses[size_t(x)].y);
    CHECK(lenient.certificate->witnesses[size_t(x)].p ==
          strict.certificate->witnesses[size_t(x)].p);
  }
  CHECK(strict.certificate->strict_unity_mode);
  CHECK(!lenient.certificate->strict_unity_mode);
}

TEST_CASE("find_p_regular_ideals") {
  auto z4 = ring_as_nearring(4).nearring;
  auto z4_list = find_p_regular_ideals(z4);
  REQUIRE(z4_list.size() == 2);
  CHECK(z4_list[0].first == Subset::of(4, {0, 2}));
  CHECK(z4_list[1].first == Subset::full(4));

  CHECK(find_p_regular_ideals(ring_as_nearring(6).nearring).size() == 4);

  auto z1_list = find_p_regular_ideals(ring_as_nearring(1).nearring);
  REQUIRE(z1_list.size() == 1);
  CHECK(z1_list[0].first == Subset::of(1, {0}));
}

TEST_CASE("monotone certificate transfer to larger ideals") {
  auto z6 = ring_as_nearring(6).nearring;
  auto ideals = enumerate(z6, StructureKind::ideal).members;
  for (const Subset& small : ideals) {
    RegularityResult r = is_p_regular(z6, small);
    if (!r.regular()) continue;
    for (const Subset& big : ideals) {
      if (!small.is_subset_of(big)) continue;
      CHECK(is_p_regular(z6, big).regular());
      // the old witnesses remain valid under the larger ideal
      RegularityCertificate transferred = *r.certificate;
      transferred.ideal_p = big;
      CHECK(verify_certificate(z6, transferred));
    }
  }
}

TEST_CASE("the n'n-in-P witness") {
  auto z4 = ring_as_nearring(4).nearring;
  LeftAnnihilationWitness w = theorem_3_1_witness(z4, Subset::of(4, {0, 2}), 1);
  CHECK(w.smallest == 0);
  CHECK(w.smallest_nonzero == 2);

  auto z6 = ring_as_nearring(6).nearring;
  LeftAnnihilationWitness w2 = theorem_3_1_witness(z6, Subset::of(6, {0, 2, 4}), 2);
  CHECK(w2.smallest == 0);
  CHECK(w2.smallest_nonzero == 1);

  // n' = 0 qualifies everywhere P-regularity holds
  for (const auto& e : standard_catalog(8))
    for (auto& [p, cert] : find_p_regular_ideals(e.nearring))
      for (int n = 0; n < e.nearring.order(); ++n)
        CHECK(theorem_3_1_witness(e.nearring, p, n).smallest == 0);

  CHECK_THROWS_AS(theorem_3_1_witness(z4, z4.zero_subset(), 1), HypothesisError);
}

TEST_CASE("the independent verifier rejects tampered certificates") {
  auto z6 = ring_as_nearring(6).nearring;
  RegularityResult r = is_p_regular(z6, Subset::of(6, {0, 3}));
  REQUIRE(r.regular());

  // x=5 has witness (y=2, p=3); bumping y makes the recomputed p disagree.
  RegularityCertificate bad_y = *r.certificate;
  CHECK(bad_y.witnesses[5].y == 2);
  bad_y.witnesses[5].y = 3;
  CHECK(!verify_certificate(z6, bad_y));

  RegularityCertificate bad_p = *r.certificate;
  bad_p.witnesses[2].p = (bad_p.witnesses[2].p + 1) % 6;
  CHECK(!verify_certificate(z6, bad_p));
}

TEST_CASE("the raw scan matches the validated entry point") {
  auto z6 = ring_as_nearring(6).nearring;
  Subset p = Subset::of(6, {0, 3});
  RegularityResult checked = is_p_regular(z6, p);
  RegularityResult raw = p_regular_scan(z6, p);
  REQUIRE(checked.regular());
  REQUIRE(raw.regular());
  for (int x = 0; x < 6; ++x) {
    CHECK(checked.certificate->witnesses[size_t(x)].y ==
          raw.certificate->witnesses[size_t(x)].y);
    CHECK(checked.certificate->witnesses[size_t(x)].p ==
          raw.certificate->witnesses[size_t(x)].p);
  }
}

TEST_CASE("{0}-regularity and plain regularity agree wherever {0} is an ideal") {
  for (const auto& e : standard_catalog(27)) {
    CAPTURE(e.name);
    const FiniteNearring& nr = e.nearring;
    RegularityResult plain = is_regular(nr);
    if (!is_ideal(nr, nr.zero_subset(), Side::two_sided)) continue;
    RegularityResult via_p = is_p_regular(nr, nr.zero_subset());
    CHECK(via_p.regular() == plain.regular());
    if (via_p.regular()) {
      for (int x = 0; x < nr.order(); ++x) {
        CHECK(via_p.certificate->witnesses[size_t(x)].y ==
              plain.certificate->witnesses[size_t(x)].y);
      }
    } else {
      CHECK(via_p.failing_element == plain.failing_element);
    }
  }
}
