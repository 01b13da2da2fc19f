#include <doctest.h>

#include "nearring/catalog.hpp"
#include "nearring/regularity.hpp"
#include "nearring/serial.hpp"
#include "nearring/substructures.hpp"

// The library's OpenMP kernels must agree with the plain serial reference on
// every shipped instance. The serial side is the one a reader can eyeball.

using namespace nearring;

TEST_CASE("axiom scans agree") {
  for (const auto& e : standard_catalog(27)) {
    CAPTURE(e.name);
    auto serial_failures = serial::scan_axioms(e.nearring.order(), e.nearring.add_table(),
                                               e.nearring.mul_table());
    CHECK(serial_failures.empty());
  }

  auto broken_add = cyclic_group_table(4);
  ValidationResult parallel = validate_nearring(broken_add, broken_add);
  std::vector<int> flat;
  for (auto& row : broken_add) flat.insert(flat.end(), row.begin(), row.end());
  auto serial_failures = serial::scan_axioms(4, flat, flat);

  REQUIRE(serial_failures.size() == parallel.failures.size());
  for (size_t i = 0; i < serial_failures.size(); ++i) {
    CHECK(serial_failures[i].axiom == parallel.failures[i].axiom);
    CHECK(serial_failures[i].witness == parallel.failures[i].witness);
  }
}

TEST_CASE("distributivity scans agree") {
  for (const auto& e : standard_catalog(27)) {
    CAPTURE(e.name);
    CHECK(serial::scan_left_distributivity(e.nearring) == e.nearring.distributive());
  }
}

TEST_CASE("subgroup enumerations agree") {
  for (const auto& e : standard_catalog(27)) {
    CAPTURE(e.name);
    CHECK(serial::enumerate_subgroups(e.nearring) == enumerate_subgroups(e.nearring));
  }
}

TEST_CASE("regularity scans agree") {
  for (const auto& e : standard_catalog(16)) {
    CAPTURE(e.name);
    for (const Subset& p : enumerate(e.nearring, StructureKind::ideal).members) {
      serial::WitnessScan ref = serial::regularity_scan(e.nearring, p);
      RegularityResult par = is_p_regular(e.nearring, p);
      if (ref.failing_element >= 0) {
        CHECK(!par.regular());
        CHECK(par.failing_element == ref.failing_element);
      } else {
        REQUIRE(par.regular());
        for (int x = 0; x < e.nearring.order(); ++x) {
          CHECK(par.certificate->witnesses[size_t(x)].y == ref.witnesses[size_t(x)].y);
          CHECK(par.certificate->witnesses[size_t(x)].p == ref.witnesses[size_t(x)].p);
        }
      }
    }
  }
}
