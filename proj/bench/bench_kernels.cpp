// Times the OpenMP kernels against the serial reference implementations.
// Build and run: cmake --build build && ./build/bench/bench_kernels

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nearring/catalog.hpp"
#include "nearring/nearring.hpp"
#include "nearring/serial.hpp"
#include "nearring/substructures.hpp"
#include "nearring/regularity.hpp"
#include "nearring/theorems.hpp"

using namespace nearring;

namespace {

// Best of `reps` runs; the minimum is the least noise-contaminated sample on
// a shared machine.
double seconds_of(const std::function<void()>& fn, int reps) {
  double best = 1e18;
  for (int i = 0; i < reps; ++i) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto end = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(end - start).count());
  }
  return best;
}

void set_threads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n);
#else
  (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void row(const char* name, double serial, double par1, double parN, int threads) {
  std::printf(
      "%-24s serial %8.3f ms   omp(1) %8.3f ms   omp(%d) %8.3f ms   scaling %.2fx\n",
      name, serial * 1e3, par1 * 1e3, threads, parN * 1e3,
      parN > 0 ? par1 / parN : 0.0);
}

}  // namespace

int main() {
  int threads = max_threads();
  std::printf("kernel benchmark, %d thread(s) available\n\n", threads);

  // axiom scan on a large ring (validation also derives unity and the
  // distributivity flag, so it does ~4/3 of the reference's table reads)
  {
    const int n = 320;
    std::vector<int> add(size_t(n) * n), mul(size_t(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        add[size_t(a) * n + b] = (a + b) % n;
        mul[size_t(a) * n + b] = (a * b) % n;
      }

    double s = seconds_of([&] { serial::scan_axioms(n, add, mul); }, 5);
    set_threads(1);
    double p1 = seconds_of([&] { validate_nearring(n, add, mul); }, 5);
    set_threads(threads);
    double pn = seconds_of([&] { validate_nearring(n, add, mul); }, 5);
    row("axiom-scan Z320", s, p1, pn, threads);
  }

  // subgroup lattice of the elementary abelian group of order 64
  {
    std::vector<std::vector<int>> xor_table(64, std::vector<int>(64));
    for (int a = 0; a < 64; ++a)
      for (int b = 0; b < 64; ++b) xor_table[size_t(a)][size_t(b)] = a ^ b;
    auto entry = zero_mul_nearring("Z2pow6", xor_table);

    double s = seconds_of([&] { serial::enumerate_subgroups(entry.nearring); }, 3);
    set_threads(1);
    double p1 = seconds_of([&] { enumerate_subgroups(entry.nearring); }, 3);
    set_threads(threads);
    double pn = seconds_of([&] { enumerate_subgroups(entry.nearring); }, 3);
    row("subgroups 2^6", s, p1, pn, threads);
  }

  // full theorem suite on the non-abelian zero-mul instance (distributive,
  // so the 3.4/3.5 decomposition paths are exercised); no serial twin exists
  // for the suite driver, so omp(1) stands in as the baseline
  {
    auto entry = zero_mul_nearring("S3", symmetric_group_3_table());
    set_threads(1);
    double p1 = seconds_of([&] { run_full_suite(entry.nearring); }, 5);
    set_threads(threads);
    double pn = seconds_of([&] { run_full_suite(entry.nearring); }, 5);
    row("suite zero_S3", p1, p1, pn, threads);
  }

  // regularity witness scan on a prime field: the smallest y for x is the
  // modular inverse, so the per-element search runs long
  {
    const int n = 719;
    std::vector<int> add(size_t(n) * n), mul(size_t(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        add[size_t(a) * n + b] = int((a + b) % n);
        mul[size_t(a) * n + b] = int((long long)a * b % n);
      }
    set_threads(threads);
    ValidationResult v = validate_nearring(n, add, mul);
    const FiniteNearring& nr = *v.nearring;
    Subset zero = nr.zero_subset();

    double s = seconds_of([&] { serial::regularity_scan(nr, zero); }, 50);
    set_threads(1);
    double p1 = seconds_of([&] { p_regular_scan(nr, zero); }, 50);
    set_threads(threads);
    double pn = seconds_of([&] { p_regular_scan(nr, zero); }, 50);
    row("regularity Z719", s, p1, pn, threads);
  }

  return 0;
}
