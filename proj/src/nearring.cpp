#include "nearring/nearring.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "nearring/errors.hpp"
#include "nearring/parallel.hpp"

namespace nearring {

namespace {

constexpr long long kNoViolation = std::numeric_limits<long long>::max();

// Encodes a triple as a single key so OpenMP min-reductions stay
// deterministic regardless of thread count.
inline long long triple_key(int n, int a, int b, int c) {
  return (static_cast<long long>(a) * n + b) * n + c;
}

std::array<int, 3> decode_triple(int n, long long key) {
  int c = static_cast<int>(key % n);
  key /= n;
  int b = static_cast<int>(key % n);
  int a = static_cast<int>(key / n);
  return {a, b, c};
}

void check_shape(const std::vector<std::vector<int>>& t, int n, const char* which) {
  if (static_cast<int>(t.size()) != n)
    throw MalformedTableError(std::string(which) + " table: wrong row count");
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n)
      throw MalformedTableError(std::string(which) + " table: ragged row");
    for (int v : row)
      if (v < 0 || v >= n)
        throw MalformedTableError(std::string(which) + " table: entry out of range");
  }
}

std::vector<int> flatten(const std::vector<std::vector<int>>& t) {
  std::vector<int> out;
  out.reserve(t.size() * t.size());
  for (const auto& row : t) out.insert(out.end(), row.begin(), row.end());
  return out;
}

}  // namespace

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::add_associativity: return "add-associativity";
    case Axiom::add_identity: return "add-identity";
    case Axiom::add_inverse: return "add-inverse";
    case Axiom::mul_associativity: return "mul-associativity";
    case Axiom::right_distributivity: return "right-distributivity";
    case Axiom::zero_left_absorption: return "zero-left-absorption";
  }
  return "?";
}

struct ValidationAccess {
  static FiniteNearring make(int n, std::vector<int> add, std::vector<int> mul,
                             std::vector<int> neg, std::optional<int> unity,
                             bool distributive) {
    return FiniteNearring(n, std::move(add), std::move(mul), std::move(neg), unity,
                          distributive);
  }
};

ValidationResult validate_nearring(const std::vector<std::vector<int>>& add_table,
                                   const std::vector<std::vector<int>>& mul_table) {
  int n = static_cast<int>(add_table.size());
  if (n == 0) throw MalformedTableError("add table: empty");
  check_shape(add_table, n, "add");
  check_shape(mul_table, n, "mul");
  return validate_nearring(n, flatten(add_table), flatten(mul_table));
}

ValidationResult validate_nearring(int n, const std::vector<int>& add,
                                   const std::vector<int>& mul) {
  if (n <= 0) throw MalformedTableError("order must be positive");
  if (static_cast<int>(add.size()) != n * n || static_cast<int>(mul.size()) != n * n)
    throw MalformedTableError("flattened table size does not match order");
  for (int v : add)
    if (v < 0 || v >= n) throw MalformedTableError("add table: entry out of range");
  for (int v : mul)
    if (v < 0 || v >= n) throw MalformedTableError("mul table: entry out of range");

  auto at = [&](const std::vector<int>& t, int a, int b) {
    return t[static_cast<size_t>(a) * n + b];
  };

  std::vector<AxiomFailure> failures;

  const long long cube = static_cast<long long>(n) * n * n;

  // Additive associativity.
  long long best = kNoViolation;
#pragma omp parallel for reduction(min : best) schedule(static) if (detail::use_parallel(cube))
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(add, at(add, a, b), c) != at(add, a, at(add, b, c))) {
          long long k = triple_key(n, a, b, c);
          if (k < best) best = k;
        }
  if (best != kNoViolation)
    failures.push_back({Axiom::add_associativity, decode_triple(n, best)});

  // Identity at index 0.
  best = kNoViolation;
#pragma omp parallel for reduction(min : best) schedule(static) if (detail::use_parallel(n))
  for (int a = 0; a < n; ++a)
    if (at(add, 0, a) != a || at(add, a, 0) != a)
      if (a < best) best = a;
  if (best != kNoViolation)
    failures.push_back({Axiom::add_identity, {static_cast<int>(best), -1, -1}});

  // Two-sided additive inverses; fill the neg table along the way.
  std::vector<int> neg(static_cast<size_t>(n), -1);
  best = kNoViolation;
#pragma omp parallel for reduction(min : best) schedule(static) if (detail::use_parallel(static_cast<long long>(n) * n))
  for (int a = 0; a < n; ++a) {
    int inv = -1;
    for (int b = 0; b < n; ++b)
      if (at(add, a, b) == 0 && at(add, b, a) == 0) {
        inv = b;
        break;
      }
    if (inv < 0) {
      if (a < best) best = a;
    } else {
      neg[static_cast<size_t>(a)] = inv;
    }
  }
  if (best != kNoViolation)
    failures.push_back({Axiom::add_inverse, {static_cast<int>(best), -1, -1}});

  // Multiplicative associativity.
  best = kNoViolation;
#pragma omp parallel for reduction(min : best) schedule(static) if (detail::use_parallel(cube))
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(mul, at(mul, a, b), c) != at(mul, a, at(mul, b, c))) {
          long long k = triple_key(n, a, b, c);
          if (k < best) best = k;
        }
  if (best != kNoViolation)
    failures.push_back({Axiom::mul_associativity, decode_triple(n, best)});

  // Right distributivity: (a+b)c = ac+bc.
  best = kNoViolation;
#pragma omp parallel for reduction(min : best) schedule(static) if (detail::use_parallel(cube))
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(mul, at(add, a, b), c) != at(add, at(mul, a, c), at(mul, b, c))) {
          long long k = triple_key(n, a, b, c);
          if (k < best) best = k;
        }
  if (best != kNoViolation)
    failures.push_back({Axiom::right_distributivity, decode_triple(n, best)});

  // 0a = 0 is forced by right distributivity plus cancellation; scanning it
  // anyway catches the forced fact independently.
  best = kNoViolation;
  for (int a = 0; a < n; ++a)
    if (at(mul, 0, a) != 0) {
      best = a;
      break;
    }
  if (best != kNoViolation)
    failures.push_back({Axiom::zero_left_absorption, {static_cast<int>(best), -1, -1}});

  if (!failures.empty()) return {std::nullopt, std::move(failures)};

  // Derived fields on a now-valid instance.
  std::optional<int> unity;
  for (int e = 0; e < n; ++e) {
    bool is_unity = true;
    for (int a = 0; a < n; ++a)
      if (at(mul, e, a) != a || at(mul, a, e) != a) {
        is_unity = false;
        break;
      }
    if (is_unity) {
      unity = e;
      break;
    }
  }

  bool distributive = true;
#pragma omp parallel for reduction(&& : distributive) schedule(static) if (detail::use_parallel(cube))
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(mul, a, at(add, b, c)) != at(add, at(mul, a, b), at(mul, a, c)))
          distributive = false;

  return {ValidationAccess::make(n, add, mul, std::move(neg), unity, distributive), {}};
}

bool is_distributive(const FiniteNearring& nr) { return nr.distributive(); }

Subset subset_sum(const FiniteNearring& nr, const Subset& a, const Subset& b) {
  Subset r(nr.order());
  a.for_each([&](int x) { b.for_each([&](int y) { r.insert(nr.add(x, y)); }); });
  return r;
}

Subset subset_product(const FiniteNearring& nr, const Subset& a, const Subset& b) {
  Subset r(nr.order());
  a.for_each([&](int x) { b.for_each([&](int y) { r.insert(nr.mul(x, y)); }); });
  return r;
}

Subset subset_negate(const FiniteNearring& nr, const Subset& a) {
  Subset r(nr.order());
  a.for_each([&](int x) { r.insert(nr.neg(x)); });
  return r;
}

Subset additive_closure(const FiniteNearring& nr, const Subset& a) {
  Subset s = a;
  s.insert(0);
  for (;;) {
    Subset grown = s | subset_sum(nr, s, s) | subset_negate(nr, s);
    if (grown == s) return s;
    s = grown;
  }
}

int order_cap() {
  if (const char* env = std::getenv("NEARRING_ORDER_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 64;
}

}  // namespace nearring
