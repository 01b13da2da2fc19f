#include "nearring/catalog.hpp"

#include <algorithm>
#include <array>

#include "nearring/errors.hpp"

namespace nearring {

namespace {

FiniteNearring validated(const std::vector<std::vector<int>>& add,
                         const std::vector<std::vector<int>>& mul,
                         const std::string& what) {
  ValidationResult r = validate_nearring(add, mul);
  if (!r.ok())
    throw InternalCheckError("catalog constructor produced an invalid nearring: " + what);
  return std::move(*r.nearring);
}

void check_group(const std::vector<std::vector<int>>& t) {
  int n = static_cast<int>(t.size());
  if (n == 0) throw NotAGroupError("empty table");
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n) throw NotAGroupError("ragged table");
    for (int v : row)
      if (v < 0 || v >= n) throw NotAGroupError("entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (t[0][a] != a || t[a][0] != a)
      throw NotAGroupError("identity is not at index 0");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[static_cast<size_t>(t[static_cast<size_t>(a)][static_cast<size_t>(b)])]
             [static_cast<size_t>(c)] !=
            t[static_cast<size_t>(a)]
             [static_cast<size_t>(t[static_cast<size_t>(b)][static_cast<size_t>(c)])])
          throw NotAGroupError("not associative");
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n; ++b)
      if (t[static_cast<size_t>(a)][static_cast<size_t>(b)] == 0 &&
          t[static_cast<size_t>(b)][static_cast<size_t>(a)] == 0) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) throw NotAGroupError("element without inverse");
  }
}

}  // namespace

std::vector<std::vector<int>> cyclic_group_table(int n) {
  std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  return t;
}

std::vector<std::vector<int>> klein_four_table() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = a ^ b;
  return t;
}

std::vector<std::vector<int>> symmetric_group_3_table() {
  // Permutations of {0,1,2} in lexicographic one-line order; identity first.
  // (s + t)(i) = s(t(i)).
  constexpr std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
  }};
  auto index_of = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[static_cast<size_t>(i)] == p) return i;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> comp{};
      for (int i = 0; i < 3; ++i)
        comp[static_cast<size_t>(i)] =
            perms[static_cast<size_t>(a)]
                 [static_cast<size_t>(perms[static_cast<size_t>(b)][static_cast<size_t>(i)])];
      t[static_cast<size_t>(a)][static_cast<size_t>(b)] = index_of(comp);
    }
  return t;
}

CatalogEntry ring_as_nearring(int modulus) {
  if (modulus < 1) throw MalformedTableError("modulus must be positive");
  if (modulus > order_cap())
    throw OrderCapError("modulus exceeds order cap");
  int n = modulus;
  std::vector<std::vector<int>> add = cyclic_group_table(n);
  std::vector<std::vector<int>> mul(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a * b) % n;
  std::string name = "Z" + std::to_string(n);
  return {name, validated(add, mul, name), "ring Z mod " + std::to_string(n),
          {true, true}};
}

CatalogEntry zero_mul_nearring(const std::string& group_name,
                               const std::vector<std::vector<int>>& group_add) {
  check_group(group_add);
  int n = static_cast<int>(group_add.size());
  std::vector<std::vector<int>> mul(static_cast<size_t>(n),
                                    std::vector<int>(static_cast<size_t>(n), 0));
  std::string name = "zero_" + group_name;
  return {name, validated(group_add, mul, name), "zero multiplication on " + group_name,
          {true, n == 1 ? std::optional<bool>(true) : std::optional<bool>(false)}};
}

CatalogEntry transformation_nearring(const std::string& group_name,
                                     const std::vector<std::vector<int>>& group_add) {
  check_group(group_add);
  int m = static_cast<int>(group_add.size());
  long long order = 1;
  for (int i = 0; i < m; ++i) {
    order *= m;
    if (order > order_cap())
      throw OrderCapError("|G|^|G| exceeds order cap for |G|=" + std::to_string(m));
  }
  int n = static_cast<int>(order);

  // Decode map f from its index: digit t (base m) is f(t).
  auto image = [&](int f, int t) {
    for (int i = 0; i < t; ++i) f /= m;
    return f % m;
  };
  auto encode = [&](const std::vector<int>& vals) {
    int idx = 0;
    for (int t = m - 1; t >= 0; --t) idx = idx * m + vals[static_cast<size_t>(t)];
    return idx;
  };

  std::vector<std::vector<int>> add(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  std::vector<std::vector<int>> mul(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  std::vector<int> vals(static_cast<size_t>(m));
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      for (int t = 0; t < m; ++t)
        vals[static_cast<size_t>(t)] =
            group_add[static_cast<size_t>(image(f, t))][static_cast<size_t>(image(g, t))];
      add[static_cast<size_t>(f)][static_cast<size_t>(g)] = encode(vals);
      for (int t = 0; t < m; ++t) vals[static_cast<size_t>(t)] = image(f, image(g, t));
      mul[static_cast<size_t>(f)][static_cast<size_t>(g)] = encode(vals);
    }

  std::string name = "M_" + group_name;
  return {name, validated(add, mul, name),
          "all self-maps of " + group_name + " under pointwise addition and composition",
          {m >= 2 ? std::optional<bool>(false) : std::optional<bool>(true), true}};
}

CatalogEntry direct_product(const CatalogEntry& a, const CatalogEntry& b) {
  long long order = static_cast<long long>(a.nearring.order()) * b.nearring.order();
  if (order > order_cap()) throw OrderCapError("product order exceeds cap");
  int n = static_cast<int>(order);
  int nb = b.nearring.order();
  std::vector<std::vector<int>> add(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  std::vector<std::vector<int>> mul(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
      add[static_cast<size_t>(x)][static_cast<size_t>(y)] =
          a.nearring.add(xa, ya) * nb + b.nearring.add(xb, yb);
      mul[static_cast<size_t>(x)][static_cast<size_t>(y)] =
          a.nearring.mul(xa, ya) * nb + b.nearring.mul(xb, yb);
    }
  std::string name = a.name + "x" + b.name;
  ExpectedFlags flags;
  if (a.expected.distributive && b.expected.distributive)
    flags.distributive = *a.expected.distributive && *b.expected.distributive;
  if (a.expected.has_unity && b.expected.has_unity)
    flags.has_unity = *a.expected.has_unity && *b.expected.has_unity;
  return {name, validated(add, mul, name), "direct product " + a.name + " x " + b.name,
          flags};
}

std::vector<CatalogEntry> standard_catalog(int max_order) {
  std::vector<CatalogEntry> all;
  for (int m = 1; m <= 8; ++m) all.push_back(ring_as_nearring(m));
  all.push_back(zero_mul_nearring("Z2", cyclic_group_table(2)));
  all.push_back(zero_mul_nearring("Z4", cyclic_group_table(4)));
  all.push_back(zero_mul_nearring("V4", klein_four_table()));
  all.push_back(zero_mul_nearring("S3", symmetric_group_3_table()));
  all.push_back(transformation_nearring("Z2", cyclic_group_table(2)));
  all.push_back(transformation_nearring("Z3", cyclic_group_table(3)));
  all.push_back(direct_product(ring_as_nearring(2), ring_as_nearring(2)));
  all.push_back(direct_product(ring_as_nearring(2), ring_as_nearring(3)));
  all.push_back(direct_product(ring_as_nearring(2),
                               transformation_nearring("Z2", cyclic_group_table(2))));

  std::vector<CatalogEntry> out;
  for (auto& e : all)
    if (e.nearring.order() <= max_order) out.push_back(std::move(e));
  return out;
}

}  // namespace nearring
