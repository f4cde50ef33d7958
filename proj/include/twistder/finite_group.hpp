#pragma once

// Finite groups stored as explicit Cayley tables (order <= 1024).

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistder/error.hpp"

namespace twistder {

class FiniteGroup;
using FiniteGroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr std::size_t kMaxFiniteOrder = 1024;
inline constexpr std::size_t kExhaustiveAssociativityOrder = 64;

class FiniteGroup {
 public:
  using element_type = std::uint32_t;
  struct element_less {
    bool operator()(element_type a, element_type b) const { return a < b; }
  };
  static constexpr bool is_finite = true;

  using Table = std::vector<std::vector<element_type>>;

  std::size_t order() const { return table_.size(); }
  element_type identity() const { return identity_; }

  element_type multiply(element_type g, element_type h) const { return table_[g][h]; }
  element_type inverse(element_type g) const { return inverse_[g]; }

  const std::vector<element_type>& generators() const { return generators_; }
  const std::string& name() const { return name_; }
  const Table& cayley_table() const { return table_; }

  bool contains(element_type g) const { return g < order(); }

  std::vector<element_type> elements() const {
    std::vector<element_type> out(order());
    std::iota(out.begin(), out.end(), element_type{0});
    return out;
  }

  element_type power(element_type g, long long n) const {
    if (n < 0) {
      g = inverse(g);
      n = -n;
    }
    element_type acc = identity_;
    for (long long i = 0; i < n; ++i) acc = multiply(acc, g);
    return acc;
  }

  std::size_t element_order(element_type g) const {
    std::size_t k = 1;
    for (element_type x = g; x != identity_; x = multiply(x, g)) ++k;
    return k;
  }

  // Optional display labels (e.g. quaternion units); indices are canonical.
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<element_type> find_label(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == label) return static_cast<element_type>(i);
    }
    return std::nullopt;
  }

  /// Subgroup generated by `gens`, sorted ascending.
  std::vector<element_type> closure(const std::vector<element_type>& gens) const {
    std::vector<char> seen(order(), 0);
    std::vector<element_type> out{identity_};
    seen[identity_] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (auto s : gens) {
        auto x = multiply(out[i], s);
        if (!seen[x]) {
          seen[x] = 1;
          out.push_back(x);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend FiniteGroupPtr make_finite_group(Table table, std::string name,
                                          std::vector<std::string> labels);

 private:
  FiniteGroup() = default;

  Table table_;
  std::vector<element_type> inverse_;
  element_type identity_ = 0;
  std::vector<element_type> generators_;
  std::string name_;
  std::vector<std::string> labels_;
};

namespace detail {

inline std::string triple_text(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace detail

/// Validates a Cayley table and builds the group. Generators are chosen
/// greedily in index order: an element is added when it is not already in
/// the subgroup generated by the earlier choices.
inline FiniteGroupPtr make_finite_group(FiniteGroup::Table table, std::string name = "cayley",
                                        std::vector<std::string> labels = {}) {
  using E = FiniteGroup::element_type;
  const std::size_t n = table.size();
  if (n == 0) fail(ErrorKind::SpecError, "empty Cayley table");
  if (n > kMaxFiniteOrder) {
    fail(ErrorKind::UnsupportedParameter,
         "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxFiniteOrder));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) fail(ErrorKind::SpecError, "row " + std::to_string(i) + " is not of length n");
    for (auto x : table[i]) {
      if (x >= n) fail(ErrorKind::SpecError, "entry out of range in row " + std::to_string(i));
    }
  }

  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table[i][j]]++) fail(ErrorKind::NotLatinSquare, "row " + std::to_string(i) + " repeats an entry");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table[j][i]]++) fail(ErrorKind::NotLatinSquare, "column " + std::to_string(i) + " repeats an entry");
    }
  }

  std::optional<E> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = static_cast<E>(e);
  }
  if (!identity) fail(ErrorKind::NoIdentity, "no two-sided identity in the table");

  std::vector<E> inverse(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto row = std::find(table[x].begin(), table[x].end(), *identity);
    auto y = static_cast<std::size_t>(row - table[x].begin());
    if (table[y][x] != *identity) {
      fail(ErrorKind::NoInverse, "element " + std::to_string(x) + " has no two-sided inverse");
    }
    inverse[x] = static_cast<E>(y);
  }

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->table_ = std::move(table);
  group->inverse_ = std::move(inverse);
  group->identity_ = *identity;
  group->name_ = std::move(name);
  if (!labels.empty() && labels.size() != n) fail(ErrorKind::SpecError, "label count differs from order");
  group->labels_ = std::move(labels);

  const auto& t = group->table_;
  std::vector<E> span{*identity};
  for (std::size_t x = 0; x < n && span.size() < n; ++x) {
    if (std::binary_search(span.begin(), span.end(), static_cast<E>(x))) continue;
    group->generators_.push_back(static_cast<E>(x));
    span = group->closure(group->generators_);
  }

  // Exhaustive on small tables; above that Light's test over the generators,
  // which is sufficient once the table is a Latin square with identity.
  if (n <= kExhaustiveAssociativityOrder) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (t[t[a][b]][c] != t[a][t[b][c]]) fail(ErrorKind::NotAssociative, detail::triple_text(a, b, c));
  } else {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (auto c : group->generators_)
          if (t[t[a][b]][c] != t[a][t[b][c]]) fail(ErrorKind::NotAssociative, detail::triple_text(a, b, c));
  }
  return group;
}

// ---------------------------------------------------------------------------
// Builtin families

namespace detail {

template <class Mul>
FiniteGroup::Table table_from(std::size_t n, Mul mul) {
  FiniteGroup::Table t(n, std::vector<FiniteGroup::element_type>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<FiniteGroup::element_type>(mul(i, j));
  return t;
}

inline void check_order(std::size_t order, const std::string& what) {
  if (order == 0 || order > kMaxFiniteOrder) {
    fail(ErrorKind::UnsupportedParameter, what + " has order outside 1.." + std::to_string(kMaxFiniteOrder));
  }
}

}  // namespace detail

/// Z/n with index k standing for g^k.
inline FiniteGroupPtr cyclic_group(std::size_t n) {
  detail::check_order(n, "cyclic(" + std::to_string(n) + ")");
  return make_finite_group(detail::table_from(n, [n](std::size_t i, std::size_t j) { return (i + j) % n; }),
                           "cyclic(" + std::to_string(n) + ")");
}

/// Symmetries of the n-gon, order 2n; index k + n*f stands for r^k s^f.
inline FiniteGroupPtr dihedral_group(std::size_t n) {
  if (n == 0) fail(ErrorKind::UnsupportedParameter, "dihedral(0)");
  detail::check_order(2 * n, "dihedral(" + std::to_string(n) + ")");
  auto mul = [n](std::size_t x, std::size_t y) {
    std::size_t a = x % n, f = x / n, b = y % n, g = y / n;
    std::size_t k = f ? (a + n - b) % n : (a + b) % n;
    return k + n * ((f + g) % 2);
  };
  return make_finite_group(detail::table_from(2 * n, mul), "dihedral(" + std::to_string(n) + ")");
}

/// S_n for n <= 5; permutations in lexicographic order of their one-line
/// notation, product (p q)(i) = p(q(i)).
inline FiniteGroupPtr symmetric_group(std::size_t n) {
  if (n == 0 || n > 5) fail(ErrorKind::UnsupportedParameter, "symmetric(n) requires 1 <= n <= 5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::string> labels;
  for (const auto& q : perms) {
    std::string s = "[";
    for (std::size_t i = 0; i < n; ++i) s += (i ? " " : "") + std::to_string(q[i]);
    labels.push_back(s + "]");
  }
  auto mul = [&](std::size_t x, std::size_t y) {
    std::vector<std::size_t> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = perms[x][perms[y][i]];
    return index_of(r);
  };
  return make_finite_group(detail::table_from(perms.size(), mul), "symmetric(" + std::to_string(n) + ")",
                           std::move(labels));
}

/// Quaternion group; indices 0..7 are 1,-1,i,-i,j,-j,k,-k.
inline FiniteGroupPtr quaternion8() {
  // unit index u in {0:1, 1:i, 2:j, 3:k}; product of units as (sign, unit)
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> units{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  auto mul = [](std::size_t x, std::size_t y) {
    int sx = (x % 2) ? -1 : 1, sy = (y % 2) ? -1 : 1;
    auto [s, u] = units[x / 2][y / 2];
    int sign = sx * sy * s;
    return static_cast<std::size_t>(2 * u + (sign < 0 ? 1 : 0));
  };
  return make_finite_group(detail::table_from(8, mul), "quaternion8",
                           {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

/// Unitriangular 3x3 matrices over Z/n; index a + n*b + n^2*c for (a,b,c),
/// product (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
inline FiniteGroupPtr heisenberg_mod(std::size_t n) {
  if (n == 0) fail(ErrorKind::UnsupportedParameter, "heisenberg_mod(0)");
  detail::check_order(n * n * n, "heisenberg_mod(" + std::to_string(n) + ")");
  auto mul = [n](std::size_t x, std::size_t y) {
    std::size_t a = x % n, b = (x / n) % n, c = x / (n * n);
    std::size_t a2 = y % n, b2 = (y / n) % n, c2 = y / (n * n);
    std::size_t ra = (a + a2) % n, rb = (b + b2) % n, rc = (c + c2 + a * b2) % n;
    return ra + n * rb + n * n * rc;
  };
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n * n * n; ++x) {
    labels.push_back("[" + std::to_string(x % n) + "," + std::to_string((x / n) % n) + "," +
                     std::to_string(x / (n * n)) + "]");
  }
  return make_finite_group(detail::table_from(n * n * n, mul), "heisenberg_mod(" + std::to_string(n) + ")",
                           std::move(labels));
}

}  // namespace twistder
