#pragma once

// The groupoid attached to (G, sigma, tau).
//
// Objects are the group elements. A morphism is a pair (u, v) with
//   source = sigma(v^-1) u,   target = u tau(v^-1),
// so (u, v) : a -> b exactly when u = sigma(v) a and b = sigma(v) a tau(v^-1).
// Composition of phi = (u1, v1) : a -> b followed by psi = (u2, v2) : b -> c
// is (u2 tau(v1), v2 v1) : a -> c. The connected components are the
// (sigma,tau)-conjugacy classes [a] = { sigma(g^-1) a tau(g) }.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "twistder/endomorphism.hpp"
#include "twistder/gaussian_rational.hpp"
#include "twistder/group.hpp"

namespace twistder {

template <class E>
struct Morphism {
  E u;
  E v;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

template <DiscreteGroup G>
struct MorphismLess {
  bool operator()(const Morphism<Elem<G>>& x, const Morphism<Elem<G>>& y) const {
    typename G::element_less less;
    if (less(x.u, y.u)) return true;
    if (less(y.u, x.u)) return false;
    return less(x.v, y.v);
  }
};

template <class E>
std::string morphism_string(const Morphism<E>& m) {
  return "(" + element_string(m.u) + ", " + element_string(m.v) + ")";
}

/// Subgroup of the Heisenberg group cut out by linear conditions
/// alpha*a + beta*b = 0 on the (a, b) entries; c is unconstrained.
struct HeisenbergSubgroup {
  std::vector<std::array<std::int64_t, 2>> conditions;

  bool contains(const Triple& t) const {
    return std::all_of(conditions.begin(), conditions.end(),
                       [&](const auto& c) { return c[0] * t.a + c[1] * t.b == 0; });
  }

  // Rank of the lattice of conditions (0, 1 or 2).
  std::size_t condition_rank() const {
    std::vector<std::array<std::int64_t, 2>> nz;
    for (const auto& c : conditions)
      if (c[0] != 0 || c[1] != 0) nz.push_back(c);
    if (nz.empty()) return 0;
    for (const auto& c : nz)
      if (c[0] * nz[0][1] - c[1] * nz[0][0] != 0) return 2;
    return 1;
  }

  // Torsion-free rank of the abelianization: the whole group and the
  // subgroups {(t*p, t*q, c)} have rank 2, the center Z has rank 1.
  std::size_t abelianization_rank() const { return condition_rank() == 2 ? 1 : 2; }

  std::string to_string() const {
    switch (condition_rank()) {
      case 0: return "{(a,b,c)} = whole group";
      case 2: return "{(0,0,c) : c in Z}";
      default: break;
    }
    for (const auto& c : conditions) {
      if (c[0] != 0 || c[1] != 0) {
        return "{(a,b,c) : " + std::to_string(c[0]) + "*a + " + std::to_string(c[1]) + "*b = 0}";
      }
    }
    return {};
  }
};

template <DiscreteGroup G>
class GroupoidView {
 public:
  using E = Elem<G>;
  using M = Morphism<E>;

  struct ClassResult {
    std::vector<E> elements;
    bool truncated = false;
  };

  GroupoidView(Endomorphism<G> sigma, Endomorphism<G> tau, Scope<G> scope)
      : group_(sigma.group()), sigma_(std::move(sigma)), tau_(std::move(tau)), scope_(std::move(scope)) {
    require_same_group(sigma_.group(), tau_.group(), "groupoid");
  }

  const GroupPtr<G>& group() const { return group_; }
  const Endomorphism<G>& sigma() const { return sigma_; }
  const Endomorphism<G>& tau() const { return tau_; }
  const Scope<G>& scope() const { return scope_; }

  E source(const M& m) const { return mul(sigma_(inv(m.v)), m.u); }
  E target(const M& m) const { return mul(m.u, tau_(inv(m.v))); }

  /// The morphism (sigma(v) a, v) leaving a.
  M morphism_from(const E& a, const E& v) const { return {mul(sigma_(v), a), v}; }

  M identity_at(const E& a) const { return {a, group_->identity()}; }

  bool is_loop(const M& m) const { return source(m) == target(m); }

  /// `first` : a -> b followed by `second` : b -> c.
  M compose(const M& first, const M& second) const {
    if (target(first) != source(second)) {
      fail(ErrorKind::NotComposable, "target of " + morphism_string(first) + " is " +
                                         element_string(target(first)) + " but source of " +
                                         morphism_string(second) + " is " + element_string(source(second)));
    }
    return {mul(second.u, tau_(first.v)), mul(second.v, first.v)};
  }

  /// Function-composition order: `later` o `earlier`.
  M after(const M& later, const M& earlier) const { return compose(earlier, later); }

  /// Action g . a = sigma(g) a tau(g^-1); orbits are the conjugacy classes.
  E act(const E& g, const E& a) const { return mul(mul(sigma_(g), a), tau_(inv(g))); }

  /// a tau(v) = sigma(v) a for every v (finite: exhaustive; infinite: on the
  /// generators, which suffices because the condition is multiplicative in v).
  bool is_sigma_tau_central(const E& a) const {
    if constexpr (G::is_finite) {
      for (auto v : group_->elements())
        if (mul(a, tau_(v)) != mul(sigma_(v), a)) return false;
      return true;
    } else {
      for (const auto& v : group_->generators())
        if (mul(a, tau_(v)) != mul(sigma_(v), a)) return false;
      return true;
    }
  }

  std::optional<E> centrality_witness(const E& a) const {
    std::vector<E> vs;
    if constexpr (G::is_finite) vs = group_->elements();
    else vs = group_->generators();
    for (const auto& v : vs)
      if (mul(a, tau_(v)) != mul(sigma_(v), a)) return v;
    return std::nullopt;
  }

  /// [a] = { sigma(g^-1) a tau(g) }. On the infinite group the enumeration
  /// runs over the scope ball and is marked truncated unless a is central.
  ClassResult conjugacy_class(const E& a) const {
    require_member(*group_, a);
    ClassResult out;
    if constexpr (!G::is_finite) {
      if (is_sigma_tau_central(a)) {
        out.elements = {a};
        return out;
      }
      out.truncated = true;
    }
    ElementSet<G> seen;
    for (const auto& g : scope_.elements()) seen.insert(mul(mul(sigma_(inv(g)), a), tau_(g)));
    out.elements.assign(seen.begin(), seen.end());
    return out;
  }

  /// Partition of the finite group into classes, each sorted, ordered by
  /// least element.
  std::vector<std::vector<E>> components() const requires(G::is_finite) {
    const std::size_t n = group_->order();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<E>> out;
    for (E a = 0; a < n; ++a) {
      if (seen[a]) continue;
      auto cls = conjugacy_class(a).elements;
      for (auto x : cls) seen[x] = 1;
      out.push_back(std::move(cls));
    }
    return out;
  }

  /// Component index of every element.
  std::vector<std::size_t> component_index() const requires(G::is_finite) {
    std::vector<std::size_t> idx(group_->order());
    auto comps = components();
    for (std::size_t k = 0; k < comps.size(); ++k)
      for (auto x : comps[k]) idx[x] = k;
    return idx;
  }

  /// Z(u) = { z : sigma(z) u = u tau(z) }, the stabilizer of u.
  std::vector<E> centralizer(const E& u) const requires(G::is_finite) {
    require_member(*group_, u);
    std::vector<E> out;
    for (auto z : group_->elements())
      if (mul(sigma_(z), u) == mul(u, tau_(z))) out.push_back(z);
    return out;
  }

  /// Closed form for inner sigma = sigma_x, tau = tau_y:
  /// z in Z(u) iff z_a (u_b - x_b + y_b) + z_b (x_a - y_a - u_a) = 0.
  HeisenbergSubgroup centralizer(const E& u) const requires(!G::is_finite) {
    auto [x, y] = inner_witnesses();
    return {{{{u.b - x.b + y.b, x.a - y.a - u.a}}}};
  }

  /// Z = { z : sigma(z) p = p tau(z) for all p }.
  std::vector<E> center() const requires(G::is_finite) {
    std::vector<E> out;
    for (auto z : group_->elements()) {
      bool ok = true;
      for (auto p : group_->elements()) {
        if (mul(sigma_(z), p) != mul(p, tau_(z))) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(z);
    }
    return out;
  }

  /// Inner sigma, tau on the Heisenberg group: the condition above must hold
  /// for every u, forcing z_a = z_b = 0.
  HeisenbergSubgroup center() const requires(!G::is_finite) {
    inner_witnesses();
    return {{{{1, 0}}, {{0, 1}}}};
  }

  /// Hom(a, b) = { (u, v) : sigma(v^-1) u = a, u tau(v^-1) = b }, by v.
  std::vector<M> hom_set(const E& a, const E& b) const requires(G::is_finite) {
    std::vector<M> out;
    for (auto v : group_->elements()) {
      M m = morphism_from(a, v);
      if (target(m) == b) out.push_back(m);
    }
    return out;
  }

 private:
  E mul(const E& x, const E& y) const { return group_->multiply(x, y); }
  E inv(const E& x) const { return group_->inverse(x); }

  std::pair<E, E> inner_witnesses() const {
    if (!sigma_.inner_witness() || !tau_.inner_witness()) {
      fail(ErrorKind::NotSupportedForScope,
           "closed-form centralizers on heisenberg_Z need inner sigma and tau");
    }
    return {*sigma_.inner_witness(), *tau_.inner_witness()};
  }

  GroupPtr<G> group_;
  Endomorphism<G> sigma_;
  Endomorphism<G> tau_;
  Scope<G> scope_;
};

template <DiscreteGroup G>
GroupoidView<G> make_groupoid(const Endomorphism<G>& sigma, const Endomorphism<G>& tau, std::size_t radius = 4) {
  return GroupoidView<G>(sigma, tau, default_scope(*sigma.group(), radius));
}

/// Sparse additive function on morphisms.
template <DiscreteGroup G>
class Character {
 public:
  using E = Elem<G>;
  using M = Morphism<E>;
  using Values = std::map<M, GaussianRational, MorphismLess<G>>;

  Character() = default;
  explicit Character(Values values) : values_(std::move(values)) {}

  GaussianRational operator()(const M& m) const {
    auto it = values_.find(m);
    return it == values_.end() ? GaussianRational{} : it->second;
  }

  const Values& values() const { return values_; }
  bool is_zero() const { return values_.empty(); }

  // Column v: the nonzero values chi(u, v).
  std::vector<std::pair<E, GaussianRational>> column(const E& v) const {
    std::vector<std::pair<E, GaussianRational>> out;
    for (const auto& [m, c] : values_)
      if (m.v == v) out.emplace_back(m.u, c);
    return out;
  }

  friend bool operator==(const Character& a, const Character& b) { return a.values_ == b.values_; }

 private:
  Values values_;
};

/// First composable pair (phi, psi) with chi(phi then psi) != chi(phi) + chi(psi).
/// Finite groups: exhaustive over all |G|^3 composable pairs. Infinite scope:
/// pairs of columns v1, v2 with v2 v1 in scope, at every object where one of
/// the three values can be nonzero.
template <DiscreteGroup G>
std::optional<std::pair<Morphism<Elem<G>>, Morphism<Elem<G>>>> find_additivity_violation(
    const GroupoidView<G>& view, const Character<G>& chi) {
  using E = Elem<G>;
  using M = Morphism<E>;
  const auto& grp = *view.group();
  if constexpr (G::is_finite) {
    for (auto a : grp.elements()) {
      for (auto v1 : grp.elements()) {
        M phi = view.morphism_from(a, v1);
        E b = view.target(phi);
        auto chi_phi = chi(phi);
        for (auto v2 : grp.elements()) {
          M psi = view.morphism_from(b, v2);
          if (chi(view.compose(phi, psi)) != chi_phi + chi(psi)) return std::make_pair(phi, psi);
        }
      }
    }
    return std::nullopt;
  } else {
    const auto& scope = view.scope();
    std::map<E, std::vector<E>, typename G::element_less> columns;
    for (const auto& [m, c] : chi.values()) columns[m.v].push_back(m.u);
    auto col = [&](const E& v) -> const std::vector<E>& {
      static const std::vector<E> empty;
      auto it = columns.find(v);
      return it == columns.end() ? empty : it->second;
    };
    const auto& sigma = view.sigma();
    const auto& tau = view.tau();
    for (const auto& v1 : scope.elements()) {
      for (const auto& v2 : scope.elements()) {
        E v21 = grp.multiply(v2, v1);
        if (!scope.contains(v21)) continue;
        ElementSet<G> hs;
        for (const auto& h : col(v21)) hs.insert(h);
        for (const auto& u1 : col(v1)) hs.insert(grp.multiply(sigma(v2), u1));
        for (const auto& u2 : col(v2)) hs.insert(grp.multiply(u2, tau(v1)));
        for (const auto& h : hs) {
          M phi{grp.multiply(sigma(grp.inverse(v2)), h), v1};
          M psi{grp.multiply(h, tau(grp.inverse(v1))), v2};
          if (chi(view.compose(phi, psi)) != chi(phi) + chi(psi)) return std::make_pair(phi, psi);
        }
      }
    }
    return std::nullopt;
  }
}

}  // namespace twistder
