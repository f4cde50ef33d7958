#pragma once

// (sigma,tau)-derivations D(ab) = D(a) tau(b) + sigma(a) D(b) of Q(i)[G],
// stored by their values on group elements:
//   D(g) = sum_h lambda^h_g h.
// In coordinates the Leibniz rule for g2, g1 reads
//   lambda^h_{g2 g1} = lambda^{h tau(g1^-1)}_{g2} + lambda^{sigma(g2^-1) h}_{g1}.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistder/algebra.hpp"
#include "twistder/endomorphism.hpp"
#include "twistder/groupoid.hpp"

namespace twistder {

template <DiscreteGroup G>
class DerivationTable {
 public:
  using E = Elem<G>;
  using Values = std::map<E, AlgebraElement<G>, typename G::element_less>;

  DerivationTable(Endomorphism<G> sigma, Endomorphism<G> tau, Values values, bool generator_defined = false)
      : sigma_(std::move(sigma)), tau_(std::move(tau)), values_(std::move(values)),
        generator_defined_(generator_defined) {
    require_same_group(sigma_.group(), tau_.group(), "derivation");
    for (const auto& [g, f] : values_) require_same_group(sigma_.group(), f.group(), "derivation");
  }

  /// Zero derivation on the given elements.
  static DerivationTable zero(Endomorphism<G> sigma, Endomorphism<G> tau, const std::vector<E>& domain) {
    Values values;
    for (const auto& g : domain) values.emplace(g, AlgebraElement<G>(sigma.group()));
    return DerivationTable(std::move(sigma), std::move(tau), std::move(values));
  }

  const GroupPtr<G>& group() const { return sigma_.group(); }
  const Endomorphism<G>& sigma() const { return sigma_; }
  const Endomorphism<G>& tau() const { return tau_; }
  const Values& values() const { return values_; }

  // True when only generator values are stored and everything else is
  // obtained through extend_to_word / extend_to_ball.
  bool generator_defined() const { return generator_defined_; }

  bool defines(const E& g) const { return values_.count(g) != 0; }

  const AlgebraElement<G>& at(const E& g) const {
    auto it = values_.find(g);
    if (it == values_.end()) fail(ErrorKind::ScopeExceeded, "D is not defined at " + element_string(g));
    return it->second;
  }

  /// lambda^h_g
  GaussianRational coefficient(const E& h, const E& g) const { return at(g).coefficient(h); }

  std::vector<E> domain() const {
    std::vector<E> out;
    for (const auto& [g, f] : values_) out.push_back(g);
    return out;
  }

  bool is_zero() const {
    for (const auto& [g, f] : values_)
      if (!f.is_zero()) return false;
    return true;
  }

  friend bool operator==(const DerivationTable& a, const DerivationTable& b) {
    return a.sigma_ == b.sigma_ && a.tau_ == b.tau_ && a.values_ == b.values_;
  }

  DerivationTable& operator+=(const DerivationTable& o) {
    for (const auto& [g, f] : o.values_) {
      auto [it, inserted] = values_.try_emplace(g, f);
      if (!inserted) it->second += f;
    }
    return *this;
  }

 private:
  Endomorphism<G> sigma_;
  Endomorphism<G> tau_;
  Values values_;
  bool generator_defined_ = false;
};

// ---------------------------------------------------------------------------
// Leibniz check

template <DiscreteGroup G>
struct LeibnizViolation {
  Elem<G> g2;
  Elem<G> g1;
  AlgebraElement<G> lhs;  // D(g2 g1)
  AlgebraElement<G> rhs;  // D(g2) tau(g1) + sigma(g2) D(g1)
};

template <DiscreteGroup G>
struct LeibnizResult {
  std::vector<LeibnizViolation<G>> violations;
  std::size_t pairs_checked = 0;
  bool ok() const { return violations.empty(); }
};

/// Compares D(g2 g1) with D(g2) tau(g1) + sigma(g2) D(g1) for all g2, g1 in
/// `elements`. Throws ScopeExceeded when a product leaves the domain of D.
template <DiscreteGroup G>
LeibnizResult<G> check_leibniz(const DerivationTable<G>& D, const std::vector<Elem<G>>& elements,
                               std::size_t max_violations = 16) {
  const auto& grp = *D.group();
  const auto& sigma = D.sigma();
  const auto& tau = D.tau();
  LeibnizResult<G> result;
  for (const auto& g2 : elements) {
    const auto& d2 = D.at(g2);
    auto s2 = sigma(g2);
    for (const auto& g1 : elements) {
      const auto& lhs = D.at(grp.multiply(g2, g1));
      auto rhs = d2.times(tau(g1)) + D.at(g1).left_times(s2);
      ++result.pairs_checked;
      if (lhs != rhs) {
        result.violations.push_back({g2, g1, lhs, rhs});
        if (result.violations.size() >= max_violations) return result;
      }
    }
  }
  return result;
}

/// All |G|^2 pairs of a finite group.
inline LeibnizResult<FiniteGroup> check_leibniz(const DerivationTable<FiniteGroup>& D) {
  return check_leibniz(D, D.group()->elements());
}

// ---------------------------------------------------------------------------
// Constructions

/// delta_p(x) = p tau(x) - sigma(x) p on the given elements.
template <DiscreteGroup G>
DerivationTable<G> inner_derivation(const Endomorphism<G>& sigma, const Endomorphism<G>& tau,
                                    const AlgebraElement<G>& p, const std::vector<Elem<G>>& domain) {
  require_same_group(sigma.group(), p.group(), "inner_derivation");
  typename DerivationTable<G>::Values values;
  for (const auto& g : domain) values.emplace(g, p.times(tau(g)) - p.left_times(sigma(g)));
  return DerivationTable<G>(sigma, tau, std::move(values));
}

inline DerivationTable<FiniteGroup> inner_derivation(const Endomorphism<FiniteGroup>& sigma,
                                                     const Endomorphism<FiniteGroup>& tau,
                                                     const AlgebraElement<FiniteGroup>& p) {
  return inner_derivation(sigma, tau, p, sigma.group()->elements());
}

/// Finitely supported function on objects.
template <DiscreteGroup G>
class Potential {
 public:
  using E = Elem<G>;
  using Values = std::map<E, GaussianRational, typename G::element_less>;

  Potential() = default;
  explicit Potential(const Values& values) {
    for (const auto& [g, c] : values) add(g, c);
  }

  static Potential indicator(const E& g) {
    Potential p;
    p.add(g, 1);
    return p;
  }

  GaussianRational operator()(const E& g) const {
    auto it = values_.find(g);
    return it == values_.end() ? GaussianRational{} : it->second;
  }

  void add(const E& g, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = values_.try_emplace(g, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) values_.erase(it);
  }

  const Values& values() const { return values_; }

 private:
  Values values_;
};

/// D(g) = sum_h (P(h tau(g^-1)) - P(sigma(g^-1) h)) h, evaluated on the finite
/// set of h where either term can be nonzero.
template <DiscreteGroup G>
DerivationTable<G> quasi_inner_from_potential(const Endomorphism<G>& sigma, const Endomorphism<G>& tau,
                                              const Potential<G>& P, const Scope<G>& scope) {
  const auto& grp = *sigma.group();
  for (const auto& [p, c] : P.values()) {
    if (!scope.contains(p)) fail(ErrorKind::ScopeExceeded, "potential support " + element_string(p) + " is outside the scope");
  }
  typename DerivationTable<G>::Values values;
  for (const auto& g : scope.elements()) {
    auto tg = tau(g), sg = sigma(g);
    auto tg_inv = grp.inverse(tg), sg_inv = grp.inverse(sg);
    ElementSet<G> candidates;
    for (const auto& [p, c] : P.values()) {
      candidates.insert(grp.multiply(p, tg));
      candidates.insert(grp.multiply(sg, p));
    }
    AlgebraElement<G> d(sigma.group());
    for (const auto& h : candidates) d.add_term(h, P(grp.multiply(h, tg_inv)) - P(grp.multiply(sg_inv, h)));
    values.emplace(g, std::move(d));
  }
  return DerivationTable<G>(sigma, tau, std::move(values));
}

/// Homomorphism phi : G -> (C, +) fixed by its generator values.
template <DiscreteGroup G>
class AdditiveCharacter {
 public:
  using E = Elem<G>;

  const std::vector<GaussianRational>& generator_values() const { return values_; }

  GaussianRational operator()(const E& g) const {
    if constexpr (G::is_finite) {
      return table_[g];
    } else {
      // phi(a, b, c) = mu a + nu b
      return values_[0] * GaussianRational(static_cast<long>(g.a)) +
             values_[1] * GaussianRational(static_cast<long>(g.b));
    }
  }

  bool is_zero() const {
    for (const auto& v : values_)
      if (!v.is_zero()) return false;
    return true;
  }

  template <DiscreteGroup H>
  friend AdditiveCharacter<H> make_additive_character(GroupPtr<H> group, std::vector<GaussianRational> values);

 private:
  GroupPtr<G> group_;
  std::vector<GaussianRational> values_;
  std::vector<GaussianRational> table_;  // finite groups only
};

/// Validates that the generator values extend to a homomorphism. On a finite
/// group only the zero map survives.
template <DiscreteGroup G>
AdditiveCharacter<G> make_additive_character(GroupPtr<G> group, std::vector<GaussianRational> values) {
  const auto& grp = *group;
  if (values.size() != grp.generators().size()) {
    fail(ErrorKind::SpecError, "one additive-character value per generator is required");
  }
  AdditiveCharacter<G> phi;
  phi.group_ = group;
  phi.values_ = std::move(values);
  if constexpr (G::is_finite) {
    const auto& gens = grp.generators();
    const std::size_t n = grp.order();
    std::vector<GaussianRational> table(n);
    std::vector<char> known(n, 0);
    known[grp.identity()] = 1;
    std::vector<Elem<G>> queue{grp.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        auto h = grp.multiply(gens[k], queue[i]);
        if (known[h]) continue;
        known[h] = 1;
        table[h] = phi.values_[k] + table[queue[i]];
        queue.push_back(h);
      }
    }
    for (Elem<G> g = 0; g < n; ++g)
      for (Elem<G> h = 0; h < n; ++h)
        if (table[grp.multiply(g, h)] != table[g] + table[h]) {
          fail(ErrorKind::NotAHomomorphismToC,
               "phi(" + std::to_string(g) + "*" + std::to_string(h) + ") != phi(" + std::to_string(g) + ") + phi(" +
                   std::to_string(h) + ")");
        }
    phi.table_ = std::move(table);
  }
  // Heisenberg: commutators map to zero under any additive extension, so
  // both defining relations hold for every (mu, nu).
  return phi;
}

/// D(g) = phi(g) sigma(g) a for a (sigma,tau)-central element a. Finite groups
/// get a total table; the Heisenberg group gets generator values only.
template <DiscreteGroup G>
DerivationTable<G> central_derivation(const Endomorphism<G>& sigma, const Endomorphism<G>& tau, const Elem<G>& a,
                                      const AdditiveCharacter<G>& phi) {
  GroupoidView<G> view(sigma, tau, default_scope(*sigma.group(), 0));
  if (auto v = view.centrality_witness(a)) {
    fail(ErrorKind::NotCentralElement,
         element_string(a) + " tau(v) != sigma(v) " + element_string(a) + " for v = " + element_string(*v));
  }
  const auto& grp = *sigma.group();
  std::vector<Elem<G>> domain;
  if constexpr (G::is_finite) domain = grp.elements();
  else domain = grp.generators();
  typename DerivationTable<G>::Values values;
  for (const auto& g : domain) {
    values.emplace(g, AlgebraElement<G>::basis(sigma.group(), grp.multiply(sigma(g), a), phi(g)));
  }
  return DerivationTable<G>(sigma, tau, std::move(values), !G::is_finite);
}

// ---------------------------------------------------------------------------
// Words and extension from generators

struct Letter {
  std::size_t generator = 0;
  bool inverse = false;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

template <DiscreteGroup G>
Elem<G> evaluate_word(const G& group, const Word& word) {
  auto g = group.identity();
  for (const auto& l : word) {
    auto s = group.generators().at(l.generator);
    g = group.multiply(g, l.inverse ? group.inverse(s) : s);
  }
  return g;
}

namespace detail {

// D on a letter; D(s^-1) = -sigma(s^-1) D(s) tau(s^-1) follows from D(e) = 0.
template <DiscreteGroup G>
AlgebraElement<G> letter_value(const DerivationTable<G>& D, const Letter& l) {
  const auto& grp = *D.group();
  auto s = grp.generators().at(l.generator);
  const auto& ds = D.at(s);
  if (!l.inverse) return ds;
  auto s_inv = grp.inverse(s);
  return -(ds.times(D.tau()(s_inv)).left_times(D.sigma()(s_inv)));
}

template <DiscreteGroup G>
AlgebraElement<G> evaluate_on_word(const DerivationTable<G>& D, const Word& word) {
  const auto& grp = *D.group();
  // D(l w) = D(l) tau(w) + sigma(l) D(w), accumulated from the right.
  AlgebraElement<G> acc(D.group());
  auto suffix = grp.identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto s = grp.generators().at(it->generator);
    auto letter = it->inverse ? grp.inverse(s) : s;
    acc = letter_value(D, *it).times(D.tau()(suffix)) + acc.left_times(D.sigma()(letter));
    suffix = grp.multiply(letter, suffix);
  }
  return acc;
}

}  // namespace detail

/// Defining relators [x,[x,y]] and [y,[x,y]] of the Heisenberg group.
inline std::vector<Word> heisenberg_relators() {
  const Letter x{0, false}, X{0, true}, y{1, false}, Y{1, true};
  // [x,y] = x y X Y, [x,y]^-1 = y x Y X
  Word rel1{x, x, y, X, Y, X, y, x, Y, X};
  Word rel2{y, x, y, X, Y, Y, y, x, Y, X};
  return {rel1, rel2};
}

/// Throws WellDefinednessError unless D vanishes on every defining relator,
/// which is exactly when the generator values extend to the group.
inline void verify_well_defined(const DerivationTable<HeisenbergGroup>& D) {
  const auto relators = heisenberg_relators();
  const char* names[] = {"[x,[x,y]]", "[y,[x,y]]"};
  for (std::size_t i = 0; i < relators.size(); ++i) {
    auto value = detail::evaluate_on_word(D, relators[i]);
    if (!value.is_zero()) {
      fail(ErrorKind::WellDefinednessError, std::string("D") + names[i] + " = " + value.to_string() + " != 0");
    }
  }
}

/// D evaluated along a word in the generators and their inverses.
template <DiscreteGroup G>
AlgebraElement<G> extend_to_word(const DerivationTable<G>& D, const Word& word) {
  if constexpr (!G::is_finite) verify_well_defined(D);
  return detail::evaluate_on_word(D, word);
}

/// Total table on ball(radius), built breadth-first from the generator values
/// with memoization on canonical elements.
inline DerivationTable<HeisenbergGroup> extend_to_ball(const DerivationTable<HeisenbergGroup>& D, std::size_t radius) {
  verify_well_defined(D);
  const auto& grp = *D.group();
  std::vector<Letter> letters;
  for (std::size_t k = 0; k < grp.generators().size(); ++k) {
    letters.push_back({k, false});
    letters.push_back({k, true});
  }
  std::vector<std::pair<Triple, AlgebraElement<HeisenbergGroup>>> letter_values;
  for (const auto& l : letters) {
    auto s = grp.generators()[l.generator];
    letter_values.emplace_back(l.inverse ? grp.inverse(s) : s, detail::letter_value(D, l));
  }
  DerivationTable<HeisenbergGroup>::Values values;
  values.emplace(grp.identity(), AlgebraElement<HeisenbergGroup>(D.group()));
  std::vector<Triple> frontier{grp.identity()};
  for (std::size_t r = 0; r < radius; ++r) {
    std::vector<Triple> next;
    for (const auto& g : frontier) {
      for (const auto& [s, ds] : letter_values) {
        auto gs = grp.multiply(g, s);
        if (values.count(gs)) continue;
        // D(g s) = D(g) tau(s) + sigma(g) D(s)
        auto value = values.at(g).times(D.tau()(s)) + ds.left_times(D.sigma()(g));
        values.emplace(gs, std::move(value));
        next.push_back(gs);
      }
    }
    frontier = std::move(next);
  }
  return DerivationTable<HeisenbergGroup>(D.sigma(), D.tau(), std::move(values));
}

// ---------------------------------------------------------------------------
// Characters <-> derivations

/// Psi(D)(h, g) = lambda^h_g, with additivity verified on the view's scope.
template <DiscreteGroup G>
Character<G> character_from_derivation(const GroupoidView<G>& view, const DerivationTable<G>& D) {
  typename Character<G>::Values values;
  for (const auto& g : view.scope().elements()) {
    for (const auto& [h, c] : D.at(g).terms()) values.emplace(Morphism<Elem<G>>{h, g}, c);
  }
  Character<G> chi(std::move(values));
  if (auto bad = find_additivity_violation(view, chi)) {
    fail(ErrorKind::NotADerivation, "chi(" + morphism_string(bad->first) + " then " + morphism_string(bad->second) +
                                        ") != chi(first) + chi(second)");
  }
  return chi;
}

/// Psi^-1(chi)(g) = sum_h chi(h, g) h on the view's scope. Stored characters
/// are sparse, hence locally finite; every column must lie in the scope.
template <DiscreteGroup G>
DerivationTable<G> derivation_from_character(const GroupoidView<G>& view, const Character<G>& chi) {
  typename DerivationTable<G>::Values values;
  for (const auto& g : view.scope().elements()) values.emplace(g, AlgebraElement<G>(view.group()));
  for (const auto& [m, c] : chi.values()) {
    auto it = values.find(m.v);
    if (it == values.end()) {
      fail(ErrorKind::NotLocallyFinite, "column " + element_string(m.v) + " lies outside the scope");
    }
    it->second.add_term(m.u, c);
  }
  return DerivationTable<G>(view.sigma(), view.tau(), std::move(values));
}

// ---------------------------------------------------------------------------
// Quasi-innerness

template <DiscreteGroup G>
struct QuasiInnerResult {
  bool quasi_inner = true;
  std::optional<Morphism<Elem<G>>> loop_witness;  // (h, g) with lambda^h_g != 0
  GaussianRational value;
};

/// lambda^h_g = 0 on every loop (h, g), i.e. sigma(g^-1) h = h tau(g^-1),
/// over the domain of D.
template <DiscreteGroup G>
QuasiInnerResult<G> is_quasi_inner(const DerivationTable<G>& D) {
  const auto& grp = *D.group();
  for (const auto& [g, f] : D.values()) {
    auto g_inv = grp.inverse(g);
    auto s = D.sigma()(g_inv), t = D.tau()(g_inv);
    for (const auto& [h, c] : f.terms()) {
      if (grp.multiply(s, h) == grp.multiply(h, t)) return {false, Morphism<Elem<G>>{h, g}, c};
    }
  }
  return {};
}

}  // namespace twistder
