#pragma once

// Exact linear algebra for (sigma,tau)-derivations of finite groups.
//
// Unknowns are lambda^h_s for s in the generating set only. Every other
// lambda_g is an integer linear form in them, obtained by walking the Cayley
// graph from e:
//   lambda^h_{s g} = lambda^{h tau(g)^-1}_s + lambda^{sigma(s)^-1 h}_g.
// Imposing the same rule for every pair (s, g) makes the forms consistent,
// and by induction on word length D(g2 g1) satisfies Leibniz for all pairs.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "twistder/derivation.hpp"
#include "twistder/linalg.hpp"

namespace twistder {

inline constexpr std::size_t kDefaultSolverMaxOrder = 64;

struct DerivationSpace {
  std::size_t dimension = 0;
  // Reduced row echelon basis in (h, g)-lexicographic coordinates.
  std::vector<DerivationTable<FiniteGroup>> basis;
};

namespace detail {

using IntForm = std::map<std::size_t, std::int64_t>;

inline void add_form(IntForm& target, const IntForm& source, std::int64_t factor) {
  for (const auto& [col, c] : source) {
    auto& slot = target[col];
    slot += factor * c;
    if (slot == 0) target.erase(col);
  }
}

inline void require_solver_order(const FiniteGroup& grp, std::size_t max_order) {
  if (grp.order() > max_order) {
    fail(ErrorKind::GroupTooLarge,
         "order " + std::to_string(grp.order()) + " exceeds the solver limit " + std::to_string(max_order));
  }
}

}  // namespace detail

inline DerivationSpace derivation_space(const Endomorphism<FiniteGroup>& sigma, const Endomorphism<FiniteGroup>& tau,
                                        std::size_t max_order = kDefaultSolverMaxOrder) {
  using E = FiniteGroup::element_type;
  require_same_group(sigma.group(), tau.group(), "derivation_space");
  const auto& grp = *sigma.group();
  detail::require_solver_order(grp, max_order);
  const std::size_t n = grp.order();
  const auto& gens = grp.generators();
  const std::size_t k = gens.size();
  const E e = grp.identity();

  auto unknown = [&](std::size_t si, E h) { return si * n + h; };

  // lambda[g][h] as a form in the unknowns
  std::vector<std::vector<detail::IntForm>> lambda(n);
  lambda[e].assign(n, {});
  std::vector<E> queue{e};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    E g = queue[i];
    E tg_inv = grp.inverse(tau(g));
    for (std::size_t si = 0; si < k; ++si) {
      E s = gens[si];
      E sg = grp.multiply(s, g);
      if (!lambda[sg].empty()) continue;
      E ss_inv = grp.inverse(sigma(s));
      std::vector<detail::IntForm> col(n);
      for (E h = 0; h < n; ++h) {
        col[h][unknown(si, grp.multiply(h, tg_inv))] += 1;
        detail::add_form(col[h], lambda[g][grp.multiply(ss_inv, h)], 1);
      }
      lambda[sg] = std::move(col);
      queue.push_back(sg);
    }
  }

  linalg::RowEchelon<mpq_class> ech(k * n);
  for (std::size_t si = 0; si < k; ++si) {
    E s = gens[si];
    E ss_inv = grp.inverse(sigma(s));
    for (E g = 0; g < n; ++g) {
      E sg = grp.multiply(s, g);
      E tg_inv = grp.inverse(tau(g));
      for (E h = 0; h < n; ++h) {
        detail::IntForm row = lambda[sg][h];
        detail::add_form(row, {{unknown(si, grp.multiply(h, tg_inv)), 1}}, -1);
        detail::add_form(row, lambda[g][grp.multiply(ss_inv, h)], -1);
        if (row.empty()) continue;
        linalg::SparseVector<mpq_class> v;
        for (const auto& [col, c] : row) v.emplace(col, mpq_class(static_cast<long>(c)));
        ech.insert(std::move(v));
      }
    }
  }

  // expand each kernel vector to full coordinates (h, g) -> h * n + g
  std::vector<linalg::SparseVector<mpq_class>> full;
  for (const auto& x : ech.nullspace()) {
    linalg::SparseVector<mpq_class> row;
    for (E g = 0; g < n; ++g) {
      for (E h = 0; h < n; ++h) {
        mpq_class value = 0;
        for (const auto& [col, c] : lambda[g][h]) {
          auto it = x.find(col);
          if (it != x.end()) value += it->second * static_cast<long>(c);
        }
        if (!linalg::is_zero(value)) row.emplace(h * n + g, value);
      }
    }
    full.push_back(std::move(row));
  }

  DerivationSpace space;
  for (const auto& row : linalg::reduced_basis(full, n * n)) {
    DerivationTable<FiniteGroup>::Values values;
    for (E g = 0; g < n; ++g) values.emplace(g, AlgebraElement<FiniteGroup>(sigma.group()));
    for (const auto& [idx, c] : row) {
      values.at(static_cast<E>(idx % n)).add_term(static_cast<E>(idx / n), GaussianRational(c));
    }
    space.basis.emplace_back(sigma, tau, std::move(values));
  }
  space.dimension = space.basis.size();
  return space;
}

struct InnerSpace {
  std::size_t dimension = 0;         // dim Inn = |G| - dim ker
  std::size_t kernel_dimension = 0;  // p with p tau(g) = sigma(g) p for all g
};

inline InnerSpace inner_space(const Endomorphism<FiniteGroup>& sigma, const Endomorphism<FiniteGroup>& tau,
                              std::size_t max_order = kDefaultSolverMaxOrder) {
  using E = FiniteGroup::element_type;
  require_same_group(sigma.group(), tau.group(), "inner_space");
  const auto& grp = *sigma.group();
  detail::require_solver_order(grp, max_order);
  const std::size_t n = grp.order();
  // coefficient of x in p tau(s) - sigma(s) p is p_{x tau(s)^-1} - p_{sigma(s)^-1 x};
  // checking generators suffices since the condition is closed under products
  linalg::RowEchelon<mpq_class> ech(n);
  for (auto s : grp.generators()) {
    E t_inv = grp.inverse(tau(s)), s_inv = grp.inverse(sigma(s));
    for (E x = 0; x < n; ++x) {
      E a = grp.multiply(x, t_inv), b = grp.multiply(s_inv, x);
      if (a == b) continue;
      ech.insert({{a, mpq_class(1)}, {b, mpq_class(-1)}});
    }
  }
  return {ech.rank(), ech.nullity()};
}

struct InnerResult {
  bool inner = false;
  std::optional<AlgebraElement<FiniteGroup>> witness;  // p with delta_p = D
  std::size_t kernel_dimension = 0;
};

/// Solves p_{x tau(g)^-1} - p_{sigma(g)^-1 x} = lambda^x_g over Q(i) for all
/// g, x and confirms the witness by recomputing delta_p.
inline InnerResult is_inner(const DerivationTable<FiniteGroup>& D, std::size_t max_order = kDefaultSolverMaxOrder) {
  using E = FiniteGroup::element_type;
  const auto& grp = *D.group();
  detail::require_solver_order(grp, max_order);
  const std::size_t n = grp.order();
  const auto& sigma = D.sigma();
  const auto& tau = D.tau();
  linalg::LinearSystem<GaussianRational> system(n);
  for (E g = 0; g < n; ++g) {
    const auto& dg = D.at(g);
    E t_inv = grp.inverse(tau(g)), s_inv = grp.inverse(sigma(g));
    for (E x = 0; x < n; ++x) {
      E a = grp.multiply(x, t_inv), b = grp.multiply(s_inv, x);
      linalg::SparseVector<GaussianRational> lhs;
      if (a != b) lhs = {{a, GaussianRational(1)}, {b, GaussianRational(-1)}};
      system.add_equation(std::move(lhs), dg.coefficient(x));
    }
  }
  auto solution = system.solve();
  InnerResult result;
  if (!solution) {
    result.kernel_dimension = inner_space(sigma, tau, max_order).kernel_dimension;
    return result;
  }
  result.kernel_dimension = solution->kernel_dimension;
  AlgebraElement<FiniteGroup> p(D.group());
  for (const auto& [x, c] : solution->particular) p.add_term(static_cast<E>(x), c);
  if (!(inner_derivation(sigma, tau, p) == D)) {
    // only reachable if D is not a derivation on all of G
    fail(ErrorKind::NotADerivation, "solved potential does not reproduce D");
  }
  result.inner = true;
  result.witness = std::move(p);
  return result;
}

}  // namespace twistder
