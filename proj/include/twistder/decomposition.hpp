#pragma once

// Structural classifiers for (G, sigma, tau) and the finite-group
// decomposition report comparing the solved derivation space with the
// inner part plus the centralizer character spaces.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistder/derivation.hpp"
#include "twistder/solver.hpp"

namespace twistder {

// ---------------------------------------------------------------------------
// Abelian / FC

template <DiscreteGroup G>
bool is_sigma_tau_abelian(const Endomorphism<G>& sigma, const Endomorphism<G>& tau) {
  require_same_group(sigma.group(), tau.group(), "is_sigma_tau_abelian");
  const auto& grp = *sigma.group();
  if constexpr (G::is_finite) {
    for (auto v : grp.elements()) {
      auto sv = sigma(v), tv = tau(v);
      for (auto u : grp.elements())
        if (grp.multiply(sv, u) != grp.multiply(u, tv)) return false;
    }
    return true;
  } else {
    // u = e forces sigma = tau; then sigma(v) must be central. Both
    // conditions are multiplicative in v, so generators suffice.
    for (const auto& s : grp.generators()) {
      auto img = sigma(s);
      if (img != tau(s) || img.a != 0 || img.b != 0) return false;
    }
    return true;
  }
}

enum class FcVerdict { True, False, TruncatedUnknown };

inline constexpr std::string_view to_string(FcVerdict v) {
  switch (v) {
    case FcVerdict::True: return "true";
    case FcVerdict::False: return "false";
    case FcVerdict::TruncatedUnknown: return "truncated-unknown";
  }
  return "?";
}

struct ClassGrowth {
  Triple representative;
  bool singleton_certified = false;
  std::vector<std::size_t> sizes_by_radius;  // |[a] over ball(r)|, r = 1..radius
};

/// Class sizes of a over growing balls; a certified singleton stops early.
inline ClassGrowth class_growth(const Endomorphism<HeisenbergGroup>& sigma, const Endomorphism<HeisenbergGroup>& tau,
                                const Triple& a, std::size_t radius) {
  ClassGrowth out{a, false, {}};
  for (std::size_t r = 1; r <= radius; ++r) {
    GroupoidView<HeisenbergGroup> view(sigma, tau, Scope<HeisenbergGroup>::of_ball(*sigma.group(), r));
    auto cls = view.conjugacy_class(a);
    if (!cls.truncated) {
      out.singleton_certified = true;
      out.sizes_by_radius.push_back(1);
      return out;
    }
    out.sizes_by_radius.push_back(cls.elements.size());
  }
  return out;
}

/// Finite groups are FC. On the Heisenberg group a (sigma,tau)-abelian pair
/// is certified; otherwise the classes of the examined representatives
/// (ball(1) by default) are grown up to `radius`, and anything short of a
/// singleton certificate everywhere stays undecided.
template <DiscreteGroup G>
FcVerdict is_fc(const Endomorphism<G>& sigma, const Endomorphism<G>& tau, std::size_t radius = 4,
                std::optional<std::vector<Elem<G>>> representatives = std::nullopt) {
  if constexpr (G::is_finite) {
    (void)sigma, (void)tau, (void)radius, (void)representatives;
    return FcVerdict::True;
  } else {
    if (is_sigma_tau_abelian(sigma, tau)) return FcVerdict::True;
    auto reps = representatives ? *representatives : ball(*sigma.group(), 1);
    for (const auto& a : reps) {
      if (!class_growth(sigma, tau, a, radius).singleton_certified) return FcVerdict::TruncatedUnknown;
    }
    return FcVerdict::True;
  }
}

// ---------------------------------------------------------------------------
// Subgroups

inline bool is_subgroup(const FiniteGroup& grp, const std::vector<FiniteGroup::element_type>& H) {
  std::vector<char> in(grp.order(), 0);
  for (auto h : H) {
    if (!grp.contains(h)) return false;
    in[h] = 1;
  }
  if (!in[grp.identity()]) return false;
  for (auto a : H) {
    if (!in[grp.inverse(a)]) return false;
    for (auto b : H)
      if (!in[grp.multiply(a, b)]) return false;
  }
  return true;
}

/// Smallest subgroup containing every [h, k] = h k h^-1 k^-1, sorted.
inline std::vector<FiniteGroup::element_type> commutator_subgroup(const FiniteGroup& grp,
                                                                  const std::vector<FiniteGroup::element_type>& H) {
  if (!is_subgroup(grp, H)) fail(ErrorKind::NotASubgroup, "element list is not closed under the group operations");
  std::vector<FiniteGroup::element_type> commutators;
  for (auto h : H)
    for (auto k : H)
      commutators.push_back(grp.multiply(grp.multiply(h, k), grp.multiply(grp.inverse(h), grp.inverse(k))));
  return grp.closure(commutators);
}

/// dim Hom(H, (C,+)) for a finite subgroup: always 0 (torsion abelianization).
inline std::size_t character_space_dimension(const FiniteGroup& grp, const std::vector<FiniteGroup::element_type>& H) {
  if (!is_subgroup(grp, H)) fail(ErrorKind::UnsupportedSubgroup, "element list is not a subgroup");
  return 0;
}

inline std::size_t character_space_dimension(const HeisenbergSubgroup& H) { return H.abelianization_rank(); }

/// Builtin infinite descriptors: heisenberg_Z, center / infinite_cyclic,
/// free_abelian:<k>.
inline std::size_t character_space_dimension(std::string_view descriptor) {
  if (descriptor == "heisenberg_Z") return 2;
  if (descriptor == "center" || descriptor == "infinite_cyclic") return 1;
  constexpr std::string_view prefix = "free_abelian:";
  if (descriptor.substr(0, prefix.size()) == prefix) {
    auto rest = descriptor.substr(prefix.size());
    std::size_t k = 0;
    if (rest.empty()) fail(ErrorKind::UnsupportedSubgroup, std::string(descriptor));
    for (char ch : rest) {
      if (ch < '0' || ch > '9') fail(ErrorKind::UnsupportedSubgroup, std::string(descriptor));
      k = k * 10 + static_cast<std::size_t>(ch - '0');
    }
    return k;
  }
  fail(ErrorKind::UnsupportedSubgroup, "unknown subgroup descriptor " + std::string(descriptor));
}

// ---------------------------------------------------------------------------
// Rank-2 nilpotency

/// G / Z_{sigma,tau} abelian. The center is checked for normality first;
/// CenterNotNormal carries the offending conjugate.
inline bool is_rank2_nilpotent(const Endomorphism<FiniteGroup>& sigma, const Endomorphism<FiniteGroup>& tau) {
  using E = FiniteGroup::element_type;
  GroupoidView<FiniteGroup> view(sigma, tau, Scope<FiniteGroup>::full(*sigma.group()));
  const auto& grp = *sigma.group();
  const std::size_t n = grp.order();
  auto Z = view.center();
  std::vector<char> in(n, 0);
  for (auto z : Z) in[z] = 1;
  for (auto z : Z) {
    for (E g = 0; g < n; ++g) {
      E c = grp.multiply(grp.multiply(g, z), grp.inverse(g));
      if (!in[c]) {
        fail(ErrorKind::CenterNotNormal,
             std::to_string(g) + " * " + std::to_string(z) + " * " + std::to_string(g) + "^-1 = " + std::to_string(c));
      }
    }
  }
  // coset label = least element of g Z
  std::vector<E> coset(n);
  for (E g = 0; g < n; ++g) {
    E least = grp.multiply(g, Z.front());
    for (auto z : Z) least = std::min(least, grp.multiply(g, z));
    coset[g] = least;
  }
  for (E g = 0; g < n; ++g)
    for (E h = 0; h < n; ++h)
      if (coset[grp.multiply(g, h)] != coset[grp.multiply(h, g)]) return false;
  return true;
}

/// Heisenberg with inner sigma, tau: G / Z(G) = Z^2 is abelian.
inline bool is_rank2_nilpotent(const Endomorphism<HeisenbergGroup>& sigma, const Endomorphism<HeisenbergGroup>& tau) {
  if (!sigma.inner_witness() || !tau.inner_witness()) {
    fail(ErrorKind::NotSupportedForScope, "rank-2 nilpotency on heisenberg_Z is decided for inner sigma, tau only");
  }
  return true;
}

// ---------------------------------------------------------------------------
// Decomposition report

struct ClassSummary {
  FiniteGroup::element_type representative = 0;
  std::size_t size = 0;
  std::size_t centralizer_size = 0;
  std::size_t commutator_size = 0;    // |Z(a)'|
  std::size_t abelianization_order = 0;  // |Z(a) / Z(a)'|
  std::size_t character_dimension = 0;
  bool periodic = true;  // Z(a) / Z(a)' is finite
};

struct DecompositionReport {
  std::size_t dim_der = 0;
  std::size_t dim_inn = 0;
  std::size_t inner_kernel_dimension = 0;
  std::size_t sum_char_dims = 0;
  bool dims_match = false;
  bool all_inner = false;
  std::vector<ClassSummary> classes;
  std::vector<FiniteGroup::element_type> center;
  std::optional<bool> nilpotent_rank2;
  std::string nilpotent_rank2_error;  // set when the quotient could not be formed
  bool sigma_tau_abelian = false;
  FcVerdict fc = FcVerdict::True;
  bool periodic_criterion = true;
};

/// The solver and the structural side are computed separately and compared.
inline DecompositionReport verify_decomposition(const Endomorphism<FiniteGroup>& sigma,
                                                const Endomorphism<FiniteGroup>& tau,
                                                std::size_t max_order = kDefaultSolverMaxOrder) {
  const auto& grp = *sigma.group();
  DecompositionReport report;
  auto space = derivation_space(sigma, tau, max_order);
  auto inner = inner_space(sigma, tau, max_order);
  report.dim_der = space.dimension;
  report.dim_inn = inner.dimension;
  report.inner_kernel_dimension = inner.kernel_dimension;
  report.all_inner = true;
  for (const auto& D : space.basis) {
    if (!is_inner(D, max_order).inner) {
      report.all_inner = false;
      break;
    }
  }

  GroupoidView<FiniteGroup> view(sigma, tau, Scope<FiniteGroup>::full(grp));
  for (const auto& cls : view.components()) {
    ClassSummary s;
    s.representative = cls.front();
    s.size = cls.size();
    auto Z = view.centralizer(s.representative);
    s.centralizer_size = Z.size();
    s.commutator_size = commutator_subgroup(grp, Z).size();
    s.abelianization_order = Z.size() / s.commutator_size;
    s.character_dimension = character_space_dimension(grp, Z);
    s.periodic = true;
    report.sum_char_dims += s.character_dimension;
    report.periodic_criterion = report.periodic_criterion && s.periodic;
    report.classes.push_back(s);
  }
  report.dims_match = report.dim_der == report.dim_inn + report.sum_char_dims;
  report.center = view.center();
  try {
    report.nilpotent_rank2 = is_rank2_nilpotent(sigma, tau);
  } catch (const Error& e) {
    report.nilpotent_rank2_error = e.what();
  }
  report.sigma_tau_abelian = is_sigma_tau_abelian(sigma, tau);
  report.fc = is_fc(sigma, tau);
  return report;
}

// ---------------------------------------------------------------------------
// Heisenberg central family

/// sigma = conjugation by (sa, sb, sc), tau = conjugation by (sa, sb, tc).
struct HeisenbergParams {
  std::int64_t sigma_a = 0;
  std::int64_t sigma_b = 0;
  std::int64_t sigma_c = 0;
  std::int64_t tau_c = 0;
};

inline std::pair<Endomorphism<HeisenbergGroup>, Endomorphism<HeisenbergGroup>> heisenberg_endomorphisms(
    const HeisenbergParams& p) {
  auto H = HeisenbergGroup::instance();
  return {inner_endomorphism(H, Triple{p.sigma_a, p.sigma_b, p.sigma_c}),
          inner_endomorphism(H, Triple{p.sigma_a, p.sigma_b, p.tau_c})};
}

/// Central derivation for a = (0,0,r) and phi(g) = mu g_a + nu g_b, stored on
/// the generators.
inline DerivationTable<HeisenbergGroup> heisenberg_central_family(const HeisenbergParams& p, std::int64_t mu,
                                                                  std::int64_t nu, std::int64_t r) {
  auto [sigma, tau] = heisenberg_endomorphisms(p);
  auto phi = make_additive_character(sigma.group(), {GaussianRational(static_cast<long>(mu)),
                                                     GaussianRational(static_cast<long>(nu))});
  return central_derivation(sigma, tau, HeisenbergGroup::z(r), phi);
}

/// (mu g_a + nu g_b) * (g_a, g_b, g_c + sa g_b - sb g_a + r), evaluated directly.
inline AlgebraElement<HeisenbergGroup> heisenberg_central_closed_form(const HeisenbergParams& p, std::int64_t mu,
                                                                      std::int64_t nu, std::int64_t r,
                                                                      const Triple& g) {
  Triple h{g.a, g.b, g.c + p.sigma_a * g.b - p.sigma_b * g.a + r};
  return AlgebraElement<HeisenbergGroup>::basis(HeisenbergGroup::instance(), h,
                                                GaussianRational(static_cast<long>(mu * g.a + nu * g.b)));
}

}  // namespace twistder
