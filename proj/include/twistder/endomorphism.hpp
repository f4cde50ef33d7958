#pragma once

// Group endomorphisms sigma, tau. On finite groups the full image table is
// stored and the homomorphism property is checked on every pair. On the
// Heisenberg group an endomorphism is fixed by the images A, B of the
// generators x, y and evaluated through the normal form
//   (a, b, c) = x^a y^b [x,y]^(c - ab),
// with validation on the defining relations [x,[x,y]] = [y,[x,y]] = e.

#include <optional>
#include <string>
#include <vector>

#include "twistder/group.hpp"

namespace twistder {

template <DiscreteGroup G>
class Endomorphism {
 public:
  using E = Elem<G>;

  const GroupPtr<G>& group() const { return group_; }

  E operator()(const E& g) const {
    if constexpr (G::is_finite) {
      return images_[g];
    } else {
      const auto& grp = *group_;
      const E& A = images_[0];
      const E& B = images_[1];
      E result = grp.multiply(grp.power(A, g.a), grp.power(B, g.b));
      return grp.multiply(result, grp.power(grp.commutator(A, B), g.c - g.a * g.b));
    }
  }

  // Finite: the whole image table. Heisenberg: images of x and y.
  const std::vector<E>& images() const { return images_; }
  bool is_automorphism() const { return automorphism_; }
  const std::optional<E>& inner_witness() const { return inner_witness_; }

  bool is_identity() const {
    if constexpr (G::is_finite) {
      for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
      return true;
    } else {
      return images_[0] == HeisenbergGroup::x() && images_[1] == HeisenbergGroup::y();
    }
  }

  friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
    return a.group_.get() == b.group_.get() && a.images_ == b.images_;
  }

  template <DiscreteGroup H>
  friend Endomorphism<H> make_endomorphism(GroupPtr<H> group, const std::vector<Elem<H>>& generator_images);
  template <DiscreteGroup H>
  friend Endomorphism<H> inner_endomorphism(GroupPtr<H> group, const Elem<H>& x);

 private:
  GroupPtr<G> group_;
  std::vector<E> images_;
  bool automorphism_ = false;
  std::optional<E> inner_witness_;
};

/// Extends generator images multiplicatively; throws NotAHomomorphism with a
/// witness when the images do not define a homomorphism.
template <DiscreteGroup G>
Endomorphism<G> make_endomorphism(GroupPtr<G> group, const std::vector<Elem<G>>& generator_images) {
  const auto& grp = *group;
  const auto& gens = grp.generators();
  if (generator_images.size() != gens.size()) {
    fail(ErrorKind::SpecError, "expected " + std::to_string(gens.size()) + " generator images, got " +
                                   std::to_string(generator_images.size()));
  }
  for (const auto& img : generator_images) require_member(grp, img);

  Endomorphism<G> phi;
  phi.group_ = group;
  if constexpr (G::is_finite) {
    using E = Elem<G>;
    const std::size_t n = grp.order();
    std::vector<E> images(n);
    std::vector<char> known(n, 0);
    images[grp.identity()] = grp.identity();
    known[grp.identity()] = 1;
    std::vector<E> queue{grp.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      E g = queue[i];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        E h = grp.multiply(gens[k], g);
        if (known[h]) continue;
        images[h] = grp.multiply(generator_images[k], images[g]);
        known[h] = 1;
        queue.push_back(h);
      }
    }
    for (E g = 0; g < n; ++g) {
      for (E h = 0; h < n; ++h) {
        if (images[grp.multiply(g, h)] != grp.multiply(images[g], images[h])) {
          fail(ErrorKind::NotAHomomorphism, "phi(" + std::to_string(g) + "*" + std::to_string(h) +
                                                ") != phi(" + std::to_string(g) + ")*phi(" + std::to_string(h) + ")");
        }
      }
    }
    std::vector<char> hit(n, 0);
    bool bijective = true;
    for (auto x : images) {
      if (hit[x]++) bijective = false;
    }
    phi.images_ = std::move(images);
    phi.automorphism_ = bijective;
  } else {
    using E = Elem<G>;
    const auto& A = generator_images[0];
    const auto& B = generator_images[1];
    auto z = grp.commutator(A, B);
    if (grp.commutator(A, z) != grp.identity()) {
      fail(ErrorKind::NotAHomomorphism, "relation [x,[x,y]] fails for x->" + A.to_string() + ", y->" + B.to_string());
    }
    if (grp.commutator(B, z) != grp.identity()) {
      fail(ErrorKind::NotAHomomorphism, "relation [y,[x,y]] fails for x->" + A.to_string() + ", y->" + B.to_string());
    }
    phi.images_ = generator_images;
    // bijective iff the induced map on H/Z(H) = Z^2 is in GL2(Z)
    auto det = A.a * B.b - A.b * B.a;
    phi.automorphism_ = det == 1 || det == -1;
    // x -> x z^p, y -> y z^q is conjugation by (q, -p, 0)
    if (A.a == 1 && A.b == 0 && B.a == 0 && B.b == 1) phi.inner_witness_ = E{B.c, -A.c, 0};
  }
  return phi;
}

template <DiscreteGroup G>
Endomorphism<G> identity_endomorphism(GroupPtr<G> group) {
  auto gens = group->generators();
  return make_endomorphism(group, gens);
}

/// The automorphism g -> x g x^-1.
template <DiscreteGroup G>
Endomorphism<G> inner_endomorphism(GroupPtr<G> group, const Elem<G>& x) {
  const auto& grp = *group;
  require_member(grp, x);
  auto x_inv = grp.inverse(x);
  std::vector<Elem<G>> images;
  for (const auto& s : grp.generators()) images.push_back(grp.multiply(grp.multiply(x, s), x_inv));
  auto phi = make_endomorphism(group, images);
  phi.inner_witness_ = x;
  return phi;
}

/// Every endomorphism of a small finite group, by brute force over generator
/// images (at most `limit` candidate tuples).
inline std::vector<Endomorphism<FiniteGroup>> all_endomorphisms(const FiniteGroupPtr& group,
                                                                std::size_t limit = 1u << 20) {
  const auto& gens = group->generators();
  const std::size_t n = group->order();
  std::size_t candidates = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    candidates *= n;
    if (candidates > limit) fail(ErrorKind::GroupTooLarge, "too many candidate endomorphisms");
  }
  std::vector<Endomorphism<FiniteGroup>> out;
  std::vector<FiniteGroup::element_type> images(gens.size(), 0);
  for (std::size_t code = 0; code < candidates; ++code) {
    std::size_t rest = code;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      images[k] = static_cast<FiniteGroup::element_type>(rest % n);
      rest /= n;
    }
    // orders must divide, a cheap filter before the exhaustive check
    bool plausible = true;
    for (std::size_t k = 0; k < gens.size() && plausible; ++k) {
      plausible = group->element_order(gens[k]) % group->element_order(images[k]) == 0;
    }
    if (!plausible) continue;
    try {
      out.push_back(make_endomorphism(group, images));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotAHomomorphism) throw;
    }
  }
  return out;
}

inline std::vector<Endomorphism<FiniteGroup>> all_automorphisms(const FiniteGroupPtr& group) {
  std::vector<Endomorphism<FiniteGroup>> out;
  for (auto& phi : all_endomorphisms(group)) {
    if (phi.is_automorphism()) out.push_back(std::move(phi));
  }
  return out;
}

}  // namespace twistder
