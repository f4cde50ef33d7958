#pragma once

// Common interface of the two group kinds and the operations shared by them:
// element formatting, handle checks and ball enumeration.

#include <algorithm>
#include <concepts>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twistder/error.hpp"
#include "twistder/finite_group.hpp"
#include "twistder/heisenberg.hpp"

namespace twistder {

template <class G>
concept DiscreteGroup = requires(const G& group, const typename G::element_type& x) {
  typename G::element_less;
  { group.identity() } -> std::convertible_to<typename G::element_type>;
  { group.multiply(x, x) } -> std::convertible_to<typename G::element_type>;
  { group.inverse(x) } -> std::convertible_to<typename G::element_type>;
  { group.generators() } -> std::convertible_to<const std::vector<typename G::element_type>&>;
  { G::is_finite } -> std::convertible_to<bool>;
};

static_assert(DiscreteGroup<FiniteGroup>);
static_assert(DiscreteGroup<HeisenbergGroup>);

template <DiscreteGroup G>
using GroupPtr = std::shared_ptr<const G>;

template <DiscreteGroup G>
using Elem = typename G::element_type;

template <DiscreteGroup G>
using ElementSet = std::set<Elem<G>, typename G::element_less>;

inline std::string element_string(FiniteGroup::element_type g) { return std::to_string(g); }
inline std::string element_string(const Triple& g) { return g.to_string(); }

template <DiscreteGroup G>
void require_same_group(const GroupPtr<G>& a, const GroupPtr<G>& b, const char* where) {
  if (a.get() != b.get()) fail(ErrorKind::GroupMismatch, std::string(where) + ": operands live in different groups");
}

inline void require_member(const FiniteGroup& group, FiniteGroup::element_type g) {
  if (!group.contains(g)) fail(ErrorKind::GroupMismatch, "element " + std::to_string(g) + " is not in " + group.name());
}
inline void require_member(const HeisenbergGroup&, const Triple&) {}

/// Elements of word length <= radius in the generators and their inverses,
/// in canonical order. Finite groups return every element.
template <DiscreteGroup G>
std::vector<Elem<G>> ball(const G& group, std::size_t radius) {
  if constexpr (G::is_finite) {
    (void)radius;
    return group.elements();
  } else {
    std::vector<Elem<G>> letters;
    for (const auto& s : group.generators()) {
      letters.push_back(s);
      letters.push_back(group.inverse(s));
    }
    ElementSet<G> seen{group.identity()};
    std::vector<Elem<G>> frontier{group.identity()};
    for (std::size_t r = 0; r < radius; ++r) {
      std::vector<Elem<G>> next;
      for (const auto& g : frontier) {
        for (const auto& s : letters) {
          auto h = group.multiply(g, s);
          if (seen.insert(h).second) next.push_back(h);
        }
      }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }
}

/// Objects a computation ranges over: the whole finite group, or a ball of
/// the infinite group.
template <DiscreteGroup G>
class Scope {
 public:
  static Scope full(const G& group) requires(G::is_finite) {
    Scope s;
    s.elements_ = group.elements();
    s.members_ = ElementSet<G>(s.elements_.begin(), s.elements_.end());
    return s;
  }

  static Scope of_ball(const G& group, std::size_t radius) {
    Scope s;
    s.elements_ = ball(group, radius);
    s.members_ = ElementSet<G>(s.elements_.begin(), s.elements_.end());
    s.radius_ = radius;
    s.finite_group_ = G::is_finite;
    return s;
  }

  const std::vector<Elem<G>>& elements() const { return elements_; }
  bool contains(const Elem<G>& g) const { return members_.count(g) != 0; }
  std::size_t size() const { return elements_.size(); }

  // True when the scope is the whole (finite) group.
  bool is_whole_group() const { return finite_group_; }
  std::optional<std::size_t> radius() const { return radius_; }

 private:
  Scope() = default;

  std::vector<Elem<G>> elements_;
  ElementSet<G> members_;
  std::optional<std::size_t> radius_;
  bool finite_group_ = true;
};

template <DiscreteGroup G>
Scope<G> default_scope(const G& group, std::size_t radius) {
  if constexpr (G::is_finite) {
    (void)radius;
    return Scope<G>::full(group);
  } else {
    return Scope<G>::of_ball(group, radius);
  }
}

}  // namespace twistder
