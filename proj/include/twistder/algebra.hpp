#pragma once

// Finite-support elements of the group algebra Q(i)[G] with the
// convolution product (f*g)(x) = sum_{uv = x} f(u) g(v).

#include <map>
#include <string>
#include <utility>

#include "twistder/endomorphism.hpp"
#include "twistder/gaussian_rational.hpp"
#include "twistder/group.hpp"

namespace twistder {

template <DiscreteGroup G>
class AlgebraElement {
 public:
  using E = Elem<G>;
  using Terms = std::map<E, GaussianRational, typename G::element_less>;

  explicit AlgebraElement(GroupPtr<G> group) : group_(std::move(group)) {}

  /// c * g, the scaled indicator of g.
  static AlgebraElement basis(GroupPtr<G> group, const E& g, GaussianRational c = 1) {
    require_member(*group, g);
    AlgebraElement f(std::move(group));
    f.add_term(g, c);
    return f;
  }

  /// Unit I_e.
  static AlgebraElement unit(GroupPtr<G> group) {
    auto e = group->identity();
    return basis(std::move(group), e);
  }

  const GroupPtr<G>& group() const { return group_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  GaussianRational coefficient(const E& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? GaussianRational{} : it->second;
  }

  // Accumulates c into the coefficient of g, dropping it if it cancels.
  void add_term(const E& g, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    require_same_group(group_, o.group_, "add");
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    require_same_group(group_, o.group_, "subtract");
    for (const auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(const AlgebraElement& a) {
    AlgebraElement out(a.group_);
    for (const auto& [g, c] : a.terms_) out.terms_.emplace(g, -c);
    return out;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.group_.get() == b.group_.get() && a.terms_ == b.terms_;
  }

  /// f * h for a group element h (right translation of the support).
  AlgebraElement times(const E& h) const {
    AlgebraElement out(group_);
    for (const auto& [g, c] : terms_) out.add_term(group_->multiply(g, h), c);
    return out;
  }

  /// h * f for a group element h.
  AlgebraElement left_times(const E& h) const {
    AlgebraElement out(group_);
    for (const auto& [g, c] : terms_) out.add_term(group_->multiply(h, g), c);
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [g, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")*" + element_string(g);
    }
    return s;
  }

 private:
  GroupPtr<G> group_;
  Terms terms_;
};

template <DiscreteGroup G>
AlgebraElement<G> add(const AlgebraElement<G>& f, const AlgebraElement<G>& g) {
  return f + g;
}

template <DiscreteGroup G>
AlgebraElement<G> scale(const GaussianRational& c, const AlgebraElement<G>& f) {
  AlgebraElement<G> out(f.group());
  if (c.is_zero()) return out;
  for (const auto& [g, a] : f.terms()) out.add_term(g, c * a);
  return out;
}

template <DiscreteGroup G>
AlgebraElement<G> convolve(const AlgebraElement<G>& f, const AlgebraElement<G>& g) {
  require_same_group(f.group(), g.group(), "convolve");
  const auto& grp = *f.group();
  AlgebraElement<G> out(f.group());
  for (const auto& [u, a] : f.terms())
    for (const auto& [v, b] : g.terms()) out.add_term(grp.multiply(u, v), a * b);
  return out;
}

template <DiscreteGroup G>
AlgebraElement<G> operator*(const AlgebraElement<G>& f, const AlgebraElement<G>& g) {
  return convolve(f, g);
}

/// Linear extension sum f(g) g -> sum f(g) phi(g); colliding images add up.
template <DiscreteGroup G>
AlgebraElement<G> apply_endomorphism(const Endomorphism<G>& phi, const AlgebraElement<G>& f) {
  require_same_group(phi.group(), f.group(), "apply_endomorphism");
  AlgebraElement<G> out(f.group());
  for (const auto& [g, c] : f.terms()) out.add_term(phi(g), c);
  return out;
}

}  // namespace twistder
