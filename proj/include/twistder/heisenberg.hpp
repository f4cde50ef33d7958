#pragma once

// The discrete Heisenberg group of unitriangular integer matrices
//
//   | 1 a c |
//   | 0 1 b |
//   | 0 0 1 |
//
// stored as the triple (a, b, c).

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

namespace twistder {

struct Triple {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  friend bool operator==(const Triple&, const Triple&) = default;

  std::string to_string() const {
    return "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]";
  }
  friend std::ostream& operator<<(std::ostream& os, const Triple& t) { return os << t.to_string(); }
};

class HeisenbergGroup;
using HeisenbergGroupPtr = std::shared_ptr<const HeisenbergGroup>;

class HeisenbergGroup {
 public:
  using element_type = Triple;

  // Canonical order: (|c|, |a|, |b|, a, b, c).
  struct element_less {
    bool operator()(const Triple& x, const Triple& y) const {
      return std::make_tuple(std::llabs(x.c), std::llabs(x.a), std::llabs(x.b), x.a, x.b, x.c) <
             std::make_tuple(std::llabs(y.c), std::llabs(y.a), std::llabs(y.b), y.a, y.b, y.c);
    }
  };
  static constexpr bool is_finite = false;

  static HeisenbergGroupPtr instance() {
    static const HeisenbergGroupPtr group(new HeisenbergGroup());
    return group;
  }

  Triple identity() const { return {}; }

  Triple multiply(const Triple& g, const Triple& h) const {
    return {g.a + h.a, g.b + h.b, g.c + h.c + g.a * h.b};
  }

  Triple inverse(const Triple& g) const { return {-g.a, -g.b, g.a * g.b - g.c}; }

  // (a,b,c)^n = (na, nb, nc + ab n(n-1)/2)
  Triple power(const Triple& g, std::int64_t n) const {
    return {n * g.a, n * g.b, n * g.c + g.a * g.b * (n * (n - 1) / 2)};
  }

  Triple commutator(const Triple& g, const Triple& h) const {
    return multiply(multiply(g, h), multiply(inverse(g), inverse(h)));
  }

  static Triple x() { return {1, 0, 0}; }
  static Triple y() { return {0, 1, 0}; }
  static Triple z(std::int64_t r = 1) { return {0, 0, r}; }

  const std::vector<Triple>& generators() const { return generators_; }
  const std::string& name() const { return name_; }

  // Abelianization Z^2 = <x, y>.
  static constexpr std::size_t abelianization_rank = 2;

 private:
  HeisenbergGroup() = default;

  std::vector<Triple> generators_{x(), y()};
  std::string name_ = "heisenberg_Z";
};

}  // namespace twistder
