#pragma once

// Test-side oracles that share no code with the library's linear algebra:
// a dense Gaussian elimination over mpq_class and the full twisted Leibniz
// system in all unknowns lambda^h_g, g != e, with one row per (g2, g1, h).

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "twistder/endomorphism.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<mpq_class>>;

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    mpq_class inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      mpq_class f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

struct DenseResult {
  std::size_t dimension = 0;
  // kernel basis in (h, g) coordinates, index h * n + g
  std::vector<std::vector<mpq_class>> kernel;
};

/// Full derivation system for a finite group of small order.
inline DenseResult derivation_dimension(const twistder::Endomorphism<twistder::FiniteGroup>& sigma,
                                        const twistder::Endomorphism<twistder::FiniteGroup>& tau,
                                        bool want_kernel = false) {
  const auto& G = *sigma.group();
  const std::size_t n = G.order();
  const auto e = G.identity();
  // unknown index for (h, g); g == e has no unknown
  std::vector<long> col(n * n, -1);
  std::size_t unknowns = 0;
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t g = 0; g < n; ++g)
      if (g != e) col[h * n + g] = static_cast<long>(unknowns++);

  Matrix m;
  for (std::size_t g2 = 0; g2 < n; ++g2) {
    for (std::size_t g1 = 0; g1 < n; ++g1) {
      auto g21 = G.multiply(g2, g1);
      auto t1 = G.inverse(tau(g1));
      auto s2 = G.inverse(sigma(g2));
      for (std::size_t h = 0; h < n; ++h) {
        std::vector<mpq_class> row(unknowns, 0);
        auto put = [&](std::size_t hh, std::size_t gg, int sign) {
          long c = col[hh * n + gg];
          if (c >= 0) row[c] += sign;
        };
        put(h, g21, 1);
        put(G.multiply(h, t1), g2, -1);
        put(G.multiply(s2, h), g1, -1);
        bool nonzero = false;
        for (const auto& x : row) nonzero = nonzero || x != 0;
        if (nonzero) m.push_back(std::move(row));
      }
    }
  }
  auto pivots = rref(m, unknowns);
  DenseResult res;
  res.dimension = unknowns - pivots.size();
  if (!want_kernel) return res;
  std::vector<char> is_pivot(unknowns, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<std::size_t> back(unknowns);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t g = 0; g < n; ++g)
      if (col[h * n + g] >= 0) back[col[h * n + g]] = h * n + g;
  for (std::size_t f = 0; f < unknowns; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(n * n, 0);
    v[back[f]] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[back[pivots[r]]] = -m[r][f];
    res.kernel.push_back(std::move(v));
  }
  return res;
}

/// dim of { p : p tau(g) = sigma(g) p for all g }, over all g (not just generators).
inline std::size_t inner_kernel_dimension(const twistder::Endomorphism<twistder::FiniteGroup>& sigma,
                                          const twistder::Endomorphism<twistder::FiniteGroup>& tau) {
  const auto& G = *sigma.group();
  const std::size_t n = G.order();
  Matrix m;
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<mpq_class> row(n, 0);
      row[G.multiply(x, G.inverse(tau(g)))] += 1;
      row[G.multiply(G.inverse(sigma(g)), x)] -= 1;
      m.push_back(std::move(row));
    }
  }
  return n - rref(m, n).size();
}

/// Rank of a list of vectors.
inline std::size_t rank(Matrix m, std::size_t cols) { return rref(m, cols).size(); }

/// Brute-force conjugacy class count for sigma = tau = id.
inline std::size_t ordinary_class_count(const twistder::FiniteGroup& G) {
  const std::size_t n = G.order();
  std::vector<char> seen(n, 0);
  std::size_t count = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    ++count;
    for (std::size_t g = 0; g < n; ++g) seen[G.multiply(G.multiply(g, a), G.inverse(g))] = 1;
  }
  return count;
}

}  // namespace oracle
