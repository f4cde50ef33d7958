#pragma once

// Graphviz export of the groupoid: one cluster per component, nodes are the
// objects, edges are the morphisms (sigma(v) a, v) : a -> sigma(v) a tau(v^-1)
// for v in the generating set (or v = e for the trivial group).

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "twistder/groupoid.hpp"

namespace twistder {

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

inline std::string node_label(const FiniteGroup& grp, FiniteGroup::element_type g) {
  return grp.labels().empty() ? std::to_string(g) : grp.labels()[g];
}
inline std::string node_label(const HeisenbergGroup&, const Triple& g) { return g.to_string(); }

}  // namespace detail

/// Components are the classes for a finite group; on a ball they are the
/// connected pieces of the truncated graph.
template <DiscreteGroup G>
std::string groupoid_dot(const GroupoidView<G>& view) {
  using E = Elem<G>;
  const auto& grp = *view.group();
  const auto& objects = view.scope().elements();
  std::map<E, std::size_t, typename G::element_less> index;
  for (std::size_t i = 0; i < objects.size(); ++i) index.emplace(objects[i], i);

  std::vector<E> letters = grp.generators();
  if (letters.empty()) letters.push_back(grp.identity());

  struct Edge {
    std::size_t from, to;
    E v;
  };
  std::vector<Edge> edges;
  std::vector<std::size_t> parent(objects.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (const auto& v : letters) {
      auto b = view.target(view.morphism_from(objects[i], v));
      auto it = index.find(b);
      if (it == index.end()) continue;
      edges.push_back({i, it->second, v});
      auto ra = find(i), rb = find(it->second);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  // components in order of their least object; objects keep scope order
  std::map<std::size_t, std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < objects.size(); ++i) comps[find(i)].push_back(i);

  std::ostringstream out;
  out << "digraph groupoid {\n";
  std::size_t k = 0;
  for (const auto& [root, members] : comps) {
    out << "  subgraph cluster_" << k++ << " {\n";
    for (auto i : members) {
      out << "    n" << i << " [label=\"" << detail::dot_escape(detail::node_label(grp, objects[i])) << "\"];\n";
    }
    for (const auto& e : edges) {
      if (find(e.from) != root) continue;
      out << "    n" << e.from << " -> n" << e.to << " [label=\""
          << detail::dot_escape(detail::node_label(grp, e.v)) << "\"];\n";
    }
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace twistder
