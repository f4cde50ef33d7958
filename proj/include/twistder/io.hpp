#pragma once

// JSON serialization and parsing of group, endomorphism, element, algebra
// and derivation specs. Needs nlohmann/json (single header "json.hpp").

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"
#include "twistder/decomposition.hpp"

namespace twistder::io {

using json = nlohmann::ordered_json;

using AnyGroup = std::variant<FiniteGroupPtr, HeisenbergGroupPtr>;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::SpecError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json(std::string_view text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::SpecError, what + ": " + e.what());
  }
}

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline long long parse_integer(std::string_view text, const std::string& what) {
  auto s = trim(text);
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(s, &used);
  } catch (const std::exception&) {
    fail(ErrorKind::SpecError, "bad integer for " + what + ": '" + s + "'");
  }
  if (used != s.size()) fail(ErrorKind::SpecError, "bad integer for " + what + ": '" + s + "'");
  return value;
}

// ---------------------------------------------------------------------------
// Groups

/// c<n>, cyclic<n>, d<n> (order 2n), dihedral<n>, s<n>, symmetric<n>,
/// q8 / quaternion8, heisenberg_mod<n>, heisenberg_Z, trivial. A ':' between
/// family and n is accepted.
inline AnyGroup builtin_group(std::string_view name) {
  std::string s = trim(name);
  if (s == "heisenberg_Z" || s == "heisenberg_z") return HeisenbergGroup::instance();
  if (s == "q8" || s == "quaternion8" || s == "Q8") return quaternion8();
  if (s == "trivial") return cyclic_group(1);
  auto split = s.find_first_of("0123456789");
  if (split == std::string::npos || split == 0) fail(ErrorKind::SpecError, "unknown builtin group '" + s + "'");
  std::string family = s.substr(0, split);
  if (!family.empty() && family.back() == ':') family.pop_back();
  if (!family.empty() && family.back() == '_') family.pop_back();
  auto n = parse_integer(s.substr(split), "builtin order");
  if (n < 1) fail(ErrorKind::UnsupportedParameter, "builtin parameter must be positive");
  auto k = static_cast<std::size_t>(n);
  for (auto& ch : family) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (family == "c" || family == "cyclic") return cyclic_group(k);
  if (family == "d" || family == "dihedral") return dihedral_group(k);
  if (family == "s" || family == "symmetric") return symmetric_group(k);
  if (family == "heisenberg_mod") return heisenberg_mod(k);
  fail(ErrorKind::SpecError, "unknown builtin group '" + s + "'");
}

/// {"family": name, "params": {"n": k}} or {"cayley": [[...]], "labels": [...]}.
inline AnyGroup group_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::SpecError, "group spec must be a JSON object");
  if (j.contains("cayley")) {
    const auto& rows = j.at("cayley");
    if (!rows.is_array()) fail(ErrorKind::SpecError, "cayley must be an array of rows");
    FiniteGroup::Table table;
    for (const auto& row : rows) {
      if (!row.is_array()) fail(ErrorKind::SpecError, "cayley rows must be arrays");
      std::vector<FiniteGroup::element_type> r;
      for (const auto& x : row) {
        if (!x.is_number_integer() || x.get<long long>() < 0) {
          fail(ErrorKind::SpecError, "cayley entries must be nonnegative integers");
        }
        r.push_back(x.get<FiniteGroup::element_type>());
      }
      table.push_back(std::move(r));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return make_finite_group(std::move(table), j.value("name", std::string("cayley")), std::move(labels));
  }
  if (!j.contains("family")) fail(ErrorKind::SpecError, "group spec needs 'family' or 'cayley'");
  auto family = j.at("family").get<std::string>();
  if (family == "heisenberg_Z" || family == "quaternion8" || family == "trivial") return builtin_group(family);
  if (!j.contains("params") || !j.at("params").contains("n")) {
    fail(ErrorKind::SpecError, "family '" + family + "' needs params.n");
  }
  const auto& n = j.at("params").at("n");
  if (!n.is_number_integer()) fail(ErrorKind::SpecError, "params.n must be an integer");
  if (n.get<long long>() < 1) fail(ErrorKind::UnsupportedParameter, "params.n must be positive");
  return builtin_group(family + ":" + std::to_string(n.get<long long>()));
}

/// builtin:<name> or file:<path>.
inline AnyGroup parse_group_spec(std::string_view spec) {
  std::string s = trim(spec);
  if (s.rfind("builtin:", 0) == 0) return builtin_group(s.substr(8));
  if (s.rfind("file:", 0) == 0) return group_from_json(parse_json(read_file(s.substr(5)), s.substr(5)));
  fail(ErrorKind::SpecError, "group spec must be builtin:<name> or file:<path>");
}

// ---------------------------------------------------------------------------
// Elements

inline json element_json(FiniteGroup::element_type g) { return g; }
inline json element_json(const Triple& g) { return json::array({g.a, g.b, g.c}); }

inline FiniteGroup::element_type parse_element(const FiniteGroup& grp, std::string_view text) {
  auto s = trim(text);
  if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    auto v = parse_integer(s, "element");
    if (v < 0 || static_cast<std::size_t>(v) >= grp.order()) {
      fail(ErrorKind::SpecError, "element index " + s + " out of range for " + grp.name());
    }
    return static_cast<FiniteGroup::element_type>(v);
  }
  if (auto g = grp.find_label(s)) return *g;
  fail(ErrorKind::SpecError, "unknown element '" + s + "' in " + grp.name());
}

inline Triple parse_element(const HeisenbergGroup&, std::string_view text) {
  auto s = trim(text);
  if (s == "e") return {};
  if (s == "x") return HeisenbergGroup::x();
  if (s == "y") return HeisenbergGroup::y();
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    fail(ErrorKind::SpecError, "Heisenberg element must be [a,b,c], got '" + s + "'");
  }
  auto body = s.substr(1, s.size() - 2);
  std::vector<long long> parts;
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    parts.push_back(parse_integer(body.substr(start, comma - start), "triple entry"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) fail(ErrorKind::SpecError, "Heisenberg element needs three entries");
  return {parts[0], parts[1], parts[2]};
}

inline FiniteGroup::element_type element_from_json(const FiniteGroup& grp, const json& j) {
  if (j.is_number_integer()) return parse_element(grp, std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_element(grp, j.get<std::string>());
  fail(ErrorKind::SpecError, "finite-group element must be an index or a label");
}

inline Triple element_from_json(const HeisenbergGroup& grp, const json& j) {
  if (j.is_array() && j.size() == 3 && std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_number_integer(); })) {
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>()};
  }
  if (j.is_string()) return parse_element(grp, j.get<std::string>());
  fail(ErrorKind::SpecError, "Heisenberg element must be [a,b,c]");
}

template <DiscreteGroup G>
json elements_json(const std::vector<Elem<G>>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(element_json(x));
  return out;
}

// ---------------------------------------------------------------------------
// Endomorphisms

namespace detail {

// Splits on commas outside brackets.
inline std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '[' || ch == '{') ++depth;
    if (ch == ']' || ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

template <DiscreteGroup G>
std::size_t generator_slot(const G& grp, const std::string& key) {
  auto g = parse_element(grp, key);
  const auto& gens = grp.generators();
  auto it = std::find(gens.begin(), gens.end(), g);
  if (it == gens.end()) fail(ErrorKind::SpecError, "'" + key + "' is not a generator");
  return static_cast<std::size_t>(it - gens.begin());
}

template <DiscreteGroup G>
Endomorphism<G> from_generator_map(const GroupPtr<G>& group, const std::vector<std::pair<std::string, Elem<G>>>& kv) {
  const auto& gens = group->generators();
  std::vector<std::optional<Elem<G>>> images(gens.size());
  for (const auto& [key, value] : kv) {
    auto slot = generator_slot(*group, key);
    if (images[slot]) fail(ErrorKind::SpecError, "generator '" + key + "' given twice");
    images[slot] = value;
  }
  std::vector<Elem<G>> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!images[i]) fail(ErrorKind::SpecError, "missing image of generator " + element_string(gens[i]));
    out.push_back(*images[i]);
  }
  return make_endomorphism(group, out);
}

}  // namespace detail

/// "id" or {"inner": elem} or {"images": {generator: elem}}.
template <DiscreteGroup G>
Endomorphism<G> endomorphism_from_json(const GroupPtr<G>& group, const json& j) {
  if (j.is_string() && j.get<std::string>() == "id") return identity_endomorphism(group);
  if (!j.is_object()) fail(ErrorKind::SpecError, "endomorphism spec must be \"id\" or an object");
  if (j.contains("inner")) return inner_endomorphism(group, element_from_json(*group, j.at("inner")));
  if (j.contains("images")) {
    const auto& m = j.at("images");
    if (!m.is_object()) fail(ErrorKind::SpecError, "images must map generators to elements");
    std::vector<std::pair<std::string, Elem<G>>> kv;
    for (const auto& [key, value] : m.items()) kv.emplace_back(key, element_from_json(*group, value));
    return detail::from_generator_map(group, kv);
  }
  fail(ErrorKind::SpecError, "endomorphism spec needs 'inner' or 'images'");
}

/// id | inner:<elem> | images:{gen:elem,...} | file:<path>
template <DiscreteGroup G>
Endomorphism<G> parse_endomorphism_spec(const GroupPtr<G>& group, std::string_view spec) {
  std::string s = trim(spec);
  if (s == "id") return identity_endomorphism(group);
  if (s.rfind("inner:", 0) == 0) return inner_endomorphism(group, parse_element(*group, s.substr(6)));
  if (s.rfind("file:", 0) == 0) {
    auto path = s.substr(5);
    return endomorphism_from_json(group, parse_json(read_file(path), path));
  }
  if (s.rfind("images:", 0) == 0) {
    auto body = trim(s.substr(7));
    if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
      fail(ErrorKind::SpecError, "images spec must be images:{gen:elem,...}");
    }
    std::vector<std::pair<std::string, Elem<G>>> kv;
    for (const auto& item : detail::split_top_level(body.substr(1, body.size() - 2))) {
      auto colon = item.find(':');
      if (colon == std::string::npos) fail(ErrorKind::SpecError, "images entry '" + item + "' lacks ':'");
      kv.emplace_back(trim(item.substr(0, colon)), parse_element(*group, item.substr(colon + 1)));
    }
    return detail::from_generator_map(group, kv);
  }
  fail(ErrorKind::SpecError, "endomorphism spec must be id, inner:<elem>, images:{...} or file:<path>");
}

template <DiscreteGroup G>
json endomorphism_json(const Endomorphism<G>& phi) {
  json out = json::object();
  if (phi.inner_witness()) out["inner"] = element_json(*phi.inner_witness());
  json images = json::object();
  const auto& gens = phi.group()->generators();
  for (const auto& s : gens) images[element_string(s)] = element_json(phi(s));
  out["images"] = std::move(images);
  out["automorphism"] = phi.is_automorphism();
  return out;
}

// ---------------------------------------------------------------------------
// Scalars, algebra elements, derivations

inline json scalar_json(const GaussianRational& c) {
  return json{{"re", rational_string(c.re())}, {"im", rational_string(c.im())}};
}

inline GaussianRational scalar_from_json(const json& j) {
  auto part = [&](const char* key) -> mpq_class {
    if (!j.contains(key)) return 0;
    const auto& v = j.at(key);
    if (v.is_number_integer()) return mpq_class(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return parse_rational(v.get<std::string>());
    fail(ErrorKind::SpecError, std::string("coefficient part '") + key + "' must be a string or integer");
  };
  return GaussianRational(part("re"), part("im"));
}

template <DiscreteGroup G>
json algebra_json(const AlgebraElement<G>& f) {
  json terms = json::array();
  for (const auto& [g, c] : f.terms()) {
    json t = json::object();
    t["elem"] = element_json(g);
    t["re"] = rational_string(c.re());
    t["im"] = rational_string(c.im());
    terms.push_back(std::move(t));
  }
  return json{{"terms", std::move(terms)}};
}

template <DiscreteGroup G>
AlgebraElement<G> algebra_from_json(const GroupPtr<G>& group, const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
    fail(ErrorKind::SpecError, "algebra element must be {\"terms\": [...]}");
  }
  AlgebraElement<G> f(group);
  for (const auto& t : j.at("terms")) {
    if (!t.contains("elem")) fail(ErrorKind::SpecError, "term lacks 'elem'");
    f.add_term(element_from_json(*group, t.at("elem")), scalar_from_json(t));
  }
  return f;
}

template <DiscreteGroup G>
Potential<G> potential_from_json(const GroupPtr<G>& group, const json& j) {
  Potential<G> P;
  auto f = algebra_from_json(group, j);
  for (const auto& [g, c] : f.terms()) P.add(g, c);
  return P;
}

template <DiscreteGroup G>
json derivation_json(const DerivationTable<G>& D) {
  json values = json::object();
  for (const auto& [g, f] : D.values()) values[element_string(g)] = algebra_json(f);
  json out = json::object();
  out["D"] = std::move(values);
  if (D.generator_defined()) out["generator_defined"] = true;
  return out;
}

template <DiscreteGroup G>
DerivationTable<G> derivation_from_json(const Endomorphism<G>& sigma, const Endomorphism<G>& tau, const json& j) {
  if (!j.is_object() || !j.contains("D") || !j.at("D").is_object()) {
    fail(ErrorKind::SpecError, "derivation must be {\"D\": {elem: algebra element}}");
  }
  typename DerivationTable<G>::Values values;
  for (const auto& [key, value] : j.at("D").items()) {
    auto g = parse_element(*sigma.group(), key);
    if (!values.emplace(g, algebra_from_json(sigma.group(), value)).second) {
      fail(ErrorKind::SpecError, "element " + key + " listed twice");
    }
  }
  return DerivationTable<G>(sigma, tau, std::move(values), j.value("generator_defined", false));
}

template <DiscreteGroup G>
json morphism_json(const Morphism<Elem<G>>& m) {
  return json{{"u", element_json(m.u)}, {"v", element_json(m.v)}};
}

// ---------------------------------------------------------------------------
// Reports

inline json decomposition_json(const DecompositionReport& r) {
  json classes = json::array();
  for (const auto& c : r.classes) {
    json x = json::object();
    x["representative"] = c.representative;
    x["size"] = c.size;
    x["centralizer_size"] = c.centralizer_size;
    x["commutator_size"] = c.commutator_size;
    x["abelianization_order"] = c.abelianization_order;
    x["abelianization_rank"] = 0;
    x["character_dimension"] = c.character_dimension;
    x["periodic"] = c.periodic;
    classes.push_back(std::move(x));
  }
  json out = json::object();
  out["dim_der"] = r.dim_der;
  out["dim_inn"] = r.dim_inn;
  out["inner_kernel_dimension"] = r.inner_kernel_dimension;
  out["sum_char_dims"] = r.sum_char_dims;
  out["dims_match"] = r.dims_match;
  out["every_basis_vector_inner"] = r.all_inner;
  out["classes"] = std::move(classes);
  out["center"] = r.center;
  if (r.nilpotent_rank2) out["nilpotent_rank2"] = *r.nilpotent_rank2;
  else out["nilpotent_rank2"] = nullptr, out["nilpotent_rank2_error"] = r.nilpotent_rank2_error;
  out["sigma_tau_abelian"] = r.sigma_tau_abelian;
  out["fc"] = std::string(to_string(r.fc));
  out["periodic_criterion"] = r.periodic_criterion;
  return out;
}

inline json error_json(const Error& e) {
  return json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}, {"exit_code", exit_code(e.kind())}};
}

}  // namespace twistder::io
