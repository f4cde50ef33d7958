// Command-line front end: group-info, classes, centralizers, center,
// derivations <action>, groupoid-export.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "twistder/dot.hpp"
#include "twistder/io.hpp"

namespace {

using namespace twistder;
using io::json;

constexpr const char* kToolVersion = "1.0.0";

struct Job {
  std::string command;
  std::string action;  // derivations only
  std::string group = "builtin:trivial";
  std::string sigma = "id";
  std::string tau = "id";
  std::size_t radius = 4;
  bool radius_given = false;
  std::optional<std::string> element;
  std::optional<std::string> params;
  long long mu = 0, nu = 0, r = 0;
  std::size_t check_radius = 3;
  std::optional<std::string> phi;
  std::optional<std::string> potential;
  std::optional<std::string> derivation;
  unsigned seed = 0;
  std::optional<std::string> output;
  std::string format = "json";

  json to_json() const {
    json j = json::object();
    j["command"] = command;
    if (!action.empty()) j["action"] = action;
    j["group"] = group;
    j["sigma"] = sigma;
    j["tau"] = tau;
    j["radius"] = radius;
    if (element) j["element"] = *element;
    if (params) j["params"] = *params;
    if (command == "derivations" && action == "central") {
      j["mu"] = mu;
      j["nu"] = nu;
      j["r"] = r;
      j["check_radius"] = check_radius;
      if (phi) j["phi"] = *phi;
    }
    if (potential) j["potential"] = *potential;
    if (derivation) j["derivation"] = *derivation;
    j["seed"] = seed;
    if (output) j["output"] = *output;
    j["format"] = format;
    return j;
  }
};

// Flat "path = value" lines for --format text.
void flatten(const json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << " = " << j.dump() << "\n";
  }
}

void emit(const Job& job, const std::string& text) {
  if (job.output) {
    std::ofstream f(*job.output, std::ios::binary);
    if (!f) fail(ErrorKind::SpecError, "cannot write " + *job.output);
    f << text;
  } else {
    std::cout << text;
  }
}

template <DiscreteGroup G>
json group_json(const G& grp) {
  json j = json::object();
  j["name"] = grp.name();
  if constexpr (G::is_finite) {
    j["order"] = grp.order();
    if (!grp.labels().empty()) j["labels"] = grp.labels();
  } else {
    j["order"] = nullptr;
  }
  j["generators"] = io::elements_json<G>(grp.generators());
  return j;
}

template <DiscreteGroup G>
Elem<G> element_arg(const Job& job, const G& grp) {
  if (!job.element) fail(ErrorKind::SpecError, "--element is required for this command");
  return io::parse_element(grp, *job.element);
}

template <DiscreteGroup G>
std::vector<Elem<G>> examined_elements(const Job& job, const G& grp) {
  if (job.element) return {io::parse_element(grp, *job.element)};
  if constexpr (G::is_finite) return grp.elements();
  else return ball(grp, 1);
}

io::json class_json(const GroupoidView<FiniteGroup>& view, FiniteGroup::element_type a) {
  auto cls = view.conjugacy_class(a);
  return json{{"representative", a}, {"size", cls.elements.size()}, {"elements", cls.elements}, {"truncated", false}};
}

io::json class_json(const GroupoidView<HeisenbergGroup>& view, const Triple& a) {
  auto cls = view.conjugacy_class(a);
  json j = json::object();
  j["representative"] = io::element_json(a);
  if (cls.truncated) j["size"] = "infinite-in-ball";
  else j["size"] = cls.elements.size();
  j["elements_in_ball"] = cls.elements.size();
  j["elements"] = io::elements_json<HeisenbergGroup>(cls.elements);
  j["truncated"] = cls.truncated;
  return j;
}

template <DiscreteGroup G>
json cmd_classes(const Job& job, const GroupoidView<G>& view) {
  const auto& grp = *view.group();
  json classes = json::array();
  json sizes = json::array();
  if constexpr (G::is_finite) {
    if (!job.element) {
      std::vector<std::size_t> sorted;
      for (const auto& cls : view.components()) {
        classes.push_back(class_json(view, cls.front()));
        sorted.push_back(cls.size());
      }
      // classes are listed by least element, sizes ascending
      std::sort(sorted.begin(), sorted.end());
      return json{{"count", classes.size()}, {"sizes", sorted}, {"classes", classes}};
    }
  }
  for (const auto& a : examined_elements(job, grp)) {
    auto c = class_json(view, a);
    sizes.push_back(c["size"]);
    classes.push_back(std::move(c));
  }
  return json{{"count", classes.size()}, {"sizes", sizes}, {"classes", classes}};
}

template <DiscreteGroup G>
json cmd_centralizers(const Job& job, const GroupoidView<G>& view) {
  json out = json::array();
  for (const auto& u : examined_elements(job, *view.group())) {
    json j = json::object();
    j["element"] = io::element_json(u);
    if constexpr (G::is_finite) {
      auto Z = view.centralizer(u);
      j["size"] = Z.size();
      j["elements"] = Z;
    } else {
      auto Z = view.centralizer(u);
      j["description"] = Z.to_string();
      j["abelianization_rank"] = Z.abelianization_rank();
    }
    out.push_back(std::move(j));
  }
  return json{{"centralizers", out}};
}

template <DiscreteGroup G>
json cmd_center(const GroupoidView<G>& view) {
  if constexpr (G::is_finite) {
    auto Z = view.center();
    return json{{"size", Z.size()}, {"elements", Z}};
  } else {
    auto Z = view.center();
    return json{{"description", Z.to_string()}, {"size", "infinite"}};
  }
}

template <DiscreteGroup G>
json cmd_group_info(const Job& job, const GroupoidView<G>& view) {
  const auto& grp = *view.group();
  json j = json::object();
  j["sigma"] = io::endomorphism_json(view.sigma());
  j["tau"] = io::endomorphism_json(view.tau());
  j["is_sigma_tau_abelian"] = is_sigma_tau_abelian(view.sigma(), view.tau());
  j["is_fc"] = std::string(to_string(is_fc(view.sigma(), view.tau(), job.radius)));
  try {
    j["is_rank2_nilpotent"] = is_rank2_nilpotent(view.sigma(), view.tau());
  } catch (const Error& e) {
    j["is_rank2_nilpotent"] = nullptr;
    j["is_rank2_nilpotent_error"] = e.what();
  }
  try {
    j["center"] = cmd_center(view);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotSupportedForScope) throw;
    j["center"] = nullptr;
  }
  json summary = json::array();
  if constexpr (G::is_finite) {
    for (const auto& cls : view.components()) {
      summary.push_back(json{{"representative", cls.front()},
                             {"size", cls.size()},
                             {"centralizer_size", view.centralizer(cls.front()).size()},
                             {"character_dimension", 0}});
    }
  } else {
    for (const auto& a : ball(grp, 1)) {
      auto c = class_json(view, a);
      json s{{"representative", c["representative"]}, {"size", c["size"]}};
      try {
        auto Z = view.centralizer(a);
        s["centralizer"] = Z.to_string();
        s["character_dimension"] = character_space_dimension(Z);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotSupportedForScope) throw;
      }
      summary.push_back(std::move(s));
    }
  }
  j["class_summary"] = std::move(summary);
  return j;
}

// ---------------------------------------------------------------------------
// derivations

std::vector<GaussianRational> parse_scalar_list(const std::string& text) {
  std::vector<GaussianRational> out;
  for (const auto& item : io::detail::split_top_level(text)) out.emplace_back(parse_rational(item));
  return out;
}

HeisenbergParams parse_params(const std::string& text) {
  auto items = io::detail::split_top_level(text);
  if (items.size() != 4) fail(ErrorKind::SpecError, "--params needs sigma_a,sigma_b,sigma_c,tau_c");
  return {io::parse_integer(items[0], "sigma_a"), io::parse_integer(items[1], "sigma_b"),
          io::parse_integer(items[2], "sigma_c"), io::parse_integer(items[3], "tau_c")};
}

template <DiscreteGroup G>
json leibniz_json(const LeibnizResult<G>& res) {
  json v = json::array();
  for (const auto& x : res.violations) {
    v.push_back(json{{"g2", io::element_json(x.g2)},
                     {"g1", io::element_json(x.g1)},
                     {"lhs", io::algebra_json(x.lhs)},
                     {"rhs", io::algebra_json(x.rhs)}});
  }
  return json{{"leibniz_ok", res.ok()}, {"pairs_checked", res.pairs_checked}, {"violations", v}};
}

template <DiscreteGroup G>
json quasi_json(const QuasiInnerResult<G>& q) {
  json j{{"quasi_inner", q.quasi_inner}};
  if (q.loop_witness) {
    j["loop_witness"] = io::morphism_json<G>(*q.loop_witness);
    j["value"] = io::scalar_json(q.value);
  }
  return j;
}

template <DiscreteGroup G>
DerivationTable<G> load_derivation(const Job& job, const GroupoidView<G>& view) {
  if (!job.derivation) fail(ErrorKind::SpecError, "--derivation <file> is required");
  return io::derivation_from_json(view.sigma(), view.tau(), io::parse_json(io::read_file(*job.derivation), *job.derivation));
}

template <DiscreteGroup G>
void require_derivation(const LeibnizResult<G>& res) {
  if (res.ok()) return;
  const auto& x = res.violations.front();
  fail(ErrorKind::NotADerivation, "Leibniz fails at (" + element_string(x.g2) + ", " + element_string(x.g1) +
                                      "): " + x.lhs.to_string() + " != " + x.rhs.to_string());
}

/// Leibniz pairs for a table on a scope: the whole finite group, or the
/// half-radius ball so that products stay inside.
template <DiscreteGroup G>
LeibnizResult<G> check_on_scope(const DerivationTable<G>& D, const Scope<G>& scope) {
  if constexpr (G::is_finite) {
    (void)scope;
    return check_leibniz(D);
  } else {
    return check_leibniz(D, ball(*D.group(), *scope.radius() / 2));
  }
}

json derivations_finite(const Job& job, const GroupoidView<FiniteGroup>& view) {
  const auto& sigma = view.sigma();
  const auto& tau = view.tau();
  const auto& a = job.action;
  if (a == "dim" || a == "basis") {
    auto space = derivation_space(sigma, tau);
    auto inner = inner_space(sigma, tau);
    json j = json::object();
    j["dimension"] = space.dimension;
    j["inner_dimension"] = inner.dimension;
    j["inner_kernel_dimension"] = inner.kernel_dimension;
    if (a == "basis") {
      bool all_inner = true;
      json basis = json::array();
      for (const auto& D : space.basis) {
        all_inner = all_inner && is_inner(D).inner;
        basis.push_back(io::derivation_json(D));
      }
      j["all_inner"] = all_inner;
      j["basis"] = std::move(basis);
    }
    return j;
  }
  if (a == "check-inner") {
    auto D = load_derivation(job, view);
    // elements left out of the file carry the zero value
    auto values = D.values();
    for (auto g : view.group()->elements()) values.try_emplace(g, view.group());
    D = DerivationTable<FiniteGroup>(view.sigma(), view.tau(), std::move(values));
    require_derivation(check_leibniz(D));
    auto res = is_inner(D);
    json j{{"inner", res.inner}, {"kernel_dimension", res.kernel_dimension}};
    if (res.witness) j["witness"] = io::algebra_json(*res.witness);
    return j;
  }
  if (a == "verify-decomposition") return io::decomposition_json(verify_decomposition(sigma, tau));
  fail(ErrorKind::SpecError, "unhandled action " + a);
}

template <DiscreteGroup G>
json derivations_quasi_inner(const Job& job, const GroupoidView<G>& view) {
  json j = json::object();
  if (job.potential) {
    auto P = io::potential_from_json(view.group(), io::parse_json(io::read_file(*job.potential), *job.potential));
    auto D = quasi_inner_from_potential(view.sigma(), view.tau(), P, view.scope());
    j["leibniz"] = leibniz_json(check_on_scope(D, view.scope()));
    j["quasi"] = quasi_json(is_quasi_inner(D));
    j["derivation"] = io::derivation_json(D);
    return j;
  }
  auto D = load_derivation(job, view);
  if constexpr (!G::is_finite) {
    if (D.generator_defined()) D = extend_to_ball(D, view.scope().radius().value());
  }
  auto leib = check_on_scope(D, view.scope());
  require_derivation(leib);
  j["leibniz"] = leibniz_json(leib);
  j["quasi"] = quasi_json(is_quasi_inner(D));
  return j;
}

template <DiscreteGroup G>
json derivations_central(const Job& job, const GroupoidView<G>& view) {
  json j = json::object();
  if constexpr (G::is_finite) {
    auto a = element_arg(job, *view.group());
    std::vector<GaussianRational> values(view.group()->generators().size());
    if (job.phi) values = parse_scalar_list(*job.phi);
    auto phi = make_additive_character(view.group(), values);
    auto D = central_derivation(view.sigma(), view.tau(), a, phi);
    j["leibniz"] = leibniz_json(check_leibniz(D));
    j["quasi"] = quasi_json(is_quasi_inner(D));
    j["derivation"] = io::derivation_json(D);
  } else {
    std::optional<HeisenbergParams> params;
    DerivationTable<HeisenbergGroup> gen = [&] {
      if (job.params) {
        params = parse_params(*job.params);
        return heisenberg_central_family(*params, job.mu, job.nu, job.r);
      }
      auto a = job.element ? io::parse_element(*view.group(), *job.element) : HeisenbergGroup::z(job.r);
      auto phi = make_additive_character(view.group(), {GaussianRational(static_cast<long>(job.mu)),
                                                        GaussianRational(static_cast<long>(job.nu))});
      return central_derivation(view.sigma(), view.tau(), a, phi);
    }();
    auto D = extend_to_ball(gen, 2 * job.check_radius);
    j["generator_values"] = io::derivation_json(gen);
    j["leibniz"] = leibniz_json(check_leibniz(D, ball(*view.group(), job.check_radius)));
    j["quasi"] = quasi_json(is_quasi_inner(D));
    if (params) {
      bool agrees = true;
      for (const auto& [g, f] : D.values()) {
        if (!(f == heisenberg_central_closed_form(*params, job.mu, job.nu, job.r, g))) {
          agrees = false;
          break;
        }
      }
      j["closed_form_agrees"] = agrees;
      j["sigma"] = io::endomorphism_json(gen.sigma());
      j["tau"] = io::endomorphism_json(gen.tau());
    }
    j["ball_radius"] = 2 * job.check_radius;
  }
  return j;
}

template <DiscreteGroup G>
json cmd_derivations(const Job& job, const GroupoidView<G>& view) {
  if (job.action == "quasi-inner") return derivations_quasi_inner(job, view);
  if (job.action == "central") return derivations_central(job, view);
  if constexpr (G::is_finite) {
    return derivations_finite(job, view);
  } else {
    fail(ErrorKind::NotSupportedForScope, "derivations " + job.action + " needs a finite group");
  }
}

// ---------------------------------------------------------------------------

template <DiscreteGroup G>
std::string run(const Job& job, const GroupPtr<G>& group) {
  const auto& grp = *group;
  auto sigma = io::parse_endomorphism_spec(group, job.sigma);
  auto tau = io::parse_endomorphism_spec(group, job.tau);
  GroupoidView<G> view(sigma, tau, default_scope(grp, job.radius));

  if (job.command == "groupoid-export" && job.format == "dot") {
    if constexpr (!G::is_finite) {
      if (!job.radius_given) fail(ErrorKind::ScopeExceeded, "groupoid-export on an infinite group needs --radius");
    }
    return groupoid_dot(view);
  }
  if (job.format == "dot") fail(ErrorKind::SpecError, "--format dot is only available for groupoid-export");

  json result;
  if (job.command == "group-info") result = cmd_group_info(job, view);
  else if (job.command == "classes") result = cmd_classes(job, view);
  else if (job.command == "centralizers") result = cmd_centralizers(job, view);
  else if (job.command == "center") result = cmd_center(view);
  else if (job.command == "derivations") result = cmd_derivations(job, view);
  else if (job.command == "groupoid-export") {
    if constexpr (!G::is_finite) {
      if (!job.radius_given) fail(ErrorKind::ScopeExceeded, "groupoid-export on an infinite group needs --radius");
    }
    json comps = json::array();
    if constexpr (G::is_finite) {
      for (const auto& c : view.components()) comps.push_back(c);
    }
    result = json{{"components", comps}, {"dot", groupoid_dot(view)}};
  }

  json report = json::object();
  report["tool_version"] = kToolVersion;
  report["job"] = job.to_json();
  report["group"] = group_json(grp);
  if constexpr (!G::is_finite) report["radius"] = job.radius;
  report["result"] = std::move(result);
  if (job.format == "text") {
    std::ostringstream out;
    flatten(report, "", out);
    return out.str();
  }
  return report.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  Job job;
  CLI::App app{"Exact (sigma,tau)-derivations of group algebras"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);

  app.add_option("--group", job.group, "builtin:<name> or file:<path>")->required();
  app.add_option("--sigma", job.sigma, "id | inner:<elem> | images:{gen:elem,...} | file:<path>");
  app.add_option("--tau", job.tau, "id | inner:<elem> | images:{gen:elem,...} | file:<path>");
  auto* radius = app.add_option("--radius", job.radius, "ball radius on heisenberg_Z (default 4)");
  app.add_option("--element", job.element, "element: index, label or [a,b,c]");
  app.add_option("--params", job.params, "sigma_a,sigma_b,sigma_c,tau_c for the Heisenberg family");
  app.add_option("--mu", job.mu, "additive character value on x");
  app.add_option("--nu", job.nu, "additive character value on y");
  app.add_option("--r", job.r, "central element (0,0,r)");
  app.add_option("--check-radius", job.check_radius, "Leibniz check radius (default 3)");
  app.add_option("--phi", job.phi, "additive character values on the generators (finite groups)");
  app.add_option("--potential", job.potential, "potential JSON file");
  app.add_option("--derivation", job.derivation, "derivation JSON file");
  app.add_option("--seed", job.seed, "seed for sampled checks");
  app.add_option("--output", job.output, "write the report to this file");
  app.add_option("--format", job.format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));

  for (const char* name : {"group-info", "classes", "centralizers", "center", "groupoid-export"}) {
    app.add_subcommand(name)->fallthrough();
  }
  auto* deriv = app.add_subcommand("derivations")->fallthrough();
  deriv->add_option("action", job.action, "dim|basis|check-inner|verify-decomposition|quasi-inner|central")
      ->required()
      ->check(CLI::IsMember({"dim", "basis", "check-inner", "verify-decomposition", "quasi-inner", "central"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << json{{"error", "SpecError"}, {"message", e.what()}, {"exit_code", 2}}.dump() << "\n";
    return 2;
  }
  job.command = app.get_subcommands().front()->get_name();
  job.radius_given = radius->count() > 0;

  try {
    auto group = io::parse_group_spec(job.group);
    auto text = std::visit([&](const auto& g) { return run(job, g); }, group);
    emit(job, text);
    return 0;
  } catch (const Error& e) {
    std::cerr << io::error_json(e).dump() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InternalError"}, {"message", e.what()}, {"exit_code", 1}}.dump() << "\n";
    return 1;
  }
}
