// Command-line front end. Every command builds a JSON report; --json prints it
// as is, otherwise a short text rendering. Exit codes: 0 pass, 1 verdict
// fail, 2 input error, 3 budget exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "strat/builtins.hpp"
#include "strat/dot.hpp"
#include "strat/io.hpp"

using namespace strat;
using io::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240917;

struct Options {
  bool json = false;
  bool dot = false;
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = kDefaultBudget;
  std::optional<std::size_t> bound;
};

struct Outcome {
  int code = 0;
  json result = json::object();
  std::string dot;  // printed instead of the report when --dot is given
};

struct Input {
  json value;
  std::string path;
  std::string digest;
};

Input load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  Input out{{}, path, io::digest(buf.str())};
  try {
    out.value = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
  return out;
}

std::string verdict_name(int code) {
  switch (code) {
    case 0: return "pass";
    case 1: return "fail";
    case 3: return "budget";
    default: return "error";
  }
}

void print_text(const json& j, const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() && !value.empty()) {
      std::cout << indent << key << ":\n";
      print_text(value, indent + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      std::cout << indent << key << ":\n";
      for (const auto& row : value) std::cout << indent << "  " << row.dump() << "\n";
    } else {
      std::cout << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

// ---------------------------------------------------------------------------
// Commands

Outcome cmd_nerve(const Poset& p) {
  Outcome o;
  json names = json::array();
  std::vector<int> counts;
  for (const Chain& c : chains(p)) {
    names.push_back(p.chain_name(c));
    if (counts.size() < c.size()) counts.resize(c.size(), 0);
    ++counts[c.size() - 1];
  }
  o.result = {{"elements", p.size()}, {"chains", names}, {"chains_by_length", counts}, {"height", p.height()}};
  o.dot = dot::chain_category(p);
  return o;
}

Outcome cmd_spi0(const FilteredSSet& k, const std::optional<std::string>& chain, const Options& opt) {
  Outcome o;
  const SPi0 s = spi0(k, opt.budget);
  json table = io::to_json(s);
  if (chain) {
    const std::string wanted = k.base.chain_name(k.base.parse_chain(*chain));
    json kept = json::array();
    for (const auto& row : table)
      if (row.at("chain") == wanted) kept.push_back(row);
    table = kept;
  }
  o.result = {{"chains", s.chains.size()}, {"table", table}};
  o.dot = dot::spi0(s);
  return o;
}

Outcome cmd_pointing(const FilteredSSet& k) {
  Outcome o;
  const GlobalPointing g = global_pointing_exists(k);
  o.result = {{"exists", g.exists}};
  if (g.exists) o.result["witness"] = io::map_to_json(nerve(k.base).body, k.body, g.witness)["images"];
  o.code = g.exists ? 0 : 1;
  return o;
}

Outcome cmd_colim(const Diagram& f, const Options& opt) {
  Outcome o;
  const DiagramColimit c = colim_diagram(f, opt.budget);
  json dims = json::array();
  for (int d = 0; d <= c.value.body.dimension(); ++d) dims.push_back(c.value.body.generators_of_dim(d).size());
  int max_dim = 0;
  for (const auto& v : f.functor.values) max_dim = std::max(max_dim, v.dimension());
  const int bound = opt.bound ? static_cast<int>(*opt.bound) : 4;
  json legs = json::object();
  bool all_mono = true;
  for (int ch = 0; ch < f.chains.size(); ++ch) {
    const int obj = c.diagonal_object(ch);
    const bool mono = injective_through(c.tensor.value(obj).body, c.colimit.legs[obj], bound);
    legs[f.base.chain_name(f.chains[ch])] = mono;
    all_mono = all_mono && mono;
  }
  const int degrees = default_degree_bound(f.base, max_dim);
  const AlmostFilteredVerdict af = almost_filtered(forgetful(c.tensor.functor, degrees));
  o.result = {{"generators_by_dimension", dims},
              {"legs_injective_through_degree", bound},
              {"legs", legs},
              {"almost_filtered", af.holds},
              {"almost_filtered_complete", af.complete},
              {"forgetful_degree_bound", degrees}};
  o.code = all_mono && af.holds ? 0 : 1;
  return o;
}

Outcome cmd_almost_filtered(const SetDiagram& g, const Options& opt) {
  Outcome o;
  const AlmostFilteredVerdict v = almost_filtered(g, opt.bound);
  const SetColimit c = set_colim(g);
  json mono = json::object();
  for (int obj = 0; obj < g.shape.size(); ++obj) mono[g.shape.name(obj)] = mono_into_colim(g, obj);
  o.result = {{"verdict", io::to_json(v, g)}, {"colimit_classes", c.classes}, {"mono_into_colim", mono}};
  o.code = v.holds ? 0 : 1;
  o.dot = dot::diagram_shape(g);
  return o;
}

Outcome cmd_lift(const json& j) {
  Outcome o;
  LiftingProblem prob;
  prob.a = io::filtered_from_json(j.at("a"));
  prob.b = io::filtered_from_json(j.at("b"));
  prob.x = io::filtered_from_json(j.at("x"));
  prob.y = io::filtered_from_json(j.at("y"));
  prob.i = io::map_from_json(prob.a.body, prob.b.body, j.at("i"));
  prob.p = io::map_from_json(prob.x.body, prob.y.body, j.at("p"));
  prob.top = io::map_from_json(prob.a.body, prob.x.body, j.at("top"));
  prob.bottom = io::map_from_json(prob.b.body, prob.y.body, j.at("bottom"));
  const auto lift = find_lift(prob);
  o.result = {{"lift_exists", lift.has_value()}};
  if (lift) o.result["lift"] = io::map_to_json(prob.b.body, prob.x.body, *lift)["images"];
  o.code = lift ? 0 : 1;
  return o;
}

Outcome cmd_rlp(const json& j, const std::string& cells, int n_max, std::size_t cap) {
  Outcome o;
  const FilteredSSet x = io::filtered_from_json(j.at("source"));
  const FilteredSSet y = io::filtered_from_json(j.at("target"));
  const SMap p = io::map_from_json(x.body, y.body, j.at("map"));
  const GeneratingSets g = generating_sets(x.base, n_max);
  const auto& list = cells == "I" ? g.cofibrations : g.trivial_cofibrations;
  const RlpVerdict v = rlp_against(x, y, p, x.base, list, cap);
  o.result = {{"cells", list.size()}, {"squares", v.squares}};
  if (v.failing_cell) o.result["cell"] = io::to_json(*v.failing_cell, x.base);
  if (v.status == RlpVerdict::Status::Fail) {
    const CellInclusion inc = realize(x.base, *v.failing_cell);
    o.result["top"] = io::map_to_json(inc.source.body, x.body, v.top)["images"];
    o.result["bottom"] = io::map_to_json(inc.target.body, y.body, v.bottom)["images"];
  }
  o.code = v.status == RlpVerdict::Status::Pass ? 0 : v.status == RlpVerdict::Status::Fail ? 1 : 3;
  return o;
}

// Elements in order of first appearance, as a total order.
Poset order_of_appearance(const std::vector<std::string>& texts) {
  std::vector<std::string> names;
  for (const auto& t : texts) {
    std::stringstream in(t);
    std::string item;
    while (std::getline(in, item, t.find('<') != std::string::npos ? '<' : ','))
      if (std::find(names.begin(), names.end(), item) == names.end()) names.push_back(item);
  }
  return Poset::total_order(names);
}

Outcome cmd_retract(const Poset& p, const std::string& phi_text) {
  Outcome o;
  const Retract r = retract_decompose(p, io::parse_tuple(p, phi_text));
  const bool identity = compose(r.retraction, r.section) == identity_map(r.simplex.body);
  const bool section_ok = !filtered_violation(r.simplex, r.middle.value, r.section);
  const bool retraction_ok = !filtered_violation(r.middle.value, r.simplex, r.retraction);
  json vertex_map = json::object();
  for (std::size_t l = 0; l < r.phibar.size(); ++l) vertex_map[p.name(r.phibar[l])] = r.vertex_map[l];
  o.result = {{"phibar", p.chain_name(r.phibar)},
              {"middle_generators", r.middle.value.size()},
              {"vertex_map", vertex_map},
              {"composite_is_identity", identity},
              {"section_filtered", section_ok},
              {"retraction_filtered", retraction_ok}};
  o.code = identity && section_ok && retraction_ok ? 0 : 1;
  return o;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "not a number: '" + item + "'");
    }
  }
  return out;
}

Outcome cmd_deform(const Poset& p, const std::string& psi_text, const std::string& targets_text,
                   const std::string& point_text, double s) {
  Outcome o;
  const Chain psi = p.parse_chain(psi_text);
  const Chain targets = p.parse_chain(targets_text);
  const RealPoint x = canonicalize(p, psi, parse_doubles(point_text));
  const RealPoint h = stratum_deformation(p, psi, targets, x, s);
  o.result = {{"input", io::to_json(x, p)}, {"output", io::to_json(h, p)}, {"stratum", p.name(phi_p(h))}};
  return o;
}

Outcome cmd_glue(const Poset& p, std::size_t samples, std::uint64_t seed) {
  Outcome o;
  const NumericSuiteReport r = numeric_suite(p, samples, seed);
  o.result = {{"pairs", r.pairs},
              {"samples", r.samples},
              {"max_sum_error", r.max_sum_error},
              {"stratum_failures", r.stratum_failures},
              {"endpoint_failures", r.endpoint_failures},
              {"max_glue_deviation", r.max_glue_deviation}};
  o.code = r.passed() ? 0 : 1;
  return o;
}

json comparison_json(const Spi0Comparison& c, const Poset& base) {
  json out{{"isomorphism", c.isomorphism}};
  if (c.first_failure)
    out["first_failure"] = {{"chain", base.chain_name(*c.first_failure)},
                            {"source_classes", c.source_size},
                            {"target_classes", c.target_size}};
  return out;
}

Outcome cmd_compare(const json& j, const Options& opt) {
  Outcome o;
  const FilteredSSet x = io::filtered_from_json(j.at("source"));
  const FilteredSSet y = io::filtered_from_json(j.at("target"));
  const SMap f = io::map_from_json(x.body, y.body, j.at("map"));
  Spi0Comparison c;
  if (j.contains("alpha")) {
    const StratifiedMap m{x, y, io::poset_map_from_json(x.base, y.base, j.at("alpha")), f};
    try {
      c = spi0_compare_stratified(m, opt.budget);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotAnIsomorphismOfPosets) throw;
      // Without an isomorphism of bases, compare the pushed-forward map over the target poset.
      const Factorization fac = factorize(m);
      c = compare_spi0(fac.pushed, y, fac.from_pushforward, opt.budget);
      o.result["compared_over"] = "target poset";
    }
  } else {
    c = compare_spi0(x, y, f, opt.budget);
  }
  o.result.update(comparison_json(c, y.base));
  o.code = c.isomorphism ? 0 : 1;
  return o;
}

Outcome cmd_builtin(const std::string& name, bool emit, const Options& opt) {
  Outcome o;
  bool reproduced = false;
  if (name == "swapped-square") {
    const SetDiagram g = builtins::swapped_square();
    if (emit) return {0, io::to_json(g), ""};
    o = cmd_almost_filtered(g, opt);
    const auto& v = o.result.at("verdict");
    reproduced = o.result.at("colimit_classes") == 1 && !v.at("holds").get<bool>();
    for (const auto& [obj, mono] : o.result.at("mono_into_colim").items()) reproduced = reproduced && !mono.get<bool>();
  } else if (name == "hexagon-annulus") {
    const FilteredSSet k = builtins::hexagon_annulus();
    if (emit) return {0, io::to_json(k), ""};
    const SPi0 s = spi0(k, opt.budget);
    bool singletons = true;
    for (int c = 0; c < s.chains.size(); ++c) singletons = singletons && s.size(c) == 1;
    const bool pointing = global_pointing_exists(k).exists;
    o.result = {{"chains", s.chains.size()}, {"one_class_on_every_chain", singletons}, {"global_pointing", pointing}};
    o.dot = dot::spi0(s);
    reproduced = singletons && !pointing && s.chains.size() == 25;
  } else if (name == "collapsing-base") {
    const auto c = builtins::collapsing_base();
    if (emit) return {0, {{"source", io::to_json(c.x)}, {"target", io::to_json(c.pulled_pushed.value)},
                          {"map", io::map_to_json(c.x.body, c.pulled_pushed.value.body, c.unit)}}, ""};
    const Spi0Comparison r = compare_spi0(c.x, c.pulled_pushed.value, c.unit, opt.budget);
    o.result = {{"unit", comparison_json(r, c.x.base)}};
    reproduced = !r.isomorphism && r.first_failure && c.x.base.chain_name(*r.first_failure) == "p1";
  } else if (name == "missing-stratum") {
    const auto c = builtins::missing_stratum();
    if (emit) return {0, io::to_json(c.y), ""};
    o.result = {{"pullback_generators", c.pulled.value.size()}, {"counit_source_empty", c.pushed_pulled.empty()}};
    reproduced = c.pushed_pulled.empty() && !c.y.empty();
  } else if (name == "reordered-base") {
    const StratifiedMap f = builtins::reordered_base();
    if (emit) return {0, {{"source", io::to_json(f.source)}, {"target", io::to_json(f.target)},
                          {"alpha", io::to_json(f.alpha)},
                          {"map", io::map_to_json(f.source.body, f.target.body, f.map)}}, ""};
    const Factorization fac = factorize(f);
    const Spi0Comparison adjoint = compare_spi0(f.source, fac.pulled.value, fac.to_pullback, opt.budget);
    const Spi0Comparison pushed = compare_spi0(fac.pushed, f.target, fac.from_pushforward, opt.budget);
    o.result = {{"adjoint_into_pullback", comparison_json(adjoint, f.source.base)},
                {"from_pushforward", comparison_json(pushed, f.target.base)}};
    reproduced = adjoint.isomorphism && !pushed.isomorphism && pushed.first_failure &&
                 f.target.base.chain_name(*pushed.first_failure) == "q0<q1";
  } else {
    std::string list;
    for (const auto& n : builtins::names()) list += " " + n;
    throw Error(ErrorKind::UsageError, "unknown builtin '" + name + "'; available:" + list);
  }
  o.result["reproduced"] = reproduced;
  o.code = reproduced ? 0 : 1;
  return o;
}

Outcome cmd_export_dot(const json& j, const std::string& object) {
  Outcome o;
  if (object == "poset") o.dot = dot::poset(io::poset_from_json(j));
  else if (object == "chains") o.dot = dot::chain_category(io::poset_from_json(j));
  else if (object == "shape") o.dot = dot::diagram_shape(io::set_diagram_from_json(j));
  else if (object == "spi0") o.dot = dot::spi0(spi0(io::filtered_from_json(j)));
  else throw Error(ErrorKind::UnsupportedObject, "cannot export '" + object + "' (poset, chains, shape, spi0)");
  return o;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded: return 3;
    case ErrorKind::BijectionFailure:
    case ErrorKind::NaturalityFailure:
    case ErrorKind::GlueMismatch: return 1;
    default: return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite combinatorics of stratified and filtered simplicial sets"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  std::size_t bound = 0;
  app.add_flag("--json", opt.json, "print the full JSON report");
  app.add_flag("--dot", opt.dot, "print a DOT graph where the command has one");
  app.add_option("--seed", opt.seed, "seed for randomized suites")->default_val(kDefaultSeed);
  app.add_option("--budget", opt.budget, "cap on materialized simplices and enumerated maps")->default_val(kDefaultBudget);
  auto* bound_opt = app.add_option("--bound", bound, "zigzag bound (almost-filtered) or degree bound (colim)");

  std::string file, chain, cells = "I", phi, poset_file, psi, targets, point, object, name;
  int n_max = 1;
  std::size_t cap = 10'000, samples = 1000;
  double s = 0;
  bool emit = false;

  auto* nerve_cmd = app.add_subcommand("nerve", "chains of a poset");
  nerve_cmd->add_option("poset", file, "poset JSON")->required();
  auto* spi0_cmd = app.add_subcommand("spi0", "stratified components of a filtered simplicial set");
  spi0_cmd->add_option("filtered", file, "filtered simplicial set JSON")->required();
  auto* chain_opt = spi0_cmd->add_option("--chain", chain, "only this chain, e.g. a<b");
  auto* pointing_cmd = app.add_subcommand("pointing", "search for a filtered map from the nerve");
  pointing_cmd->add_option("filtered", file, "filtered simplicial set JSON")->required();
  auto* colim_cmd = app.add_subcommand("colim", "colimit of a cell complex diagram");
  colim_cmd->add_option("cells", file, "cell complex JSON")->required();
  auto* af_cmd = app.add_subcommand("almost-filtered", "almost-filtered check of a set-valued diagram");
  af_cmd->add_option("diagram", file, "set diagram JSON")->required();
  auto* lift_cmd = app.add_subcommand("lift", "solve a lifting problem");
  lift_cmd->add_option("square", file, "square JSON with a, b, x, y, i, p, top, bottom")->required();
  auto* rlp_cmd = app.add_subcommand("rlp", "right lifting property against generating cells");
  rlp_cmd->add_option("map", file, "map JSON with source, target, map")->required();
  rlp_cmd->add_option("--cells", cells, "I (boundaries) or J (horns)")->check(CLI::IsMember({"I", "J"}));
  rlp_cmd->add_option("--nmax", n_max, "largest cell dimension")->default_val(1);
  rlp_cmd->add_option("--cap", cap, "squares per cell before giving up")->default_val(10'000);
  auto* retract_cmd = app.add_subcommand("retract", "a labelled simplex as a retract of a product");
  retract_cmd->add_option("phi", phi, "weakly increasing labels, e.g. p,p,q")->required();
  retract_cmd->add_option("--poset", poset_file, "poset JSON (default: labels in order of appearance)");
  auto* numeric_cmd = app.add_subcommand("numeric", "numeric checks on the realization of the nerve");
  numeric_cmd->require_subcommand(1);
  auto* deform_cmd = numeric_cmd->add_subcommand("deform", "deform a point onto the target strata");
  deform_cmd->add_option("--psi", psi, "ambient chain, e.g. q0<q1")->required();
  deform_cmd->add_option("--targets", targets, "target chain, e.g. q1")->required();
  deform_cmd->add_option("--point", point, "barycentric coordinates on psi, e.g. 0.5,0.5")->required();
  deform_cmd->add_option("--s", s, "homotopy parameter in [0, 1]")->required();
  deform_cmd->add_option("--poset", poset_file, "poset JSON (default: chains in order of appearance)");
  auto* glue_cmd = numeric_cmd->add_subcommand("glue", "property suite over all nested chain pairs");
  glue_cmd->add_option("--poset", poset_file, "poset JSON (default: the hexagon poset)");
  glue_cmd->add_option("--samples", samples, "samples per chain pair")->default_val(1000);
  auto* compare_cmd = app.add_subcommand("compare", "is a map a bijection on stratified components");
  compare_cmd->add_option("map", file, "map JSON with source, target, map and optional alpha")->required();
  auto* builtin_cmd = app.add_subcommand("builtin", "run a shipped counterexample");
  builtin_cmd->add_option("name", name, "instance name")->required();
  builtin_cmd->add_flag("--emit", emit, "print the instance as JSON instead of running it");
  auto* dot_cmd = app.add_subcommand("export-dot", "DOT graph of a poset, its chains, a diagram shape or components");
  dot_cmd->add_option("file", file, "input JSON")->required();
  dot_cmd->add_option("--object", object, "poset | chains | shape | spi0")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*bound_opt) opt.bound = bound;

  json inputs = json::object();
  auto input = [&](const std::string& path) {
    Input in = load(path);
    inputs[path] = in.digest;
    return in.value;
  };
  auto poset_or = [&](const std::function<Poset()>& fallback) {
    return poset_file.empty() ? fallback() : io::poset_from_json(input(poset_file));
  };

  std::string command;
  Outcome out;
  try {
    if (*nerve_cmd) command = "nerve", out = cmd_nerve(io::poset_from_json(input(file)));
    else if (*spi0_cmd)
      command = "spi0", out = cmd_spi0(io::filtered_from_json(input(file)),
                                       *chain_opt ? std::optional<std::string>(chain) : std::nullopt, opt);
    else if (*pointing_cmd) command = "pointing", out = cmd_pointing(io::filtered_from_json(input(file)));
    else if (*colim_cmd) command = "colim", out = cmd_colim(io::cell_complex_from_json(input(file)), opt);
    else if (*af_cmd) command = "almost-filtered", out = cmd_almost_filtered(io::set_diagram_from_json(input(file)), opt);
    else if (*lift_cmd) command = "lift", out = cmd_lift(input(file));
    else if (*rlp_cmd) command = "rlp", out = cmd_rlp(input(file), cells, n_max, cap);
    else if (*retract_cmd)
      command = "retract", out = cmd_retract(poset_or([&] { return order_of_appearance({phi}); }), phi);
    else if (*deform_cmd)
      command = "numeric deform",
      out = cmd_deform(poset_or([&] { return order_of_appearance({psi, targets}); }), psi, targets, point, s);
    else if (*glue_cmd)
      command = "numeric glue", out = cmd_glue(poset_or(builtins::hexagon_poset), samples, opt.seed);
    else if (*compare_cmd) command = "compare", out = cmd_compare(input(file), opt);
    else if (*builtin_cmd) {
      command = "builtin " + name;
      out = cmd_builtin(name, emit, opt);
      if (emit) {
        std::cout << out.result.dump(2) << "\n";
        return 0;
      }
    } else if (*dot_cmd) {
      command = "export-dot", out = cmd_export_dot(input(file), object);
      std::cout << out.dot;
      return 0;
    }
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    if (opt.json) {
      json report{{"command", command}, {"inputs", inputs}, {"verdict", verdict_name(code)}, {"error", e.what()}};
      std::cout << report.dump(2) << "\n";
    } else {
      std::cerr << "strat: " << e.what() << "\n";
    }
    return code;
  } catch (const json::exception& e) {
    std::cerr << "strat: ParseError: " << e.what() << "\n";
    return 2;
  }

  if (opt.dot && !out.dot.empty()) {
    std::cout << out.dot;
    return out.code;
  }
  json report{{"command", command}, {"inputs", inputs}, {"verdict", verdict_name(out.code)}, {"result", out.result}};
  if (opt.json) std::cout << report.dump(2) << "\n";
  else {
    std::cout << command << ": " << verdict_name(out.code) << "\n";
    print_text(out.result, "  ");
  }
  return out.code;
}
