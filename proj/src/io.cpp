#include "strat/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace strat::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

const json& array(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) parse_error(std::string("field '") + key + "' must be an array");
  return a;
}

std::string text(const json& j) {
  if (!j.is_string()) parse_error("expected a string, got " + j.dump());
  return j.get<std::string>();
}

int integer(const json& j) {
  if (!j.is_number_integer()) parse_error("expected an integer, got " + j.dump());
  return j.get<int>();
}

int element(const Poset& p, const json& j) {
  const auto e = p.find(text(j));
  if (!e) throw Error(ErrorKind::UnknownElement, "unknown poset element " + j.dump());
  return *e;
}

}  // namespace

json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    parse_error(path + ": " + e.what());
  }
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

// ---------------------------------------------------------------------------

json to_json(const Poset& p) {
  json rel = json::array();
  for (const auto& [a, b] : p.covers()) rel.push_back({p.name(a), p.name(b)});
  return {{"elements", p.elements()}, {"relations", rel}};
}

Poset poset_from_json(const json& j) {
  std::vector<std::string> elements;
  for (const auto& e : array(j, "elements")) elements.push_back(text(e));
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("relations"))
    for (const auto& r : array(j, "relations")) {
      if (!r.is_array() || r.size() != 2) parse_error("relation must be a pair, got " + r.dump());
      pairs.emplace_back(text(r[0]), text(r[1]));
    }
  return Poset::from_relations(std::move(elements), pairs);
}

json term_to_json(const SSet& x, const Term& t) {
  const std::string& name = x.generator(t.gen).name;
  if (!t.degenerate()) return name;
  return {{"gen", name}, {"word", t.word()}};
}

Term term_from_json(const SSet& x, const json& j) {
  if (j.is_string()) {
    const auto g = x.find(j.get<std::string>());
    if (!g) throw Error(ErrorKind::UnknownElement, "unknown generator " + j.dump());
    return x.id(*g);
  }
  const auto g = x.find(text(field(j, "gen")));
  if (!g) throw Error(ErrorKind::UnknownElement, "unknown generator " + j.at("gen").dump());
  std::vector<int> word;
  if (j.contains("word"))
    for (const auto& w : array(j, "word")) word.push_back(integer(w));
  return Term::from_word(*g, x.generator(*g).dim, word);
}

json to_json(const FilteredSSet& k) {
  json gens = json::array();
  for (int g = 0; g < k.size(); ++g) {
    const auto& gen = k.body.generator(g);
    json faces = json::array();
    for (const Term& f : gen.faces) faces.push_back(term_to_json(k.body, f));
    json label = json::array();
    for (int v : k.phi[g]) label.push_back(k.base.name(v));
    gens.push_back({{"name", gen.name}, {"dim", gen.dim}, {"faces", faces}, {"label", label}});
  }
  return {{"poset", to_json(k.base)}, {"generators", gens}};
}

FilteredSSet filtered_from_json(const json& j) {
  const Poset p = poset_from_json(field(j, "poset"));
  if (j.contains("facets")) {
    std::vector<std::string> names;
    std::vector<int> labels;
    for (const auto& v : array(j, "vertices")) {
      names.push_back(text(field(v, "name")));
      labels.push_back(element(p, field(v, "label")));
    }
    std::vector<std::vector<int>> facets;
    for (const auto& f : array(j, "facets")) {
      std::vector<int> facet;
      for (const auto& v : f) {
        const auto it = std::find(names.begin(), names.end(), text(v));
        if (it == names.end()) throw Error(ErrorKind::UnknownElement, "unknown vertex " + v.dump());
        facet.push_back(static_cast<int>(it - names.begin()));
      }
      facets.push_back(std::move(facet));
    }
    return filtered_complex(p, names, labels, facets);
  }
  FilteredSSet k = empty_filtered(p);
  for (const auto& g : array(j, "generators")) {
    std::vector<Term> faces;
    if (g.contains("faces"))
      for (const auto& f : array(g, "faces")) faces.push_back(term_from_json(k.body, f));
    Tuple label;
    for (const auto& v : array(g, "label")) label.push_back(element(p, v));
    k.add_generator(text(field(g, "name")), integer(field(g, "dim")), std::move(faces), std::move(label));
  }
  validate(k);
  return k;
}

json map_to_json(const SSet& source, const SSet& target, const SMap& f) {
  json images = json::object();
  for (int g = 0; g < source.size(); ++g) images[source.generator(g).name] = term_to_json(target, f.images[g]);
  return {{"images", images}};
}

SMap map_from_json(const SSet& source, const SSet& target, const json& j) {
  const json& images = field(j, "images");
  SMap f;
  for (const auto& gen : source.generators()) {
    if (!images.contains(gen.name)) parse_error("map has no image for " + gen.name);
    f.images.push_back(term_from_json(target, images.at(gen.name)));
  }
  if (images.size() != static_cast<std::size_t>(source.size())) parse_error("map names unknown generators");
  check_simplicial(source, target, f);
  return f;
}

json to_json(const SetDiagram& g) {
  json values = json::object(), arrows = json::array();
  for (int o = 0; o < g.shape.size(); ++o) values[g.shape.name(o)] = g.values[o];
  for (const auto& [key, fn] : g.arrows)
    arrows.push_back({{"from", g.shape.name(key.first)}, {"to", g.shape.name(key.second)}, {"map", fn}});
  return {{"poset", to_json(g.shape)}, {"values", values}, {"arrows", arrows}};
}

SetDiagram set_diagram_from_json(const json& j) {
  SetDiagram g;
  g.shape = poset_from_json(field(j, "poset"));
  const json& values = field(j, "values");
  for (const auto& name : g.shape.elements()) {
    std::vector<std::string> labels;
    if (values.contains(name))
      for (const auto& l : values.at(name)) labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
    g.values.push_back(std::move(labels));
  }
  for (const auto& a : array(j, "arrows")) {
    const int from = element(g.shape, field(a, "from")), to = element(g.shape, field(a, "to"));
    std::vector<int> fn;
    for (const auto& v : array(a, "map")) fn.push_back(integer(v));
    if (fn.size() != g.values[from].size()) parse_error("arrow map has the wrong length");
    for (int v : fn)
      if (v < 0 || v >= static_cast<int>(g.values[to].size())) parse_error("arrow map leaves its target");
    g.arrows[{from, to}] = std::move(fn);
  }
  g.all_arrows();  // functoriality
  return g;
}

Diagram cell_complex_from_json(const json& j) {
  const Poset p = poset_from_json(field(j, "poset"));
  Diagram f = cell_complex(p, {});
  for (const auto& c : array(j, "cells")) {
    CellAttachment cell;
    cell.n = integer(field(c, "n"));
    cell.phi = p.parse_chain(text(field(c, "chain")));
    const auto index = f.chains.find(cell.phi);
    if (!index) throw Error(ErrorKind::InvalidAttachment, "cell chain " + c.at("chain").dump() + " is not a chain");
    const SSet bnd = boundary(cell.n);
    cell.attaching = bnd.empty() ? SMap{}
                                 : map_from_json(bnd, f.value(*index), {{"images", field(c, "attaching")}});
    f = attach_cell(f, cell);
  }
  return f;
}

PosetMap poset_map_from_json(const Poset& source, const Poset& target, const json& j) {
  std::vector<int> assignment;
  for (const auto& name : source.elements()) {
    if (!j.contains(name)) parse_error("poset map has no image for " + name);
    assignment.push_back(element(target, j.at(name)));
  }
  return PosetMap::make(source, target, assignment);
}

json to_json(const PosetMap& alpha) {
  json out = json::object();
  for (int x = 0; x < alpha.source.size(); ++x) out[alpha.source.name(x)] = alpha.target.name(alpha(x));
  return out;
}

json to_json(const SPi0& s) {
  json rows = json::array();
  for (int c = 0; c < s.chains.size(); ++c) {
    json restrictions = json::object();
    for (const auto& [key, r] : s.restrictions) {
      if (key.first != c || key.second == c) continue;
      json m = json::object();
      for (const auto& [from, to] : r) m[std::to_string(from)] = to;
      restrictions[s.base.chain_name(s.chains[key.second])] = m;
    }
    rows.push_back({{"chain", s.base.chain_name(s.chains[c])},
                    {"points", s.points[c].size()},
                    {"classes", s.classes[c]},
                    {"restrictions", restrictions}});
  }
  return rows;
}

json to_json(const AlmostFilteredVerdict& v, const SetDiagram& g) {
  json witness = json::array();
  for (const auto& [o, x] : v.witness) witness.push_back({g.shape.name(o), g.values[o][x]});
  return {{"holds", v.holds}, {"complete", v.complete}, {"failed_condition", v.failed_condition}, {"witness", witness}};
}

json to_json(const RealPoint& pt, const Poset& base) { return {{"carrier", base.chain_name(pt.carrier)}, {"coords", pt.coords}}; }

json to_json(const GenCell& c, const Poset& base) {
  json out{{"kind", c.kind == GenCell::Kind::Boundary ? "boundary" : "horn"}, {"n", c.n}, {"chain", base.chain_name(c.phi)}};
  if (c.kind == GenCell::Kind::Horn) out["k"] = c.k;
  return out;
}

Tuple parse_tuple(const Poset& base, const std::string& text) {
  Tuple out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto e = base.find(item);
    if (!e) throw Error(ErrorKind::UnknownElement, "unknown poset element '" + item + "'");
    out.push_back(*e);
  }
  return out;
}

}  // namespace strat::io
