#include "strat/dot.hpp"

#include <sstream>

namespace strat::dot {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string poset(const Poset& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n  rankdir=BT;\n";
  for (const auto& e : p.elements()) out << "  " << quoted(e) << ";\n";
  for (const auto& [a, b] : p.covers()) out << "  " << quoted(p.name(a)) << " -> " << quoted(p.name(b)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string chain_category(const Poset& p) {
  std::ostringstream out;
  out << "digraph \"chains\" {\n";
  for (const Chain& c : chains(p)) out << "  " << quoted(p.chain_name(c)) << ";\n";
  for (const auto& [psi, phi] : chain_inclusions(p))
    if (psi != phi) out << "  " << quoted(p.chain_name(phi)) << " -> " << quoted(p.chain_name(psi)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string diagram_shape(const SetDiagram& g) {
  std::ostringstream out;
  out << "digraph \"diagram\" {\n  rankdir=BT;\n";
  for (int o = 0; o < g.shape.size(); ++o)
    out << "  " << quoted(g.shape.name(o)) << " [label=" << quoted(g.shape.name(o) + " (" + std::to_string(g.values[o].size()) + ")")
        << "];\n";
  for (const auto& [key, fn] : g.arrows)
    out << "  " << quoted(g.shape.name(key.first)) << " -> " << quoted(g.shape.name(key.second)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string spi0(const SPi0& s) {
  std::ostringstream out;
  out << "digraph \"spi0\" {\n";
  auto node = [&](int c, int cls) { return quoted(s.base.chain_name(s.chains[c]) + ":" + std::to_string(cls)); };
  for (int c = 0; c < s.chains.size(); ++c) {
    out << "  subgraph " << quoted("cluster_" + s.base.chain_name(s.chains[c])) << " {\n    label="
        << quoted(s.base.chain_name(s.chains[c])) << ";\n";
    for (int cls : s.classes[c]) out << "    " << node(c, cls) << ";\n";
    out << "  }\n";
  }
  for (const auto& [key, r] : s.restrictions) {
    if (s.chains[key.first].size() != s.chains[key.second].size() + 1) continue;
    for (const auto& [from, to] : r) out << "  " << node(key.first, from) << " -> " << node(key.second, to) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace strat::dot
