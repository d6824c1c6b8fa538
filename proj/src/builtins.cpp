#include "strat/builtins.hpp"

#include <algorithm>

namespace strat::builtins {

SetDiagram swapped_square() {
  SetDiagram g;
  g.shape = Poset::from_relations({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
  g.values.assign(4, {"0", "1"});
  g.arrows[{0, 2}] = {0, 1};
  g.arrows[{0, 3}] = {0, 1};
  g.arrows[{1, 2}] = {0, 1};
  g.arrows[{1, 3}] = {1, 0};
  return g;
}

Poset hexagon_poset() {
  return Poset::from_relations({"a1", "a2", "a3", "b1", "b2", "b3", "c"},
                               {{"a1", "b3"}, {"a1", "b2"}, {"a2", "b1"}, {"a2", "b3"}, {"a3", "b2"}, {"a3", "b1"},
                                {"b1", "c"}, {"b2", "c"}, {"b3", "c"}});
}

FilteredSSet hexagon_annulus() {
  const Poset p = hexagon_poset();
  std::vector<std::string> names{"a1", "a2", "a3", "b1", "b2", "b3"};
  std::vector<int> labels{0, 1, 2, 3, 4, 5};
  for (int k = 1; k <= 6; ++k) {
    names.push_back("c" + std::to_string(k));
    labels.push_back(6);
  }
  auto vertex = [&](const std::string& n) {
    return static_cast<int>(std::find(names.begin(), names.end(), n) - names.begin());
  };
  // hexagon edges in cyclic order; consecutive edges share a vertex
  const std::vector<std::pair<std::string, std::string>> hexagon{{"a1", "b2"}, {"a3", "b2"}, {"a3", "b1"},
                                                                 {"a2", "b1"}, {"a2", "b3"}, {"a1", "b3"}};
  std::vector<std::vector<int>> facets;
  for (int k = 0; k < 6; ++k) {
    const int c = vertex("c" + std::to_string(k + 1));
    const int c_next = vertex("c" + std::to_string((k + 1) % 6 + 1));
    const auto& [a, b] = hexagon[k];
    const std::string& shared = a == hexagon[(k + 1) % 6].first ? a : b;
    facets.push_back({vertex(a), vertex(b), c});
    facets.push_back({vertex(shared), c, c_next});
  }
  return filtered_complex(p, names, labels, facets);
}

CollapsingBase collapsing_base() {
  const Poset p = Poset::discrete({"p0", "p1"});
  const Poset q = Poset::discrete({"q"});
  CollapsingBase out{PosetMap::make(p, q, {0, 0}), filtered_complex(p, {"x"}, {0}, {{0}}), {}, {}};
  out.pulled_pushed = pullback(out.alpha, pushforward(out.alpha, out.x));
  out.unit = unit_map(out.x, out.pulled_pushed);
  return out;
}

MissingStratum missing_stratum() {
  const Poset p = Poset::discrete({"p"});
  const Poset q = Poset::discrete({"q", "q'"});
  MissingStratum out{PosetMap::make(p, q, {0}), filtered_complex(q, {"y"}, {1}, {{0}}), {}, {}};
  out.pulled = pullback(out.alpha, out.y);
  out.pushed_pulled = pushforward(out.alpha, out.pulled.value);
  return out;
}

StratifiedMap reordered_base() {
  const Poset p = Poset::discrete({"p0", "p1"});
  const Poset q = Poset::total_order({"q0", "q1"});
  const FilteredSSet x = filtered_complex(p, {"x0", "x1"}, {0, 1}, {{0}, {1}});
  const FilteredSSet y = delta_phi(q, {0, 1});
  return {x, y, PosetMap::make(p, q, {0, 1}), SMap{{y.body.id(y.body.index_of("0")), y.body.id(y.body.index_of("1"))}}};
}

std::vector<std::string> names() {
  return {"swapped-square", "hexagon-annulus", "collapsing-base", "missing-stratum", "reordered-base"};
}

}  // namespace strat::builtins
