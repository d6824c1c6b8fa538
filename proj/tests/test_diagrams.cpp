#include <doctest.h>

#include <set>

#include "random_instances.hpp"
#include "strat/builtins.hpp"
#include "strat/diagrams.hpp"
#include "strat/error.hpp"

using namespace strat;

namespace {

// Naive saturation oracle for set colimits.
int naive_set_classes(const SetDiagram& g) {
  std::vector<std::pair<int, int>> nodes;
  for (int o = 0; o < g.shape.size(); ++o)
    for (int i = 0; i < static_cast<int>(g.values[o].size()); ++i) nodes.emplace_back(o, i);
  const std::size_t n = nodes.size();
  std::vector<int> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = static_cast<int>(i);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [key, fn] : g.arrows)
      for (std::size_t i = 0; i < n; ++i) {
        if (nodes[i].first != key.first) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (nodes[j] == std::make_pair(key.second, fn[nodes[i].second]) && label[i] != label[j]) {
            const int lo = std::min(label[i], label[j]), hi = std::max(label[i], label[j]);
            for (auto& l : label)
              if (l == hi) l = lo;
            changed = true;
          }
      }
  }
  return static_cast<int>(std::set<int>(label.begin(), label.end()).size());
}

// Direct transcription of the first almost-filtered condition, looping over
// every instantiation; used as an oracle for small shapes.
bool naive_condition_one(const SetDiagram& g) {
  const auto arrows = g.all_arrows();
  const int n = g.shape.size();
  auto G = [&](int a, int b, int x) { return arrows.at({a, b})[x]; };
  for (int d = 0; d < n; ++d)
    for (int d1 = 0; d1 < n; ++d1)
      for (int d2 = 0; d2 < n; ++d2)
        for (int d3 = 0; d3 < n; ++d3) {
          const auto& S = g.shape;
          if (!S.leq(d1, d) || !S.leq(d1, d2) || !S.leq(d3, d2) || !S.leq(d3, d)) continue;
          for (int x1 = 0; x1 < static_cast<int>(g.values[d1].size()); ++x1)
            for (int x3 = 0; x3 < static_cast<int>(g.values[d3].size()); ++x3) {
              if (G(d1, d2, x1) != G(d3, d2, x3)) continue;
              bool closed = false;
              for (int e = 0; e < n && !closed; ++e)
                closed = S.leq(d1, e) && S.leq(d3, e) && S.leq(e, d) && S.leq(e, d2) && G(d1, e, x1) == G(d3, e, x3);
              if (!closed) return false;
            }
        }
  return true;
}

// Direct transcription of the conclusion of the second condition for one zigzag.
bool zigzag_closes(const SetDiagram& g, const std::map<std::pair<int, int>, std::vector<int>>& arrows,
                   const std::vector<std::pair<int, int>>& z) {
  const auto& S = g.shape;
  for (int e = 0; e < S.size(); ++e)
    for (int xe = 0; xe < static_cast<int>(g.values[e].size()); ++xe) {
      bool all = true;
      for (std::size_t i = 1; i + 1 < z.size() && all; ++i) {
        bool found = false;
        const auto [di, xi] = z[i];
        for (int dp = 0; dp < S.size() && !found; ++dp) {
          if (!S.leq(dp, di) || !S.leq(dp, e)) continue;
          for (int xp = 0; xp < static_cast<int>(g.values[dp].size()) && !found; ++xp)
            found = arrows.at({dp, di})[xp] == xi && arrows.at({dp, e})[xp] == xe;
        }
        all = found;
      }
      if (all) return true;
    }
  return false;
}

bool is_zigzag(const SetDiagram& g, const std::map<std::pair<int, int>, std::vector<int>>& arrows,
               const std::vector<std::pair<int, int>>& z) {
  if (z.size() < 7 || z.size() % 2 == 0 || z.front().first != z.back().first) return false;
  for (std::size_t i = 1; i < z.size(); i += 2)
    for (std::size_t j : {i - 1, i + 1}) {
      if (!g.shape.leq(z[i].first, z[j].first)) return false;
      if (arrows.at({z[i].first, z[j].first})[z[i].second] != z[j].second) return false;
    }
  return true;
}

// Finds a zigzag with n + 1 odd positions (2 <= n <= max_n) whose conclusion fails.
bool naive_condition_two_violated(const SetDiagram& g, int max_n) {
  const auto arrows = g.all_arrows();
  std::vector<std::pair<int, int>> nodes;
  for (int o = 0; o < g.shape.size(); ++o)
    for (int i = 0; i < static_cast<int>(g.values[o].size()); ++i) nodes.emplace_back(o, i);
  std::vector<std::pair<int, int>> z;
  bool violated = false;
  auto extend = [&](auto&& self) -> void {
    if (violated) return;
    const int odd = static_cast<int>(z.size()) / 2;
    if (z.size() % 2 == 1 && odd >= 3 && z.back().first == z.front().first && !zigzag_closes(g, arrows, z)) {
      violated = true;
      return;
    }
    if (z.size() % 2 == 1 && odd >= max_n + 1) return;
    for (const auto& nd : nodes) {
      z.push_back(nd);
      const std::size_t k = z.size() - 1;
      bool ok = true;
      if (k % 2 == 1) ok = g.shape.leq(nd.first, z[k - 1].first) && arrows.at({nd.first, z[k - 1].first})[nd.second] == z[k - 1].second;
      else ok = g.shape.leq(z[k - 1].first, nd.first) && arrows.at({z[k - 1].first, nd.first})[z[k - 1].second] == nd.second;
      if (ok) self(self);
      z.pop_back();
      if (violated) return;
    }
  };
  for (const auto& start : nodes) {
    z = {start};
    extend(extend);
    if (violated) break;
  }
  return violated;
}

}  // namespace

TEST_CASE("second condition agrees with zigzag enumeration") {
  // random two-level shapes, where long zigzags without an upper bound are common
  testing::Rng rng(19);
  int violations = 0, flagged = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto names = testing::numbered("p", 6);
    std::vector<std::pair<std::string, std::string>> rel;
    for (int a = 0; a < 3; ++a)
      for (int b = 3; b < 6; ++b)
        if (testing::coin(rng, 0.5)) rel.emplace_back(names[a], names[b]);
    SetDiagram g;
    g.shape = Poset::from_relations(names, rel);
    const int size = testing::uniform(rng, 1, 2);
    g.values.assign(6, testing::numbered("x", size));
    for (auto [a, b] : g.shape.covers())
      g.arrows[{a, b}] = size == 1 || testing::coin(rng, 0.7) ? std::vector<int>{0, 1} : std::vector<int>{1, 0};
    for (auto& [key, fn] : g.arrows) fn.resize(size);
    const auto v = almost_filtered(g);
    if (v.failed_condition == 1) continue;
    const bool naive = naive_condition_two_violated(g, 4);
    if (naive) {
      ++violations;
      CHECK(v.failed_condition == 2);
    }
    if (v.failed_condition == 2) {
      ++flagged;
      const auto arrows = g.all_arrows();
      CHECK(is_zigzag(g, arrows, v.witness));
      CHECK_FALSE(zigzag_closes(g, arrows, v.witness));
    }
  }
  MESSAGE("zigzag violations: enumeration " << violations << ", search " << flagged);
  CHECK(violations > 10);
}

TEST_CASE("crown shapes fail the second condition") {
  // a_i < b_i and a_i < b_{i+1}: a cycle of length six with no upper bound
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i < 3; ++i) {
    rel.emplace_back("a" + std::to_string(i), "b" + std::to_string(i));
    rel.emplace_back("a" + std::to_string(i), "b" + std::to_string((i + 1) % 3));
  }
  const Poset crown = Poset::from_relations({"a0", "a1", "a2", "b0", "b1", "b2"}, rel);
  for (int twisted = 0; twisted <= 1; ++twisted) {
    SetDiagram g;
    g.shape = crown;
    g.values.assign(6, twisted ? std::vector<std::string>{"0", "1"} : std::vector<std::string>{"0"});
    for (auto [a, b] : crown.covers()) g.arrows[{a, b}] = twisted ? std::vector<int>{0, 1} : std::vector<int>{0};
    if (twisted) g.arrows[{crown.index_of("a2"), crown.index_of("b0")}] = {1, 0};
    const auto v = almost_filtered(g);
    CHECK_FALSE(v.holds);
    CHECK(v.failed_condition == 2);
    CHECK(naive_condition_two_violated(g, 2));
    const auto arrows = g.all_arrows();
    CHECK(is_zigzag(g, arrows, v.witness));
    CHECK_FALSE(zigzag_closes(g, arrows, v.witness));
    CHECK(set_colim(g).classes == 1);
    CHECK(mono_into_colim(g, 0) == !twisted);
  }
}

TEST_CASE("injective arrows with a one-point colimit") {
  const SetDiagram g = builtins::swapped_square();
  const SetColimit c = set_colim(g);
  CHECK(c.classes == 1);
  CHECK(c.classes == naive_set_classes(g));
  for (int o = 0; o < 4; ++o) CHECK_FALSE(mono_into_colim(g, o));

  const auto v = almost_filtered(g);
  CHECK_FALSE(v.holds);
  CHECK(v.failed_condition == 1);
  const auto& s = g.shape;
  REQUIRE(v.witness.size() == 5);
  CHECK(v.witness[0] == std::make_pair(s.index_of("c"), 0));  // d, x
  CHECK(v.witness[1] == std::make_pair(s.index_of("a"), 0));  // d1, x1
  CHECK(v.witness[2] == std::make_pair(s.index_of("d"), 0));  // d2, x2
  CHECK(v.witness[3] == std::make_pair(s.index_of("b"), 1));  // d3, x3
  CHECK(v.witness[4] == std::make_pair(s.index_of("c"), 1));  // d, y
  CHECK_FALSE(naive_condition_one(g));
}

TEST_CASE("set colimits") {
  SetDiagram g;
  g.shape = Poset::total_order({"a", "b", "c"});
  g.values.assign(3, {"0", "1"});
  g.arrows[{0, 1}] = {0, 1};
  g.arrows[{1, 2}] = {0, 1};
  CHECK(set_colim(g).classes == 2);

  SetDiagram discrete;
  discrete.shape = Poset::discrete({"a", "b", "c"});
  discrete.values.assign(3, {"*"});
  CHECK(set_colim(discrete).classes == 3);
  CHECK(mono_into_colim(discrete, 0));

  testing::Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const SetDiagram r = testing::random_mono_set_diagram(rng, 5);
    CHECK(set_colim(r).classes == naive_set_classes(r));
  }
}

TEST_CASE("almost filtered: shapes with a top element") {
  testing::Rng rng(4);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 30; ++trial) {
    SetDiagram g = testing::random_mono_set_diagram(rng, 5);
    bool has_top = false;
    for (int t = 0; t < g.shape.size() && !has_top; ++t) {
      has_top = true;
      for (int a = 0; a < g.shape.size(); ++a) has_top = has_top && g.shape.leq(a, t);
    }
    if (!has_top) continue;
    ++checked;
    const auto v = almost_filtered(g);
    CHECK(v.holds);
    CHECK(v.complete);
  }
  CHECK(checked == 30);
}

TEST_CASE("first condition agrees with the direct transcription") {
  testing::Rng rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    const SetDiagram g = testing::random_mono_set_diagram(rng, 5);
    const auto v = almost_filtered(g);
    const bool one = naive_condition_one(g);
    CHECK(one == !(v.failed_condition == 1));
  }
}

TEST_CASE("almost filtered implies injective colimit legs") {
  testing::Rng rng(12);
  int accepted = 0, rejected = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const SetDiagram g = testing::random_mono_set_diagram(rng, 6);
    const auto v = almost_filtered(g);
    if (!v.holds || !v.complete) {
      ++rejected;
      continue;
    }
    ++accepted;
    for (int o = 0; o < g.shape.size(); ++o) CHECK(mono_into_colim(g, o));
  }
  MESSAGE("accepted " << accepted << ", rejected " << rejected);
  CHECK(accepted > 100);
}

TEST_CASE("diagram constructions") {
  const Poset p = Poset::total_order({"p", "q"});
  const ChainIndex chains(p);
  const Chain pq{0, 1};
  const Diagram k = kdelta(p, boundary(1), pq);
  for (int c = 0; c < chains.size(); ++c) CHECK(k.value(c).size() == 2);
  CHECK(k.restriction(chains.at(pq), chains.at({0})) == identity_map(boundary(1)));

  const Diagram single = kdelta(p, standard(0), Chain{0});
  CHECK(single.value(chains.at({0})).size() == 1);
  CHECK(single.value(chains.at({1})).empty());
  CHECK(single.value(chains.at(pq)).empty());

  // one 0-cell at a chain is kdelta(point)
  const Diagram cell = cell_complex(p, {CellAttachment{0, pq, SMap{}}});
  for (int c = 0; c < chains.size(); ++c) CHECK(cell.value(c).size() == 1);

  CHECK_THROWS_AS(cell_complex(p, {CellAttachment{1, pq, SMap{}}}), Error);
}

TEST_CASE("colimits of K^{Delta^phi} are K tensor Delta^phi") {
  const std::vector<Poset> bases{Poset::discrete({"p"}), Poset::total_order({"p", "q"}),
                                 Poset::discrete({"p", "q"})};
  for (const Poset& base : bases)
    for (const Chain& phi : chains(base))
      for (const SSet& k : {standard(0), boundary(1), standard(1)}) {
        const Diagram f = kdelta(base, k, phi);
        const DiagramColimit c = colim_diagram(f);
        const Tensor expected = tensor(k, delta_phi(base, phi));
        const int o = c.diagonal_object(ChainIndex(base).at(phi));
        const SMap leg = c.colimit.legs[o];
        CHECK(is_isomorphism(expected.value.body, c.value.body, leg));
        CHECK_FALSE(filtered_violation(expected.value, c.value, leg));
        CHECK_FALSE(phi_violation(c.value));
      }
}

TEST_CASE("cell complexes: almost filtered pair category and injective legs") {
  testing::Rng rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const Poset base = testing::random_poset(rng, testing::uniform(rng, 1, 3), 0.6);
    const Diagram f = testing::random_cell_complex(rng, base, testing::uniform(rng, 1, 4), 2);
    for (const auto& [key, r] : f.arrows) CHECK(is_mono(f.value(key.first), r));
    const DiagramColimit c = colim_diagram(f);
    const int bound = default_degree_bound(base, 2);
    const SetDiagram g = forgetful(c.tensor.functor, bound);
    const auto v = almost_filtered(g);
    CHECK(v.holds);
    CHECK(v.complete);
    for (int chain = 0; chain < f.chains.size(); ++chain) {
      const int o = c.diagonal_object(chain);
      CHECK(injective_through(c.tensor.functor.values[o], c.colimit.legs[o], 4));
      CHECK(is_mono(c.tensor.functor.values[o], c.colimit.legs[o]));
    }
    // colimit commutes with the forgetful functor
    CHECK(set_colim(g).classes == [&] {
      int total = 0;
      for (int n = 0; n <= bound; ++n) total += static_cast<int>(c.colimit.body.simplices(n).size());
      return total;
    }());
  }
}
