#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "strat/builtins.hpp"
#include "strat/error.hpp"
#include "strat/homotopy.hpp"

using namespace strat;
using namespace strat::testing;

namespace {

SMap inclusion_of(const Chain& psi, const Chain& phi) {
  return standard_map(static_cast<int>(psi.size()) - 1, static_cast<int>(phi.size()) - 1,
                      subchain_positions(psi, phi));
}

// The map X -> Y obtained by restricting H : Delta^1 (x) X -> Y to an end.
SMap end_of_homotopy(const Tensor& prism, const FilteredSSet& x, const SMap& h, int end) {
  const Tensor point = tensor(standard(0), x);
  const std::vector<int> theta{end};
  return compose(h, tensor_map(point, prism, standard_map(0, 1, theta), identity_map(x.body)));
}

}  // namespace

TEST_CASE("mapping space examples") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Poset p = random_poset(rng, uniform(rng, 1, 4), 0.5);
    for (const Chain& phi : chains(p)) {
      CHECK(mapping_space(delta_phi(p, phi), phi, 0).elements[0].size() == 1);
      CHECK(mapping_space(nerve(p), phi, 0).elements[0].size() == 1);
    }
  }
  const Poset p = Poset::total_order({"a", "b"});
  const FilteredSSet only_a = delta_phi(p, {0});
  CHECK(mapping_space(only_a, {1}, 1).elements[0].empty());
  CHECK(mapping_space(only_a, {1}, 1).elements[1].empty());
  CHECK_THROWS_AS(mapping_space(only_a, {1, 0}, 0), Error);
}

TEST_CASE("mapping space faces and degeneracies satisfy the simplicial identities") {
  Rng rng(22);
  for (int trial = 0; trial < 15; ++trial) {
    const Poset p = random_poset(rng, uniform(rng, 1, 3), 0.5);
    const FilteredSSet k = random_filtered(rng, p, uniform(rng, 2, 4), 3, 2);
    const auto all = chains(p);
    const Chain phi = all[uniform(rng, 0, static_cast<int>(all.size()) - 1)];
    const MappingSpace m = mapping_space(k, phi, 2);
    for (int e = 0; e < static_cast<int>(m.elements[2].size()); ++e)
      for (int j = 1; j <= 2; ++j)
        for (int i = 0; i < j; ++i) CHECK(m.face(1, m.face(2, e, j), i) == m.face(1, m.face(2, e, i), j - 1));
    for (int n = 0; n <= 1; ++n)
      for (int e = 0; e < static_cast<int>(m.elements[n].size()); ++e)
        for (int i = 0; i <= n; ++i) {
          const int s = m.degeneracy(n, e, i);
          CHECK(m.face(n + 1, s, i) == e);
          CHECK(m.face(n + 1, s, i + 1) == e);
        }
    // building the simplicial set re-checks every face relation
    const MappingSpaceSSet body = mapping_space_sset(m);
    CHECK(body.body.count_simplices(0) == m.elements[0].size());
    CHECK(body.body.count_simplices(1) == m.elements[1].size());
  }
}

TEST_CASE("over a point the stratified components are the ordinary components") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const SSet body = coin(rng) ? random_quotient(rng, uniform(rng, 4, 8), uniform(rng, 2, 5), 2)
                                : random_complex(rng, uniform(rng, 2, 8), uniform(rng, 1, 5), 2);
    const FilteredSSet k = over_point(body);
    const SPi0 s = spi0(k);
    REQUIRE(s.chains.size() == 1);
    const auto comp = component_of_vertex(body);
    const std::set<int> comps(comp.begin(), comp.end());
    CHECK(s.size(0) == comps.size() - (comps.count(-1) ? 1 : 0));
    // points are vertices; two points share a class iff their vertices share a component
    for (std::size_t a = 0; a < s.points[0].size(); ++a)
      for (std::size_t b = 0; b < s.points[0].size(); ++b) {
        const int va = s.points[0][a].images[0].gen, vb = s.points[0][b].images[0].gen;
        CHECK((s.class_of[0][a] == s.class_of[0][b]) == (comp[va] == comp[vb]));
      }
  }
}

TEST_CASE("a labelled simplex has one class on its subchains and none elsewhere") {
  Rng rng(24);
  for (int trial = 0; trial < 15; ++trial) {
    const Poset p = random_poset(rng, uniform(rng, 2, 4), 0.6);
    const auto all = chains(p);
    const Chain phi = all[uniform(rng, 0, static_cast<int>(all.size()) - 1)];
    const SPi0 s = spi0(delta_phi(p, phi));
    for (int c = 0; c < s.chains.size(); ++c) CHECK(s.size(c) == (is_subchain(s.chains[c], phi) ? 1u : 0u));
  }
}

TEST_CASE("restrictions are functorial") {
  Rng rng(25);
  for (int trial = 0; trial < 15; ++trial) {
    const Poset p = random_poset(rng, uniform(rng, 2, 4), 0.6);
    const SPi0 s = spi0(random_filtered(rng, p, uniform(rng, 3, 6), 4, 2));
    for (const auto& [outer, r1] : s.restrictions)
      for (const auto& [inner, r2] : s.restrictions) {
        if (outer.second != inner.first) continue;
        const auto& direct = s.restrictions.at({outer.first, inner.second});
        for (const auto& [cls, mid] : r1) CHECK(r2.at(mid) == direct.at(cls));
      }
    for (int c = 0; c < s.chains.size(); ++c)
      for (const auto& [cls, image] : s.restrictions.at({c, c})) CHECK(cls == image);
  }
}

TEST_CASE("pointing restriction") {
  const Poset p = Poset::total_order({"a", "b", "c"});
  const FilteredSSet k = delta_phi(p, {0, 1, 2});
  const Pointing id{{0, 1, 2}, identity_map(k.body)};
  CHECK(restrict_pointing(p, id, {0, 1, 2}).map == id.map);
  const Pointing vertex = restrict_pointing(p, id, {0});
  REQUIRE(vertex.map.images.size() == 1);
  CHECK(vertex.map.images[0] == k.body.id(k.body.index_of("0")));
  CHECK(restrict_pointing(p, restrict_pointing(p, id, {0, 2}), {2}).map == restrict_pointing(p, id, {2}).map);
  try {
    restrict_pointing(p, vertex, {1});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotASubchain);
  }
  CHECK(inclusion_of({1}, {0, 1, 2}).images.size() == 1);
}

TEST_CASE("global pointings") {
  Rng rng(26);
  for (int trial = 0; trial < 10; ++trial) {
    const Poset p = random_poset(rng, uniform(rng, 1, 4), 0.5);
    const GlobalPointing g = global_pointing_exists(nerve(p));
    CHECK(g.exists);
    CHECK_FALSE(filtered_violation(nerve(p), nerve(p), g.witness).has_value());
  }
  const Poset p = Poset::total_order({"a", "b"});
  CHECK_FALSE(global_pointing_exists(delta_phi(p, {0})).exists);
}

TEST_CASE("induced maps on components") {
  Rng rng(27);
  for (int trial = 0; trial < 10; ++trial) {
    const Poset p = random_poset(rng, uniform(rng, 1, 3), 0.5);
    const FilteredSSet k = random_filtered(rng, p, uniform(rng, 2, 5), 3, 2);
    const SPi0 s = spi0(k);
    const SPi0Map t = spi0_map(s, s, k, identity_map(k.body));
    for (int c = 0; c < s.chains.size(); ++c)
      for (const auto& [from, to] : t.components[c]) CHECK(from == to);
    CHECK(compare_spi0(k, k, identity_map(k.body)).isomorphism);
  }

  // a vertex into an edge inside one stratum
  const Poset one = Poset::discrete({"*"});
  const FilteredSSet edge = delta_phi(one, {0, 0});
  const FilteredSSet vertex = delta_phi(one, {0});
  CHECK(compare_spi0(vertex, edge, SMap{{edge.body.id(0)}}).isomorphism);

  // a face of a simplex that retracts onto it by collapsing a repeated label
  const Poset ab = Poset::total_order({"a", "b"});
  const FilteredSSet big = delta_phi(ab, {0, 0, 1});
  const FilteredSSet small = delta_phi(ab, {0, 1});
  const std::vector<int> face{0, 2};
  const SMap inclusion = standard_map(1, 2, face);
  CHECK(compare_spi0(small, big, inclusion).isomorphism);

  // two vertices into an edge: not injective on components' preimages
  const FilteredSSet two = filtered_complex(one, {"u", "v"}, {0, 0}, {{0}, {1}});
  const Spi0Comparison cmp = compare_spi0(two, edge, SMap{{edge.body.id(0), edge.body.id(1)}});
  CHECK_FALSE(cmp.isomorphism);
  CHECK(cmp.source_size == 2);
  CHECK(cmp.target_size == 1);
}

TEST_CASE("homotopic maps induce the same map on components") {
  Rng rng(28);
  int tested = 0;
  for (int trial = 0; trial < 200 && tested < 25; ++trial) {
    const Poset p = random_poset(rng, uniform(rng, 1, 3), 0.5);
    const FilteredSSet x = random_filtered(rng, p, uniform(rng, 1, 3), 2, 1);
    const FilteredSSet y = random_filtered(rng, p, uniform(rng, 2, 5), 4, 2);
    const Tensor prism = tensor(standard(1), x);
    const auto homotopies = enumerate_filtered_maps(prism.value, y);
    if (homotopies.empty()) continue;
    ++tested;
    const SMap& h = homotopies[uniform(rng, 0, static_cast<int>(homotopies.size()) - 1)];
    const SMap f = end_of_homotopy(prism, x, h, 0), g = end_of_homotopy(prism, x, h, 1);
    check_filtered(x, y, f);
    check_filtered(x, y, g);
    const SPi0 sx = spi0(x), sy = spi0(y);
    CHECK(spi0_map(sx, sy, x, f).components == spi0_map(sx, sy, x, g).components);
  }
  CHECK(tested == 25);
}

TEST_CASE("maps from a tensor correspond to maps into the mapping space") {
  Rng rng(29);
  const std::vector<std::pair<std::string, SSet>> sources{
      {"point", standard(0)}, {"interval", standard(1)}, {"two points", boundary(1)}};
  for (int trial = 0; trial < 20; ++trial) {
    const Poset p = random_poset(rng, uniform(rng, 1, 3), 0.5);
    const FilteredSSet x = random_filtered(rng, p, uniform(rng, 2, 4), 3, 2);
    const auto all = chains(p);
    const Chain phi = all[uniform(rng, 0, static_cast<int>(all.size()) - 1)];
    const MappingSpace m = mapping_space(x, phi, 1);
    const MappingSpaceSSet ms = mapping_space_sset(m);
    for (const auto& [name, k] : sources) {
      CAPTURE(name);
      const Tensor kt = tensor(k, m.delta);
      const auto left = enumerate_filtered_maps(kt.value, x);
      std::set<std::vector<Term>> adjoints;
      for (const SMap& h : left) {
        SMap adj;
        for (int g = 0; g < k.size(); ++g) {
          const int n = k.generator(g).dim;
          const SMap slice = tensor_map(m.sources[n], kt, yoneda(k, k.id(g)), identity_map(m.delta.body));
          const auto e = m.find(n, compose(h, slice));
          REQUIRE(e.has_value());
          adj.images.push_back(ms.term_of[n][*e]);
        }
        CHECK_FALSE(simplicial_violation(k, ms.body, adj).has_value());
        adjoints.insert(adj.images);
      }
      CHECK(adjoints.size() == left.size());
      CHECK(enumerate_maps(k, ms.body).size() == left.size());
    }
  }
}

TEST_CASE("stratified comparison needs a poset isomorphism") {
  const Poset p = Poset::discrete({"p0", "p1"});
  const Poset q = Poset::total_order({"q"});
  const FilteredSSet x = filtered_complex(p, {"u"}, {0}, {{0}});
  const FilteredSSet y = delta_phi(q, {0});
  const StratifiedMap collapse{x, y, PosetMap::make(p, q, {0, 0}), SMap{{y.body.id(0)}}};
  try {
    spi0_compare_stratified(collapse);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAnIsomorphismOfPosets);
  }
  const Poset r = Poset::discrete({"r0", "r1"});
  const FilteredSSet z = filtered_complex(r, {"w"}, {1}, {{0}});
  const StratifiedMap swap{filtered_complex(p, {"u"}, {0}, {{0}}), z, PosetMap::make(p, r, {1, 0}),
                           SMap{{z.body.id(0)}}};
  CHECK(spi0_compare_stratified(swap).isomorphism);
}

TEST_CASE("hexagon annulus: one component everywhere, no global pointing") {
  const FilteredSSet k = builtins::hexagon_annulus();
  CHECK_NOTHROW(validate(k));
  const SPi0 s = spi0(k);
  REQUIRE(s.chains.size() == 25);
  for (int c = 0; c < s.chains.size(); ++c) {
    CAPTURE(k.base.chain_name(s.chains[c]));
    CHECK(s.size(c) == 1);
  }
  CHECK_FALSE(global_pointing_exists(k).exists);
  // every (a, b) edge pins the c-vertex of its triangle
  const Poset& p = k.base;
  for (const Chain& c : chains(p))
    if (c.size() == 3) CHECK(mapping_space(k, c, 0).elements[0].size() == 1);
}

TEST_CASE("base change counterexamples") {
  SUBCASE("collapsing the base") {
    const auto c = builtins::collapsing_base();
    check_filtered(c.x, c.pulled_pushed.value, c.unit);
    const Spi0Comparison r = compare_spi0(c.x, c.pulled_pushed.value, c.unit);
    CHECK_FALSE(r.isomorphism);
    REQUIRE(r.first_failure.has_value());
    CHECK(c.x.base.chain_name(*r.first_failure) == "p1");
    CHECK(r.source_size == 0);
    CHECK(r.target_size == 1);
  }
  SUBCASE("missing a stratum") {
    const auto c = builtins::missing_stratum();
    CHECK(c.pulled.value.empty());
    CHECK(c.pushed_pulled.empty());
  }
  SUBCASE("reordering the base") {
    const StratifiedMap f = builtins::reordered_base();
    const Factorization fac = factorize(f);
    CHECK(compare_spi0(f.source, fac.pulled.value, fac.to_pullback).isomorphism);
    const Spi0Comparison r = compare_spi0(fac.pushed, f.target, fac.from_pushforward);
    CHECK_FALSE(r.isomorphism);
    REQUIRE(r.first_failure.has_value());
    CHECK(f.target.base.chain_name(*r.first_failure) == "q0<q1");
    CHECK(r.source_size == 0);
    CHECK(r.target_size == 1);
    CHECK_THROWS_AS(spi0_compare_stratified(f), Error);
  }
}
