#include <doctest.h>

#include <set>

#include "random_instances.hpp"
#include "strat/error.hpp"
#include "strat/simplicial.hpp"

using namespace strat;

namespace {

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Lattice-path oracle: non-degenerate top simplices of Delta^m x Delta^n are
// monotone staircase paths from (0,0) to (m,n).
std::uint64_t staircase_paths(int m, int n) {
  std::vector<std::vector<std::uint64_t>> dp(m + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j)
      dp[i][j] = (i == 0 || j == 0) ? 1 : dp[i - 1][j] + dp[i][j - 1];
  return dp[m][n];
}

Term random_term(testing::Rng& rng, const SSet& x, int extra) {
  const int g = testing::uniform(rng, 0, x.size() - 1);
  Term t = x.id(g);
  for (int k = 0; k < extra; ++k) t = x.degeneracy(t, testing::uniform(rng, 0, t.degree()));
  return t;
}

SSet circle() {
  SSet s;
  const int v = s.add_generator("v", 0);
  s.add_generator("e", 1, {s.id(v), s.id(v)});
  return s;
}

}  // namespace

TEST_CASE("faces and degeneracies on examples") {
  SSet x;
  const int v = x.add_generator("v", 0);
  const int w = x.add_generator("w", 0);
  const int e = x.add_generator("e", 1, {x.id(w), x.id(v)});

  const Term s0v = x.degeneracy(x.id(v), 0);
  CHECK(x.face(s0v, 1) == x.id(v));
  CHECK(x.face(x.id(e), 0) == x.id(w));
  CHECK(x.face(x.degeneracy(x.id(e), 1), 1) == x.id(e));
  CHECK(x.degeneracy(s0v, 0).word() == std::vector<int>{1, 0});

  SSet y;
  y.add_generator("a", 0);
  const SSet d2 = standard(2);
  CHECK(d2.degeneracy(d2.id(d2.index_of("0,1,2")), 2).word() == std::vector<int>{2});
  // s_2 does not apply to a 1-simplex
  CHECK_THROWS_AS(x.degeneracy(x.id(e), 2), Error);
  CHECK_THROWS_AS(x.face(x.id(v), 0), Error);

  CHECK(Term::from_word(e, 1, {2, 0}).word() == std::vector<int>{2, 0});
  CHECK_THROWS_AS(Term::from_word(e, 1, {3}), Error);
  CHECK(x.term_name(x.degeneracy(s0v, 0)) == "s1s0(v)");
}

TEST_CASE("simplicial identities on random composites") {
  testing::Rng rng(7);
  int evaluations = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const SSet x = trial % 2 ? testing::random_quotient(rng, 6, 5, 3) : testing::random_complex(rng, 6, 5, 3);
    for (int sample = 0; sample < 60; ++sample, ++evaluations) {
      const Term t = random_term(rng, x, testing::uniform(rng, 0, 3));
      const int n = t.degree();
      // normal form round trip
      CHECK(Term::from_word(t.gen, t.base_dim(), t.word()) == t);
      if (n >= 2) {
        const int j = testing::uniform(rng, 1, n);
        const int i = testing::uniform(rng, 0, j - 1);
        CHECK(x.face(x.face(t, j), i) == x.face(x.face(t, i), j - 1));
      }
      {
        const int j = testing::uniform(rng, 0, n);
        const Term s = x.degeneracy(t, j);
        CHECK(x.face(s, j) == t);
        CHECK(x.face(s, j + 1) == t);
        for (int i = 0; i < j && n >= 1; ++i) CHECK(x.face(s, i) == x.degeneracy(x.face(t, i), j - 1));
        for (int i = j + 2; i <= n + 1 && n >= 1; ++i) CHECK(x.face(s, i) == x.degeneracy(x.face(t, i - 1), j));
        for (int i = 0; i <= j; ++i) CHECK(x.degeneracy(s, i) == x.degeneracy(x.degeneracy(t, i), j + 1));
      }
    }
  }
  CHECK(evaluations >= 1000);
}

TEST_CASE("standard cells") {
  CHECK(standard(0).size() == 1);
  const SSet b2 = boundary(2);
  CHECK(b2.generators_of_dim(0).size() == 3);
  CHECK(b2.generators_of_dim(1).size() == 3);
  CHECK(b2.generators_of_dim(2).empty());
  const SSet h = horn(2, 1);
  CHECK(h.generators_of_dim(1).size() == 2);
  CHECK_FALSE(h.find("0,2"));
  CHECK(boundary(0).empty());
  CHECK_THROWS_AS(horn(2, 3), Error);
  CHECK(is_mono(h, standard_inclusion(h, standard(2))));
  CHECK(standard(3).size() == 15);
}

TEST_CASE("products") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      const Product p = product(standard(m), standard(n));
      CHECK(p.body.generators_of_dim(m + n).size() == binomial(m + n, m));
      CHECK(p.body.generators_of_dim(m + n).size() == staircase_paths(m, n));
      CHECK(p.body.dimension() == m + n);
      check_simplicial(p.body, standard(m), p.proj_left());
      check_simplicial(p.body, standard(n), p.proj_right());
    }
  testing::Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const SSet x = testing::random_quotient(rng, 5, 4, 2);
    const Product p = product(x, standard(0));
    for (int n = 0; n <= x.dimension(); ++n)
      CHECK(p.body.generators_of_dim(n).size() == x.generators_of_dim(n).size());
  }
}

TEST_CASE("map enumeration") {
  const SSet d1 = standard(1);
  CHECK(enumerate_maps(boundary(1), d1).size() == 4);

  testing::Rng rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    const SSet y = trial % 2 ? testing::random_quotient(rng, 5, 4, 2) : testing::random_complex(rng, 5, 4, 2);
    for (int n = 0; n <= 2; ++n) CHECK(enumerate_maps(standard(n), y).size() == y.simplices(n).size());
    // brute force oracle over vertex pairs for maps from the boundary of an edge
    CHECK(enumerate_maps(boundary(1), y).size() == y.simplices(0).size() * y.simplices(0).size());
  }

  // constraints
  const SSet d2 = standard(2);
  std::map<int, Term> fixed{{0, d2.id(d2.index_of("1"))}};
  for (const auto& f : enumerate_maps(d1, d2, fixed)) CHECK(f.images[0] == d2.id(d2.index_of("1")));
  CHECK(enumerate_maps(d1, d2, fixed).size() == 2);  // (1,1) degenerate, (1,2)
  fixed[0] = d2.id(d2.index_of("0,1"));
  CHECK_THROWS_AS(enumerate_maps(d1, d2, fixed), Error);
}

TEST_CASE("monomorphism criteria agree") {
  testing::Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const SSet y = testing::random_quotient(rng, 5, 5, 2);
    for (const auto& f : enumerate_maps(standard(1), y))
      CHECK(is_mono(standard(1), f) == injective_through(standard(1), f, 3));
  }
  const SSet c = circle();
  const SMap collapse{{c.id(0), c.id(0), c.id(1)}};
  check_simplicial(standard(1), c, collapse);
  CHECK_FALSE(is_mono(standard(1), collapse));
  CHECK_FALSE(injective_through(standard(1), collapse, 2));
  CHECK_FALSE(is_mono(boundary(1), SMap{{c.id(0), c.id(0)}}));
  CHECK_FALSE(injective_through(boundary(1), SMap{{c.id(0), c.id(0)}}, 2));
}

namespace {

// Naive saturation oracle: identify (o, x) ~ (o', f(x)) until nothing changes.
std::size_t naive_class_count(const SSetDiagram& d, int degree) {
  std::vector<std::pair<int, Term>> all;
  for (int o = 0; o < d.shape.size(); ++o)
    for (const auto& t : d.values[o].simplices(degree)) all.emplace_back(o, t);
  const std::size_t n = all.size();
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = 1;
  for (const auto& [key, f] : d.arrows)
    for (std::size_t i = 0; i < n; ++i) {
      if (all[i].first != key.first) continue;
      const Term img = apply(f, all[i].second);
      for (std::size_t j = 0; j < n; ++j)
        if (all[j].first == key.second && all[j].second == img) rel[i][j] = rel[j][i] = 1;
    }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rel[i][j])
          for (std::size_t k = 0; k < n; ++k)
            if (rel[j][k] && !rel[i][k]) rel[i][k] = changed = 1;
  }
  std::set<std::vector<char>> classes(rel.begin(), rel.end());
  return classes.size();
}

}  // namespace

TEST_CASE("colimits") {
  {
    SSetDiagram d;
    d.shape = Poset::from_relations({"e", "a", "b"}, {{"e", "a"}, {"e", "b"}});
    d.values = {SSet{}, standard(0), standard(0)};
    d.arrows[{0, 1}] = SMap{};
    d.arrows[{0, 2}] = SMap{};
    const Colimit c = colimit(d);
    CHECK(c.body.size() == 2);
    CHECK(c.body.dimension() == 0);
  }
  {
    SSetDiagram d;
    d.shape = Poset::from_relations({"b", "pt", "edge"}, {{"b", "pt"}, {"b", "edge"}});
    const SSet b = boundary(1);
    d.values = {b, standard(0), standard(1)};
    d.arrows[{0, 1}] = SMap{{Term::identity(0, 0), Term::identity(0, 0)}};
    d.arrows[{0, 2}] = standard_inclusion(b, standard(1));
    const Colimit c = colimit(d);
    CHECK(c.body.generators_of_dim(0).size() == 1);
    CHECK(c.body.generators_of_dim(1).size() == 1);
    for (int n = 0; n <= 2; ++n) CHECK(c.body.simplices(n).size() == naive_class_count(d, n));
  }
  {
    // constant value over the four-object shape
    SSetDiagram d;
    d.shape = Poset::from_relations({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
    d.values.assign(4, standard(0));
    for (auto [x, y] : d.shape.strict_relations()) d.arrows[{x, y}] = identity_map(standard(0));
    CHECK(colimit(d).body.size() == 1);
  }
  {
    // non-commuting square is rejected
    SSetDiagram d;
    d.shape = Poset::from_relations({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
    const SSet two = boundary(1);
    d.values.assign(4, two);
    d.arrows[{0, 1}] = identity_map(two);
    d.arrows[{0, 2}] = identity_map(two);
    d.arrows[{1, 3}] = identity_map(two);
    d.arrows[{2, 3}] = SMap{{two.id(1), two.id(0)}};
    CHECK_THROWS_AS(colimit(d), Error);
  }
}

TEST_CASE("colimit classes match the saturation oracle") {
  testing::Rng rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    // random pushouts: glue two random complexes along random vertex maps
    const SSet a = testing::random_complex(rng, 3, 1, 1);
    const SSet x = testing::random_complex(rng, 4, 3, 2);
    const SSet y = testing::random_quotient(rng, 4, 3, 2);
    const auto fs = enumerate_maps(a, x);
    const auto gs = enumerate_maps(a, y);
    if (fs.empty() || gs.empty()) continue;
    SSetDiagram d;
    d.shape = Poset::from_relations({"a", "x", "y"}, {{"a", "x"}, {"a", "y"}});
    d.values = {a, x, y};
    d.arrows[{0, 1}] = fs[testing::uniform(rng, 0, static_cast<int>(fs.size()) - 1)];
    d.arrows[{0, 2}] = gs[testing::uniform(rng, 0, static_cast<int>(gs.size()) - 1)];
    const Colimit c = colimit(d);
    for (int n = 0; n <= 3; ++n) CHECK(c.body.simplices(n).size() == naive_class_count(d, n));
    for (int o = 0; o < 3; ++o) check_simplicial(d.values[o], c.body, c.legs[o]);
  }
}
