#include <doctest.h>

#include <cmath>

#include "random_instances.hpp"
#include "strat/error.hpp"
#include "strat/realization.hpp"

using namespace strat;
using namespace strat::testing;

namespace {

Poset chain3() { return Poset::total_order({"q0", "q1", "q2"}); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a throw");
  return ErrorKind::UsageError;
}

}  // namespace

TEST_CASE("canonical form") {
  const Poset p = chain3();
  const RealPoint edge_end = canonicalize(p, {0, 1}, {1, 0});
  CHECK(edge_end.carrier == Chain{0});
  CHECK(edge_end.coords == std::vector<double>{1});
  const RealPoint interior = canonicalize(p, {0, 2}, {0.25, 0.75});
  CHECK(interior.carrier == Chain{0, 2});
  CHECK(interior.coords == std::vector<double>{0.25, 0.75});
  CHECK(canonicalize(p, interior.carrier, interior.coords) == interior);

  const RealPoint slightly_off = canonicalize(p, {0, 1}, {0.5, 0.5 + 5e-10});
  CHECK(std::abs(slightly_off.coords[0] + slightly_off.coords[1] - 1) < 1e-15);
  CHECK(canonicalize(p, {0, 1}, {-1e-13, 1}).carrier == Chain{1});

  CHECK(kind_of([&] { canonicalize(p, {0, 1}, {-0.1, 1.1}); }) == ErrorKind::NegativeCoordinate);
  CHECK(kind_of([&] { canonicalize(p, {0, 1}, {0.5, 0.6}); }) == ErrorKind::SumOutOfTolerance);
  CHECK(kind_of([&] { canonicalize(p, {1, 0}, {0.5, 0.5}); }) == ErrorKind::NotMonotone);
}

TEST_CASE("last vertex map") {
  const Poset p = chain3();
  CHECK(phi_p(canonicalize(p, {0, 1}, {0.3, 0.7})) == 1);
  CHECK(phi_p(canonicalize(p, {0, 1}, {1, 0})) == 0);
  CHECK(phi_p(canonicalize(p, {2}, {1})) == 2);
}

TEST_CASE("deformation onto the target simplex") {
  const Poset p = chain3();
  const RealPoint x = canonicalize(p, {0, 1}, {0.5, 0.5});
  const RealPoint end = stratum_deformation(p, {0, 1}, {1}, x, 1);
  CHECK(end.carrier == Chain{1});
  CHECK(end.coords == std::vector<double>{1});
  CHECK(stratum_deformation(p, {0, 1}, {1}, x, 0) == x);
  CHECK(kind_of([&] { stratum_deformation(p, {0, 1}, {0}, x, 0.5); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([&] { stratum_deformation(p, {0, 1}, {1}, x, 1.5); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([&] { stratum_deformation(p, {0}, {1}, x, 0.5); }) == ErrorKind::NotASubchain);
}

TEST_CASE("deformation moves off-target mass linearly and keeps target proportions") {
  Rng rng(41);
  std::uniform_real_distribution<double> param(0.0, 1.0);
  const Poset p = Poset::total_order(numbered("q", 5));
  const auto all = chains(p);
  for (int trial = 0; trial < 500; ++trial) {
    const Chain& psi = all[uniform(rng, 0, static_cast<int>(all.size()) - 1)];
    Chain targets;
    for (int v : psi)
      if (coin(rng)) targets.push_back(v);
    if (targets.empty()) targets.push_back(psi.back());
    const RealPoint x = random_point(rng, p, psi, targets);
    const double s = param(rng);
    const RealPoint h = stratum_deformation(p, psi, targets, x, s);
    const auto before = expand(x, psi), after = expand(h, psi);
    double off_before = 0, off_after = 0;
    int anchor = -1;
    for (std::size_t i = 0; i < psi.size(); ++i) {
      const bool in = std::find(targets.begin(), targets.end(), psi[i]) != targets.end();
      if (in && before[i] > 0) anchor = static_cast<int>(i);
      if (!in) {
        off_before += before[i];
        off_after += after[i];
      }
    }
    CHECK(off_after == doctest::Approx((1 - s) * off_before).epsilon(1e-12));
    REQUIRE(anchor >= 0);
    for (std::size_t i = 0; i < psi.size(); ++i)
      if (std::find(targets.begin(), targets.end(), psi[i]) != targets.end())
        CHECK(after[i] * before[anchor] == doctest::Approx(before[i] * after[anchor]).epsilon(1e-12));
    CHECK(phi_p(h) == phi_p(x));
  }
}

TEST_CASE("deformations on nested simplices agree") {
  const Poset p = Poset::from_relations({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"b", "d"}});
  for (const auto& [mu, psi] : chain_inclusions(p))
    for (const Chain& targets : chains(p)) {
      const GlueReport r = deformation_glue_check(p, mu, psi, targets, 50, 7);
      CHECK(r.max_deviation <= kSumTolerance);
    }
  CHECK(deformation_glue_check(p, {0}, {0, 1}, {2}, 10, 1).samples == 0);
  CHECK(kind_of([&] { deformation_glue_check(p, {2}, {0, 1}, {2}, 10, 1); }) == ErrorKind::NotASubchain);
}

TEST_CASE("straight-line contraction") {
  const Poset p = chain3();
  const Chain phi{0, 1, 2};
  const RealPoint x = canonicalize(p, phi, {0.2, 0.3, 0.5});
  const RealPoint fx = canonicalize(p, {1, 2}, {0.6, 0.4});
  CHECK(straight_line_contraction(p, phi, x, fx, 0) == x);
  CHECK(straight_line_contraction(p, phi, x, fx, 1) == fx);
  const RealPoint mid = straight_line_contraction(p, phi, x, fx, 0.5);
  CHECK(mid.coords[0] == doctest::Approx(0.1));
  CHECK(mid.coords[1] == doctest::Approx(0.45));
  CHECK(mid.coords[2] == doctest::Approx(0.45));
  CHECK(phi_p(mid) == 2);
  CHECK(kind_of([&] { straight_line_contraction(p, phi, x, canonicalize(p, {1}, {1}), 0.5); }) == ErrorKind::NotFiltered);
}

TEST_CASE("numeric suite on a branching poset") {
  const Poset p = Poset::from_relations({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "d"}});
  const NumericSuiteReport r = numeric_suite(p, 200, 3);
  CHECK(r.pairs == chain_inclusions(p).size());
  CHECK(r.samples == 200 * r.pairs);
  CHECK(r.passed());
}
