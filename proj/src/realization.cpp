#include "strat/realization.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "strat/error.hpp"

namespace strat {

RealPoint canonicalize(const Poset& base, const Chain& chain, const std::vector<double>& coords) {
  if (chain.size() != coords.size()) throw Error(ErrorKind::IndexOutOfRange, "one coordinate per chain vertex");
  if (!base.is_chain(chain)) throw Error(ErrorKind::NotMonotone, "carrier is not a chain");
  double sum = 0;
  for (double t : coords) {
    if (!(t >= -kDropTolerance)) throw Error(ErrorKind::NegativeCoordinate, "coordinate " + std::to_string(t));
    sum += t;
  }
  if (!(std::abs(sum - 1) <= kSumTolerance))
    throw Error(ErrorKind::SumOutOfTolerance, "coordinates sum to " + std::to_string(sum));
  RealPoint out;
  double kept = 0;
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (coords[i] > kDropTolerance) {
      out.carrier.push_back(chain[i]);
      out.coords.push_back(coords[i]);
      kept += coords[i];
    }
  if (std::abs(kept - 1) > kRescaleSlack)
    for (double& t : out.coords) t /= kept;
  return out;
}

int phi_p(const RealPoint& pt) {
  if (pt.carrier.empty()) throw Error(ErrorKind::PreconditionViolated, "empty carrier");
  return pt.carrier.back();
}

std::vector<double> expand(const RealPoint& pt, const Chain& chain) {
  if (!is_subchain(pt.carrier, chain)) throw Error(ErrorKind::NotASubchain, "carrier is not inside the chain");
  std::vector<double> out(chain.size(), 0.0);
  const auto pos = subchain_positions(pt.carrier, chain);
  for (std::size_t i = 0; i < pos.size(); ++i) out[pos[i]] = pt.coords[i];
  return out;
}

RealPoint stratum_deformation(const Poset& base, const Chain& psi, const Chain& targets, const RealPoint& pt, double s) {
  if (!(s >= 0 && s <= 1)) throw Error(ErrorKind::PreconditionViolated, "homotopy parameter outside [0, 1]");
  if (std::find(targets.begin(), targets.end(), phi_p(pt)) == targets.end())
    throw Error(ErrorKind::PreconditionViolated, "point lies outside the target strata");
  const std::vector<double> t = expand(pt, psi);
  std::vector<bool> inside(psi.size());
  double in = 0, out = 0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    inside[i] = std::find(targets.begin(), targets.end(), psi[i]) != targets.end();
    (inside[i] ? in : out) += t[i];
  }
  // the last positive coordinate sits at a target vertex, so in > 0
  if (!(in > 0)) throw Error(ErrorKind::PreconditionViolated, "no mass on the target vertices");
  std::vector<double> h(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) h[i] = inside[i] ? t[i] * (1 + s * (out / in)) : t[i] * (1 - s);
  return canonicalize(base, psi, h);
}

double distance(const RealPoint& a, const RealPoint& b, const Chain& chain) {
  const auto x = expand(a, chain), y = expand(b, chain);
  double d = 0;
  for (std::size_t i = 0; i < chain.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

RealPoint straight_line_contraction(const Poset& base, const Chain& phi, const RealPoint& pt, const RealPoint& f_pt,
                               double s) {
  if (!(s >= 0 && s <= 1)) throw Error(ErrorKind::PreconditionViolated, "homotopy parameter outside [0, 1]");
  if (phi_p(f_pt) != phi_p(pt)) throw Error(ErrorKind::NotFiltered, "sample moves the point to another stratum");
  const auto x = expand(pt, phi), y = expand(f_pt, phi);
  std::vector<double> h(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) h[i] = s * y[i] + (1 - s) * x[i];
  return canonicalize(base, phi, h);
}

RealPoint random_point(std::mt19937_64& rng, const Poset& base, const Chain& chain, const Chain& allowed) {
  std::vector<std::size_t> ends;
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (allowed.empty() || std::find(allowed.begin(), allowed.end(), chain[i]) != allowed.end()) ends.push_back(i);
  if (ends.empty()) throw Error(ErrorKind::PreconditionViolated, "no admissible last vertex");
  const std::size_t last = ends[std::uniform_int_distribution<std::size_t>(0, ends.size() - 1)(rng)];
  std::exponential_distribution<double> weight(1.0);
  std::bernoulli_distribution keep(0.5);
  std::vector<double> w(chain.size(), 0.0);
  double sum = 0;
  for (std::size_t i = 0; i <= last; ++i)
    if (i == last || keep(rng)) sum += (w[i] = weight(rng) + 1e-3);
  for (double& x : w) x /= sum;
  return canonicalize(base, chain, w);
}

GlueReport deformation_glue_check(const Poset& base, const Chain& mu, const Chain& psi, const Chain& targets,
                               std::size_t samples, std::uint64_t seed) {
  if (!is_subchain(mu, psi)) throw Error(ErrorKind::NotASubchain, base.chain_name(mu) + " is not inside " + base.chain_name(psi));
  GlueReport report;
  bool meets = false;
  for (int v : mu) meets = meets || std::find(targets.begin(), targets.end(), v) != targets.end();
  if (!meets) return report;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> param(0.0, 1.0);
  for (std::size_t k = 0; k < samples; ++k) {
    const RealPoint x = random_point(rng, base, mu, targets);
    const double s = param(rng);
    const double d = distance(stratum_deformation(base, mu, targets, x, s), stratum_deformation(base, psi, targets, x, s), psi);
    report.max_deviation = std::max(report.max_deviation, d);
    ++report.samples;
    if (d > kSumTolerance) {
      std::ostringstream msg;
      msg << "deviation " << d << " at s = " << s << " on " << base.chain_name(x.carrier);
      throw Error(ErrorKind::GlueMismatch, msg.str());
    }
  }
  return report;
}

NumericSuiteReport numeric_suite(const Poset& base, std::size_t samples_per_pair, std::uint64_t seed) {
  NumericSuiteReport r;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> param(0.0, 1.0);
  const auto all = chains(base);
  auto sum_error = [](const RealPoint& p) {
    double s = 0;
    for (double t : p.coords) s += t;
    return std::abs(s - 1);
  };
  for (const auto& [mu, psi] : chain_inclusions(base)) {
    ++r.pairs;
    // targets: chains that contain a vertex of mu, so that points of mu can qualify
    std::vector<const Chain*> usable;
    for (const Chain& c : all)
      for (int v : mu)
        if (std::find(c.begin(), c.end(), v) != c.end()) {
          usable.push_back(&c);
          break;
        }
    for (std::size_t k = 0; k < samples_per_pair; ++k) {
      const Chain& targets = *usable[std::uniform_int_distribution<std::size_t>(0, usable.size() - 1)(rng)];
      const RealPoint x = random_point(rng, base, mu, targets);
      const double s = param(rng);
      ++r.samples;

      const RealPoint h = stratum_deformation(base, psi, targets, x, s);
      r.max_sum_error = std::max(r.max_sum_error, sum_error(h));
      r.stratum_failures += phi_p(h) != phi_p(x);
      r.max_glue_deviation = std::max(r.max_glue_deviation, distance(h, stratum_deformation(base, mu, targets, x, s), psi));
      if (stratum_deformation(base, psi, targets, x, 0) != x) ++r.endpoint_failures;
      for (int v : stratum_deformation(base, psi, targets, x, 1).carrier)
        if (std::find(targets.begin(), targets.end(), v) == targets.end()) {
          ++r.endpoint_failures;
          break;
        }

      // a filtered self-map of the simplex of psi, sampled at x
      const RealPoint fx = random_point(rng, base, psi, Chain{phi_p(x)});
      const RealPoint c = straight_line_contraction(base, psi, x, fx, s);
      r.max_sum_error = std::max(r.max_sum_error, sum_error(c));
      r.stratum_failures += phi_p(c) != phi_p(x);
      if (straight_line_contraction(base, psi, x, fx, 0) != x || straight_line_contraction(base, psi, x, fx, 1) != fx)
        ++r.endpoint_failures;
    }
  }
  return r;
}

}  // namespace strat
