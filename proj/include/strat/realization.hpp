#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "strat/poset.hpp"

namespace strat {

inline constexpr double kDropTolerance = 1e-12;
inline constexpr double kSumTolerance = 1e-9;
inline constexpr double kRescaleSlack = 1e-14;

/// A point of the realization of N(P): a chain and barycentric coordinates,
/// all strictly positive in canonical form.
struct RealPoint {
  Chain carrier;
  std::vector<double> coords;
  bool operator==(const RealPoint&) const = default;
};

/// Drops coordinates <= kDropTolerance with their chain entries and rescales
/// the rest to sum to 1. Sums already within kRescaleSlack of 1 are kept as
/// they are, so canonical points are fixed bit for bit. Throws NegativeCoordinate below -kDropTolerance,
/// SumOutOfTolerance when the sum is off by more than kSumTolerance.
RealPoint canonicalize(const Poset& base, const Chain& chain, const std::vector<double>& coords);

/// Last vertex of the carrier (the point's stratum).
int phi_p(const RealPoint& pt);

/// Coordinates of pt on the vertices of a chain containing its carrier.
std::vector<double> expand(const RealPoint& pt, const Chain& chain);

/// The deformation of phi_P^{-1}(targets) onto the simplex of `targets`,
/// evaluated on the simplex of psi: coordinates at vertices outside targets
/// shrink by (1 - s), those inside absorb their mass proportionally.
/// Throws PreconditionViolated unless phi_p(pt) is in targets and 0 <= s <= 1.
RealPoint stratum_deformation(const Poset& base, const Chain& psi, const Chain& targets, const RealPoint& pt, double s);

/// l-infinity distance after expanding both points onto `chain`.
double distance(const RealPoint& a, const RealPoint& b, const Chain& chain);

/// Straight-line contraction s f(pt) + (1 - s) pt inside the simplex of phi.
/// Throws NotFiltered when f_pt lies in another stratum than pt.
RealPoint straight_line_contraction(const Poset& base, const Chain& phi, const RealPoint& pt, const RealPoint& f_pt,
                               double s);

/// Random point with carrier inside `chain` whose last vertex lies in `allowed`
/// (every vertex of chain when allowed is empty). Requires such a vertex.
RealPoint random_point(std::mt19937_64& rng, const Poset& base, const Chain& chain, const Chain& allowed);

struct GlueReport {
  std::size_t samples = 0;
  double max_deviation = 0;
};
/// Compares the homotopies on mu and psi at random points of mu; throws
/// GlueMismatch above kSumTolerance.
GlueReport deformation_glue_check(const Poset& base, const Chain& mu, const Chain& psi, const Chain& targets,
                               std::size_t samples, std::uint64_t seed);

/// Property suite over every pair of nested chains.
struct NumericSuiteReport {
  std::size_t pairs = 0;
  std::size_t samples = 0;
  double max_sum_error = 0;
  std::size_t stratum_failures = 0;   // phi_p not preserved
  std::size_t endpoint_failures = 0;  // s = 0 / s = 1 identities
  double max_glue_deviation = 0;

  bool passed() const {
    return max_sum_error <= kSumTolerance && stratum_failures == 0 && endpoint_failures == 0 &&
           max_glue_deviation <= kSumTolerance;
  }
};
NumericSuiteReport numeric_suite(const Poset& base, std::size_t samples_per_pair, std::uint64_t seed);

}  // namespace strat
