#pragma once

#include <string>
#include <vector>

#include "strat/diagrams.hpp"
#include "strat/filtered.hpp"

namespace strat::builtins {

/// Four objects a, b < c, d; value {0,1} everywhere; every arrow the identity
/// except b -> d, which swaps 0 and 1. All arrows are injective, yet the
/// colimit is a single point.
SetDiagram swapped_square();

/// Seven strata a1, a2, a3 < b's < c with a_i below b_{i-1} and b_{i+1}
/// (indices mod 3). The poset itself.
Poset hexagon_poset();

/// A filtered annulus over hexagon_poset(): a hexagon a1-b2-a3-b1-a2-b3 of
/// (a, b) edges, a six-cycle of vertices in stratum c, and triangles joining
/// them. Every chain has exactly one component of maps, yet the six (a, b, c)
/// triangles reach six different c-vertices, so no map from the whole nerve exists.
FilteredSSet hexagon_annulus();

/// A point over a two-point discrete poset collapsed onto one point: the unit
/// X -> alpha^* alpha_* X gains a component over the other stratum.
struct CollapsingBase {
  PosetMap alpha;
  FilteredSSet x;
  Pullback pulled_pushed;
  SMap unit;
};
CollapsingBase collapsing_base();

/// A point over a stratum that alpha misses: alpha_* alpha^* Y is empty.
struct MissingStratum {
  PosetMap alpha;
  FilteredSSet y;
  Pullback pulled;
  FilteredSSet pushed_pulled;
};
MissingStratum missing_stratum();

/// Two discrete points mapped bijectively onto q0 < q1, sent to the two ends
/// of the edge over q0 < q1. The adjoint into the pullback is a bijection on
/// components; the map itself misses the edge's chain.
StratifiedMap reordered_base();

std::vector<std::string> names();

}  // namespace strat::builtins
