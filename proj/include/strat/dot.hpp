#pragma once

#include <string>

#include "strat/diagrams.hpp"
#include "strat/homotopy.hpp"

namespace strat::dot {

/// Hasse diagram: one node per element, one edge per covering relation.
std::string poset(const Poset& p, const std::string& name = "poset");
/// Chains of p, with an edge from each chain to each proper subchain.
std::string chain_category(const Poset& p);
/// Objects of a set diagram with their generating arrows, labelled by size.
std::string diagram_shape(const SetDiagram& g);
/// One node per (chain, class); edges are restrictions to codimension-one subchains.
std::string spi0(const SPi0& s);

}  // namespace strat::dot
