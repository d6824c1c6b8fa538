#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strat/filtered.hpp"
#include "strat/poset.hpp"
#include "strat/simplicial.hpp"

namespace strat {

/// Truncated simplicial mapping space: the degree-n elements are the filtered
/// maps standard(n) (x) Delta^phi -> K, for n <= max_degree.
struct MappingSpace {
  Chain phi;
  int max_degree = 0;
  FilteredSSet delta;                          // Delta^phi
  std::vector<Tensor> sources;                 // standard(n) (x) Delta^phi
  std::vector<std::vector<SMap>> coface_maps;  // [n][i] : source n-1 -> source n
  std::vector<std::vector<SMap>> codegeneracy_maps;  // [n][i] : source n+1 -> source n
  std::vector<std::vector<SMap>> elements;     // per degree, in enumeration order
  std::vector<std::map<std::vector<Term>, int>> index;

  std::optional<int> find(int degree, const SMap& f) const;
  /// d_i and s_i act by precomposition with (coface/codegeneracy) x id.
  int face(int degree, int element, int i) const;
  int degeneracy(int degree, int element, int i) const;
};

MappingSpace mapping_space(const FilteredSSet& k, const Chain& phi, int max_degree,
                           std::size_t budget = kDefaultBudget);

/// The mapping space through max_degree as a simplicial set in normal form.
/// Generator names are "<degree>:<element>".
struct MappingSpaceSSet {
  SSet body;
  std::vector<std::vector<Term>> term_of;  // per degree, per element
};
MappingSpaceSSet mapping_space_sset(const MappingSpace& m);

/// A filtered map Delta^phi -> K.
struct Pointing {
  Chain chain;
  SMap map;
};
Pointing restrict_pointing(const Poset& base, const Pointing& p, const Chain& psi);

/// Stratified pi_0 as a functor R(P)^op -> Set. For every chain the points are
/// the filtered maps Delta^phi -> K; classes are identified by their least point.
struct SPi0 {
  Poset base;
  ChainIndex chains;
  std::vector<std::vector<SMap>> points;      // per chain
  std::vector<std::vector<int>> class_of;     // per chain, per point
  std::vector<std::vector<int>> classes;      // per chain, sorted class ids
  std::map<std::pair<int, int>, std::map<int, int>> restrictions;  // (phi, psi) -> class map

  std::size_t size(int chain) const { return classes.at(chain).size(); }
};
SPi0 spi0(const FilteredSSet& k, std::size_t budget = kDefaultBudget);

/// Searches for a filtered map N(P) -> K.
struct GlobalPointing {
  bool exists = false;
  SMap witness;
};
GlobalPointing global_pointing_exists(const FilteredSSet& k);

/// Natural transformation sPi0(X) -> sPi0(Y) induced by a filtered map.
struct SPi0Map {
  std::vector<std::map<int, int>> components;  // per chain: class id -> class id
};
/// Throws NaturalityFailure if the induced maps are not well defined or natural.
SPi0Map spi0_map(const SPi0& x, const SPi0& y, const FilteredSSet& source, const SMap& f);

/// Whether a filtered map induces an isomorphism on sPi0; reports the first
/// chain (in chain order) where it does not.
struct Spi0Comparison {
  bool isomorphism = true;
  std::optional<Chain> first_failure;
  std::size_t source_size = 0;  // at the failing chain
  std::size_t target_size = 0;
};
Spi0Comparison compare_spi0(const FilteredSSet& x, const FilteredSSet& y, const SMap& f,
                            std::size_t budget = kDefaultBudget);

/// Stratified version: alpha must be an isomorphism of posets; compares
/// sPi0(X) with sPi0(Y) reindexed along alpha, through f_> : alpha_* X -> Y.
Spi0Comparison spi0_compare_stratified(const StratifiedMap& f, std::size_t budget = kDefaultBudget);

}  // namespace strat
