#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strat/poset.hpp"
#include "strat/simplicial.hpp"

namespace strat {

/// A finite simplicial set K with a structure map K -> N(P). The structure map
/// is stored on generators as weakly increasing tuples of base elements.
struct FilteredSSet {
  Poset base;
  SSet body;
  std::vector<Tuple> phi;  // one tuple per generator, length dim + 1

  int size() const { return body.size(); }
  bool empty() const { return body.empty(); }
  /// Label tuple of an arbitrary simplex.
  Tuple phi_of(const Term& t) const;
  int add_generator(std::string name, int dim, std::vector<Term> faces, Tuple label);
};

/// First violation of the labelling invariants (PhiNotMonotone or PhiNotSimplicial).
std::optional<Error> phi_violation(const FilteredSSet& k);
void validate(const FilteredSSet& k);

FilteredSSet empty_filtered(const Poset& base);
/// standard(n) labelled by phi (n = |phi| - 1).
FilteredSSet delta_phi(const Poset& base, const Tuple& phi);
/// N(P) over itself: one generator per chain (in chains() order), phi = identity.
FilteredSSet nerve(const Poset& base);
/// The simplex of nerve(base) with the given weakly increasing tuple.
Term nerve_term(const ChainIndex& index, const Poset& base, const Tuple& tuple);

/// Ordered simplicial complex whose vertices carry base labels. Vertices of a
/// simplex are ordered by label (along a linear extension), then by index;
/// labels on a simplex must form a chain.
FilteredSSet filtered_complex(const Poset& base, const std::vector<std::string>& vertices,
                              const std::vector<int>& labels, const std::vector<std::vector<int>>& facets);

/// Maps over the identity of the base.
std::optional<std::string> filtered_violation(const FilteredSSet& x, const FilteredSSet& y, const SMap& f);
void check_filtered(const FilteredSSet& x, const FilteredSSet& y, const SMap& f);

/// K (x) X: the product K x X labelled through the projection to X.
struct Tensor {
  FilteredSSet value;
  Product product;  // parts are (K simplex, X simplex)
};
Tensor tensor(const SSet& k, const FilteredSSet& x, std::size_t budget = kDefaultBudget);
/// f (x) g
SMap tensor_map(const Tensor& source, const Tensor& target, const SMap& f, const SMap& g);

/// Candidate images for filtered map search: the simplices of Y carrying the
/// label of each generator of X.
class LabelIndex {
 public:
  LabelIndex(const FilteredSSet& x, const FilteredSSet& y);
  const std::vector<Term>& candidates(int gen) const;

 private:
  const FilteredSSet* x_;
  const FilteredSSet* y_;
  mutable std::map<Tuple, std::vector<Term>> by_label_;
  mutable std::map<int, bool> degree_done_;
};

/// MapSearch restricted to label-preserving images. The returned search keeps
/// a pointer to `index`, which must outlive it.
MapSearch filtered_search(const LabelIndex& index);

std::vector<SMap> enumerate_filtered_maps(const FilteredSSet& x, const FilteredSSet& y,
                                          const std::map<int, Term>& constraints = {},
                                          std::size_t budget = kDefaultBudget);
bool has_filtered_map(const FilteredSSet& x, const FilteredSSet& y, SMap* witness = nullptr);

// --- base change along a poset map alpha : P -> Q

/// alpha_* X: same body, labels pushed forward.
FilteredSSet pushforward(const PosetMap& alpha, const FilteredSSet& x);

/// alpha^* Y: the fiber product Y x_{N(Q)} N(P).
struct Pullback {
  FilteredSSet value;
  Product product;      // parts are (Y simplex, N(P) simplex)
  FilteredSSet source_nerve;
  ChainIndex chains;

  /// The simplex (y, tuple) of alpha^* Y.
  Term pair(const Term& y, const Tuple& tuple) const;
  /// Counit alpha_* alpha^* Y -> Y.
  SMap to_target() const { return product.proj_left(); }
};
Pullback pullback(const PosetMap& alpha, const FilteredSSet& y, std::size_t budget = kDefaultBudget);
/// alpha^*(h) for a filtered map h : Y -> Y' over Q.
SMap pullback_map(const Pullback& source, const Pullback& target, const SMap& h);
/// Unit X -> alpha^* alpha_* X.
SMap unit_map(const FilteredSSet& x, const Pullback& pulled_pushed);

/// A map of stratified simplicial sets: f over the poset map alpha.
struct StratifiedMap {
  FilteredSSet source;  // over alpha.source
  FilteredSSet target;  // over alpha.target
  PosetMap alpha;
  SMap map;
};
void check_stratified(const StratifiedMap& f);

/// The two factorizations f = counit o f^< (over P) and f = f_> (over Q).
struct Factorization {
  Pullback pulled;        // alpha^* Y
  FilteredSSet pushed;    // alpha_* X
  SMap to_pullback;       // f^< : X -> alpha^* Y
  SMap from_pushforward;  // f_> : alpha_* X -> Y
};
Factorization factorize(const StratifiedMap& f);

/// Checks that f |-> f^< is a bijection Hom(alpha_* X, Y) -> Hom(X, alpha^* Y).
/// Returns the common hom-set size; throws BijectionFailure otherwise.
std::size_t adjunction_check(const PosetMap& alpha, const FilteredSSet& x, const FilteredSSet& y,
                             std::size_t budget = kDefaultBudget);

}  // namespace strat
