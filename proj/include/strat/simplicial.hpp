#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strat/error.hpp"
#include "strat/poset.hpp"

namespace strat {

/// A simplex in Eilenberg-Zilber normal form: sigma^* g for a non-degenerate
/// generator g and a surjective monotone sigma : [degree] -> [dim g].
///
/// The surjection is stored instead of the degeneracy word; the two are in
/// bijection (the word is the set of j with sigma(j) == sigma(j+1), listed in
/// decreasing order), and the surjection makes faces and map application a
/// matter of composing index vectors.
struct Term {
  int gen = -1;
  std::vector<int> sigma;

  int degree() const { return static_cast<int>(sigma.size()) - 1; }
  int base_dim() const { return sigma.empty() ? -1 : sigma.back(); }
  bool degenerate() const { return degree() != base_dim(); }

  /// Strictly decreasing degeneracy indices, outermost first.
  std::vector<int> word() const;

  static Term identity(int gen, int dim);
  static Term from_word(int gen, int dim, const std::vector<int>& word);

  auto operator<=>(const Term&) const = default;
};

namespace surjection {

std::vector<int> identity(int n);
/// All monotone surjections [n] -> [m], lexicographic.
std::vector<std::vector<int>> all(int n, int m);
/// outer o inner, both as index vectors.
std::vector<int> compose(std::span<const int> outer, std::span<const int> inner);
/// Monotone map [n] -> [n-1] collapsing j and j+1.
std::vector<int> codegeneracy(int n, int j);

}  // namespace surjection

struct Generator {
  std::string name;
  int dim = 0;
  std::vector<Term> faces;  // d_0 .. d_dim
};

/// Finite simplicial set presented by non-degenerate generators and their faces.
class SSet {
 public:
  /// Adds a generator; faces must reference existing generators and satisfy the
  /// simplicial identities d_i d_j = d_{j-1} d_i (i < j).
  int add_generator(std::string name, int dim, std::vector<Term> faces = {});

  int size() const { return static_cast<int>(gens_.size()); }
  bool empty() const { return gens_.empty(); }
  const Generator& generator(int g) const { return gens_.at(g); }
  const std::vector<Generator>& generators() const { return gens_; }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<int>& generators_of_dim(int n) const;

  std::optional<int> find(std::string_view name) const;
  int index_of(std::string_view name) const;

  Term id(int g) const { return Term::identity(g, gens_.at(g).dim); }

  Term face(const Term& t, int i) const;
  Term degeneracy(const Term& t, int i) const;
  /// Vertex generators of t, in order (length degree + 1).
  std::vector<int> vertices(const Term& t) const;

  /// Every simplex of the given degree: generators by index, surjections lexicographic.
  std::vector<Term> simplices(int degree) const;
  std::size_t count_simplices(int degree) const;

  std::string term_name(const Term& t) const;
  void check_term(const Term& t) const;

  bool operator==(const SSet& other) const;

 private:
  std::vector<Generator> gens_;
  std::vector<std::vector<int>> by_dim_;
  std::map<std::string, int, std::less<>> by_name_;
  std::vector<std::vector<int>> vertex_cache_;
};

/// Simplicial map, given by the image of every generator of the source.
struct SMap {
  std::vector<Term> images;
  bool operator==(const SMap&) const = default;
};

Term apply(const SMap& f, const Term& t);
/// g o f
SMap compose(const SMap& g, const SMap& f);
SMap identity_map(const SSet& x);

/// Returns a description of the first violated face relation, or nullopt.
std::optional<std::string> simplicial_violation(const SSet& source, const SSet& target, const SMap& f);
void check_simplicial(const SSet& source, const SSet& target, const SMap& f);

/// Degree-wise injectivity, via the generator criterion (non-degenerate
/// generators land on distinct non-degenerate simplices).
bool is_mono(const SSet& source, const SMap& f);
/// Degree-wise injectivity checked by enumerating every simplex up to max_degree.
bool injective_through(const SSet& source, const SMap& f, int max_degree);
/// Bijective on generators (hence an isomorphism of simplicial sets).
bool is_isomorphism(const SSet& source, const SSet& target, const SMap& f);

// Standard cells. Generators of standard(n) are the nonempty subsets of
// {0..n}, named "0,1,...", ordered by dimension then lexicographically.
SSet standard(int n);
SSet boundary(int n);
SSet horn(int n, int k);
/// Inclusion of a subcomplex of standard(n) (matching generator names).
SMap standard_inclusion(const SSet& sub, const SSet& full);
/// Simplicial map standard(m) -> standard(n) induced by monotone theta : [m] -> [n].
SMap standard_map(int m, int n, std::span<const int> theta);
/// The simplex of standard(n) with the given weakly increasing vertex sequence.
Term standard_term(const SSet& standard_n, std::span<const int> vertex_sequence);

/// The map standard(n) -> X classifying a degree-n simplex t (Yoneda).
SMap yoneda(const SSet& x, const Term& t);

/// Ordered simplicial complex: every nonempty subset of a facet, with vertices
/// ordered by index. Generators are named by their vertex names joined with ','.
SSet simplicial_complex(const std::vector<std::string>& vertices, const std::vector<std::vector<int>>& facets);

/// Product X x Y, optionally restricted to a sub-simplicial set through `keep`
/// (which must be closed under faces).
struct Product {
  SSet body;
  std::vector<std::pair<Term, Term>> parts;
  std::map<std::pair<Term, Term>, int> index;

  /// Normal form of the pair (a, b); the pair must lie in the product.
  Term pair(const Term& a, const Term& b) const;
  std::optional<Term> try_pair(const Term& a, const Term& b) const;
  SMap proj_left() const;
  SMap proj_right() const;
};

using PairFilter = std::function<bool(const Term&, const Term&)>;
Product product(const SSet& x, const SSet& y, const PairFilter& keep = {},
                std::size_t budget = kDefaultBudget);
/// f x g between two products.
SMap product_map(const Product& source, const Product& target, const SMap& f, const SMap& g);

/// Search space for simplicial maps X -> Y.
struct MapSearch {
  /// Pre-assigned images (by source generator index).
  std::map<int, Term> fixed;
  /// Candidate images for a generator; defaults to every simplex of the right degree.
  std::function<const std::vector<Term>&(int gen)> candidates;
  /// Extra per-generator filter applied before face checks.
  std::function<bool(int gen, const Term& image)> admissible;
  /// Cap on backtracking nodes; 0 means unlimited.
  std::size_t node_budget = 0;
};

/// Visits every simplicial map extending the constraints, in deterministic order.
/// `visit` returns false to stop. Returns the number of maps visited.
std::size_t search_maps(const SSet& x, const SSet& y, const MapSearch& search,
                        const std::function<bool(const SMap&)>& visit);
std::vector<SMap> enumerate_maps(const SSet& x, const SSet& y, const std::map<int, Term>& constraints = {},
                                 std::size_t budget = kDefaultBudget);

/// Functor from a finite poset (viewed as a category) to finite simplicial sets,
/// given on generating arrows a -> b (a < b).
struct SSetDiagram {
  Poset shape;
  std::vector<SSet> values;
  std::map<std::pair<int, int>, SMap> arrows;

  /// Map along a <= b for every comparable pair; throws NotAFunctor when
  /// composites disagree or a relation has no generating path.
  std::map<std::pair<int, int>, SMap> all_arrows() const;
};

struct Colimit {
  SSet body;
  std::vector<SMap> legs;  // value(o) -> body
  /// For each generator of body: (object, generator) of its representative.
  std::vector<std::pair<int, Term>> representatives;
};

/// Degree-wise colimit by union-find over all simplices, re-normalized to EZ form.
Colimit colimit(const SSetDiagram& diagram, std::size_t budget = kDefaultBudget);

}  // namespace strat
