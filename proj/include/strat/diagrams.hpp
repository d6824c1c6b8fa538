#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strat/filtered.hpp"
#include "strat/poset.hpp"
#include "strat/simplicial.hpp"

namespace strat {

/// R(P)^op as a poset: one element per chain (named by chain_name), with
/// phi <= psi iff psi is a subchain of phi. Arrows point from a chain to its subchains.
Poset chain_category_op(const Poset& base);

/// A functor R(P)^op -> sSet. Values are indexed like ChainIndex(base).
struct Diagram {
  Poset base;
  ChainIndex chains;
  SSetDiagram functor;                          // over chain_category_op(base)
  std::map<std::pair<int, int>, SMap> arrows;   // every (phi, psi) with psi a subchain of phi

  const SSet& value(int chain) const { return functor.values.at(chain); }
  const SMap& restriction(int phi, int psi) const { return arrows.at({phi, psi}); }
};

/// Builds a diagram from values and any generating set of restrictions
/// (keyed by (phi, psi) chain indices); checks functoriality.
Diagram make_diagram(const Poset& base, std::vector<SSet> values, std::map<std::pair<int, int>, SMap> restrictions);

/// K^{Delta^phi}: K on subchains of phi, empty elsewhere, identities inside phi.
Diagram kdelta(const Poset& base, const SSet& k, const Chain& phi);

/// One cell attachment: a copy of standard(n) glued along `attaching`, a map
/// boundary(n) -> F(phi) into the complex built so far.
struct CellAttachment {
  int n = 0;
  Chain phi;
  SMap attaching;
};

/// Iterated pushout of kdelta(boundary(n), phi) -> kdelta(standard(n), phi).
Diagram cell_complex(const Poset& base, const std::vector<CellAttachment>& cells);
/// Adds one cell to an existing cell complex.
Diagram attach_cell(const Diagram& f, const CellAttachment& cell);

/// The pair category: objects (phi, psi) with psi a subchain of phi, and
/// (phi, psi) <= (phi', psi') iff phi' is a subchain of phi and psi of psi'.
struct PairCategory {
  Poset shape;                           // element names "phi|psi"
  std::vector<std::pair<int, int>> objects;  // chain indices (phi, psi)
};
PairCategory pair_category(const Poset& base);

/// F (x) R(P): (phi, psi) |-> F(phi) (x) Delta^psi, as a diagram over the pair category.
struct TensorRP {
  Poset base;
  PairCategory category;
  std::vector<Tensor> values;
  SSetDiagram functor;  // generating arrows = covering relations of the pair category

  const FilteredSSet& value(int object) const { return values.at(object).value; }
};
TensorRP tensor_rp(const Diagram& f, std::size_t budget = kDefaultBudget);

/// Colim over the pair category of F (x) R(P), with labels from representatives.
struct DiagramColimit {
  FilteredSSet value;
  Colimit colimit;
  TensorRP tensor;
  /// The object (phi, phi) of the pair category.
  int diagonal_object(int chain) const;
};
DiagramColimit colim_diagram(const Diagram& f, std::size_t budget = kDefaultBudget);

// ---------------------------------------------------------------------------
// Set-valued diagrams

struct SetDiagram {
  Poset shape;
  std::vector<std::vector<std::string>> values;  // element labels per object
  std::map<std::pair<int, int>, std::vector<int>> arrows;  // generating arrows a < b

  int total_elements() const;
  /// Functions along every a <= b (identities included); throws NotAFunctor.
  std::map<std::pair<int, int>, std::vector<int>> all_arrows() const;
};

/// Simplices of every value up to max_degree, labelled "n:term".
SetDiagram forgetful(const SSetDiagram& f, int max_degree);
/// Degree bound covering every degree that matters for cell complexes over base.
int default_degree_bound(const Poset& base, int max_cell_dim);

struct SetColimit {
  int classes = 0;
  std::vector<std::vector<int>> legs;  // object -> element -> class id
  std::vector<std::pair<int, int>> representatives;  // class id -> least (object, element)
};
SetColimit set_colim(const SetDiagram& g);
bool mono_into_colim(const SetDiagram& g, int object);

/// Result of the almost-filtered check. A violating zigzag is reported as
/// (object, element) nodes x_0, x_1, ..., x_{2n+2}; for the first condition
/// this reads (d, x), (d1, x1), (d2, x2), (d3, x3), (d, y).
struct AlmostFilteredVerdict {
  bool holds = true;
  /// False when the zigzag bound was reached before the search space was
  /// exhausted; a positive verdict is then only valid up to the bound.
  bool complete = true;
  int failed_condition = 0;
  std::vector<std::pair<int, int>> witness;
};

/// bound: maximal number of odd zigzag positions explored for the second
/// condition; defaults to the total number of elements.
AlmostFilteredVerdict almost_filtered(const SetDiagram& g, std::optional<std::size_t> bound = std::nullopt);

}  // namespace strat
