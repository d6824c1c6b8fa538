#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strat/filtered.hpp"
#include "strat/poset.hpp"
#include "strat/simplicial.hpp"

namespace strat {

/// A generating cell: boundary(n) (x) Delta^phi -> standard(n) (x) Delta^phi,
/// or the horn version with missing face k.
struct GenCell {
  enum class Kind { Boundary, Horn };
  Kind kind = Kind::Boundary;
  int n = 0;
  int k = 0;  // horns only
  Chain phi;

  std::string name(const Poset& base) const;
};

/// The inclusion a generating cell stands for.
struct CellInclusion {
  FilteredSSet source;
  FilteredSSet target;
  SMap map;
};
CellInclusion realize(const Poset& base, const GenCell& cell);

struct GeneratingSets {
  std::vector<GenCell> cofibrations;          // boundaries, 0 <= n <= n_max
  std::vector<GenCell> trivial_cofibrations;  // horns, 1 <= n <= n_max
};
GeneratingSets generating_sets(const Poset& base, int n_max);

/// A commutative square p o top = bottom o i of filtered maps
///   A --top--> X
///   |i         |p
///   B -bottom-> Y
struct LiftingProblem {
  FilteredSSet a, b, x, y;
  SMap i, p, top, bottom;
};

/// A diagonal h : B -> X with h o i = top and p o h = bottom, or nullopt after
/// exhausting every candidate. Throws SquareDoesNotCommute, NotFiltered, and
/// BudgetExceeded when node_budget (0 = unlimited) runs out.
std::optional<SMap> find_lift(const LiftingProblem& prob, std::size_t node_budget = 0);

struct RlpVerdict {
  enum class Status { Pass, Fail, Budget };
  Status status = Status::Pass;
  std::size_t squares = 0;
  std::optional<GenCell> failing_cell;  // first failure, or the cell that hit the cap
  SMap top, bottom;                     // the failing square
};

/// Right lifting property of p : X -> Y against every cell, checking each
/// commutative square. More than `cap` squares for one cell gives Budget.
RlpVerdict rlp_against(const FilteredSSet& x, const FilteredSSet& y, const SMap& p, const Poset& base,
                       const std::vector<GenCell>& cells, std::size_t cap = 10'000);

/// Delta^phi for a weakly increasing phi as a retract of
/// standard(n) (x) Delta^phibar, phibar the image chain.
struct Retract {
  Chain phibar;
  FilteredSSet simplex;   // Delta^phi
  Tensor middle;          // standard(n) (x) Delta^phibar; parts are (standard(n), standard(k))
  SMap section;           // Delta^phi -> middle, (Id, phi-collapse)
  SMap retraction;        // middle -> Delta^phi
  /// Vertex formula of the retraction: block l of the chain, vertex v of standard(n).
  std::vector<std::vector<int>> vertex_map;  // [l][v]
};
Retract retract_decompose(const Poset& base, const Tuple& phi);

/// Names of the finite initial segment {0 < 1 < ... < length-1} of the naturals.
Poset natural_segment(int length);
/// Order embedding of a finite total order into a segment, by position.
PosetMap segment_embedding(const Poset& total_order, int length);
/// The cell with its chain moved along an injective poset map.
GenCell push_cell(const PosetMap& alpha, const GenCell& cell);

}  // namespace strat
