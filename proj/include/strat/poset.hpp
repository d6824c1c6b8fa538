#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strat {

/// Strictly increasing tuple of element indices; a non-degenerate simplex of N(P).
using Chain = std::vector<int>;

/// Weakly increasing tuple of element indices; an arbitrary simplex of N(P).
using Tuple = std::vector<int>;

/// Finite partially ordered set. Elements keep their input order, which is the
/// canonical order for every enumeration downstream.
class Poset {
 public:
  Poset() = default;

  /// Builds the reflexive-transitive closure of `pairs` (x <= y).
  static Poset from_relations(std::vector<std::string> elements,
                              const std::vector<std::pair<std::string, std::string>>& pairs);

  /// Total order e0 < e1 < ... in the given order.
  static Poset total_order(std::vector<std::string> elements);
  static Poset discrete(std::vector<std::string> elements);

  int size() const { return static_cast<int>(elements_.size()); }
  bool empty() const { return elements_.empty(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& name(int i) const { return elements_.at(i); }

  std::optional<int> find(std::string_view name) const;
  int index_of(std::string_view name) const;

  bool leq(int a, int b) const { return leq_[a * size() + b] != 0; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  /// All pairs a < b, in canonical order.
  std::vector<std::pair<int, int>> strict_relations() const;
  /// Covering pairs a < b with nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;
  /// Length (number of elements) of the longest chain; 0 for the empty poset.
  int height() const;

  /// Elements in an order compatible with leq (stable w.r.t. input order).
  std::vector<int> linear_extension() const;

  std::string chain_name(std::span<const int> tuple) const;
  Chain parse_chain(std::string_view text) const;

  bool is_weakly_increasing(std::span<const int> tuple) const;
  bool is_chain(std::span<const int> tuple) const;

  bool operator==(const Poset& other) const {
    return elements_ == other.elements_ && leq_ == other.leq_;
  }

 private:
  std::vector<std::string> elements_;
  std::vector<char> leq_;
};

/// Order-preserving map between finite posets.
struct PosetMap {
  Poset source;
  Poset target;
  std::vector<int> assignment;

  static PosetMap make(Poset source, Poset target, std::vector<int> assignment);
  static PosetMap identity(const Poset& p);

  int operator()(int x) const { return assignment.at(x); }
  Tuple apply(std::span<const int> tuple) const;
  bool is_isomorphism() const;
};

/// All chains of P: ordered by length, then lexicographically by element index.
std::vector<Chain> chains(const Poset& p);

/// Morphisms of R(P): pairs (psi, phi) with psi a subchain of phi, identities included.
std::vector<std::pair<Chain, Chain>> chain_inclusions(const Poset& p);

/// c(P): P with a fresh bottom element prepended.
Poset cone(const Poset& p, const std::string& bottom = "-inf");

/// Underlying set of a weakly increasing tuple, as a chain.
Chain image_chain(const Poset& p, std::span<const int> tuple);

bool is_subchain(std::span<const int> psi, std::span<const int> phi);

/// Positions of the entries of `psi` inside `phi`; requires is_subchain(psi, phi).
std::vector<int> subchain_positions(std::span<const int> psi, std::span<const int> phi);

/// Lookup table chain -> index in chains(p).
class ChainIndex {
 public:
  ChainIndex() = default;
  explicit ChainIndex(const Poset& p);

  const std::vector<Chain>& all() const { return chains_; }
  int size() const { return static_cast<int>(chains_.size()); }
  const Chain& operator[](int i) const { return chains_.at(i); }
  std::optional<int> find(const Chain& c) const;
  int at(const Chain& c) const;

 private:
  std::vector<Chain> chains_;
  std::map<Chain, int> index_;
};

}  // namespace strat
