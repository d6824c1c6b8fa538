#include "strat/filtered.hpp"

#include <set>

namespace strat {

Tuple FilteredSSet::phi_of(const Term& t) const {
  return surjection::compose(phi.at(t.gen), t.sigma);
}

int FilteredSSet::add_generator(std::string name, int dim, std::vector<Term> faces, Tuple label) {
  const int g = body.add_generator(std::move(name), dim, std::move(faces));
  phi.push_back(std::move(label));
  return g;
}

std::optional<Error> phi_violation(const FilteredSSet& k) {
  if (static_cast<int>(k.phi.size()) != k.body.size())
    return Error(ErrorKind::PhiNotSimplicial, "one label per generator required");
  for (int g = 0; g < k.body.size(); ++g) {
    const auto& gen = k.body.generator(g);
    const Tuple& label = k.phi[g];
    if (static_cast<int>(label.size()) != gen.dim + 1)
      return Error(ErrorKind::PhiNotSimplicial, gen.name + ": label length differs from dimension + 1");
    for (int v : label)
      if (v < 0 || v >= k.base.size()) return Error(ErrorKind::UnknownElement, gen.name + ": label outside base");
    if (!k.base.is_weakly_increasing(label))
      return Error(ErrorKind::PhiNotMonotone, gen.name + ": label " + k.base.chain_name(label) + " not increasing");
    for (int i = 0; i < static_cast<int>(gen.faces.size()); ++i) {
      Tuple expected = label;
      expected.erase(expected.begin() + i);
      if (k.phi_of(gen.faces[i]) != expected)
        return Error(ErrorKind::PhiNotSimplicial, gen.name + ": label of d_" + std::to_string(i) + " disagrees");
    }
  }
  return std::nullopt;
}

void validate(const FilteredSSet& k) {
  if (auto e = phi_violation(k)) throw *e;
}

FilteredSSet empty_filtered(const Poset& base) { return FilteredSSet{base, {}, {}}; }

FilteredSSet delta_phi(const Poset& base, const Tuple& phi) {
  if (phi.empty() || !base.is_weakly_increasing(phi))
    throw Error(ErrorKind::NotMonotone, "label tuple must be weakly increasing and nonempty");
  FilteredSSet out{base, standard(static_cast<int>(phi.size()) - 1), {}};
  for (int g = 0; g < out.body.size(); ++g) {
    Tuple label;
    for (int v : out.body.vertices(out.body.id(g))) label.push_back(phi[v]);
    out.phi.push_back(std::move(label));
  }
  return out;
}

FilteredSSet nerve(const Poset& base) {
  const ChainIndex index(base);
  FilteredSSet out{base, {}, {}};
  for (const Chain& c : index.all()) {
    std::vector<Term> faces;
    if (c.size() >= 2) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        Chain f = c;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        faces.push_back(out.body.id(index.at(f)));
      }
    }
    out.add_generator(base.chain_name(c), static_cast<int>(c.size()) - 1, std::move(faces), c);
  }
  return out;
}

Term nerve_term(const ChainIndex& index, const Poset& base, const Tuple& tuple) {
  const Chain c = image_chain(base, tuple);
  Term t{index.at(c), {}};
  std::size_t pos = 0;
  for (int v : tuple) {
    while (c[pos] != v) ++pos;
    t.sigma.push_back(static_cast<int>(pos));
  }
  return t;
}

FilteredSSet filtered_complex(const Poset& base, const std::vector<std::string>& vertices,
                              const std::vector<int>& labels, const std::vector<std::vector<int>>& facets) {
  if (labels.size() != vertices.size()) throw Error(ErrorKind::UnknownElement, "one label per vertex required");
  std::vector<int> rank(base.size());
  const auto order = base.linear_extension();
  for (int i = 0; i < static_cast<int>(order.size()); ++i) rank[order[i]] = i;
  // renumber vertices so that index order refines label order
  std::vector<int> perm(vertices.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return rank.at(labels[a]) < rank.at(labels[b]); });
  std::vector<int> position(vertices.size());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    position[perm[i]] = static_cast<int>(i);
    names.push_back(vertices[perm[i]]);
  }
  std::vector<std::vector<int>> renumbered;
  for (const auto& f : facets) {
    std::vector<int> r;
    for (int v : f) r.push_back(position.at(v));
    renumbered.push_back(std::move(r));
  }
  FilteredSSet out{base, simplicial_complex(names, renumbered), {}};
  for (int g = 0; g < out.body.size(); ++g) {
    Tuple label;
    for (int v : out.body.vertices(out.body.id(g))) label.push_back(labels[perm[v]]);
    out.phi.push_back(std::move(label));
  }
  validate(out);
  return out;
}

std::optional<std::string> filtered_violation(const FilteredSSet& x, const FilteredSSet& y, const SMap& f) {
  if (!(x.base == y.base)) return "source and target live over different posets";
  if (auto v = simplicial_violation(x.body, y.body, f)) return v;
  for (int g = 0; g < x.size(); ++g)
    if (y.phi_of(f.images[g]) != x.phi[g])
      return "label of " + x.body.generator(g).name + " is not preserved";
  return std::nullopt;
}

void check_filtered(const FilteredSSet& x, const FilteredSSet& y, const SMap& f) {
  if (auto v = filtered_violation(x, y, f)) throw Error(ErrorKind::NotFiltered, *v);
}

Tensor tensor(const SSet& k, const FilteredSSet& x, std::size_t budget) {
  Tensor out{FilteredSSet{x.base, {}, {}}, product(k, x.body, {}, budget)};
  out.value.body = out.product.body;
  for (const auto& [a, b] : out.product.parts) out.value.phi.push_back(x.phi_of(b));
  return out;
}

SMap tensor_map(const Tensor& source, const Tensor& target, const SMap& f, const SMap& g) {
  return product_map(source.product, target.product, f, g);
}

// ---------------------------------------------------------------------------
// Filtered map search

LabelIndex::LabelIndex(const FilteredSSet& x, const FilteredSSet& y) : x_(&x), y_(&y) {
  if (!(x.base == y.base)) throw Error(ErrorKind::BaseMismatch, "filtered maps need a common base poset");
}

const std::vector<Term>& LabelIndex::candidates(int gen) const {
  const int d = x_->body.generator(gen).dim;
  if (!degree_done_[d]) {
    for (auto& t : y_->body.simplices(d)) by_label_[y_->phi_of(t)].push_back(std::move(t));
    degree_done_[d] = true;
  }
  return by_label_[x_->phi[gen]];
}

MapSearch filtered_search(const LabelIndex& index) {
  MapSearch s;
  s.candidates = [&index](int g) -> const std::vector<Term>& { return index.candidates(g); };
  return s;
}

std::vector<SMap> enumerate_filtered_maps(const FilteredSSet& x, const FilteredSSet& y,
                                          const std::map<int, Term>& constraints, std::size_t budget) {
  const LabelIndex index(x, y);
  MapSearch search = filtered_search(index);
  for (const auto& [g, t] : constraints) {
    if (g < 0 || g >= x.size()) throw Error(ErrorKind::InconsistentConstraint, "constraint on unknown generator");
    y.body.check_term(t);
    if (y.phi_of(t) != x.phi[g])
      throw Error(ErrorKind::InconsistentConstraint, "constraint on " + x.body.generator(g).name + " moves its label");
  }
  search.fixed = constraints;
  std::vector<SMap> out;
  search_maps(x.body, y.body, search, [&](const SMap& f) {
    out.push_back(f);
    if (out.size() * std::max<std::size_t>(1, x.size()) > budget)
      throw Error(ErrorKind::BudgetExceeded, "filtered map enumeration exceeds the budget");
    return true;
  });
  return out;
}

bool has_filtered_map(const FilteredSSet& x, const FilteredSSet& y, SMap* witness) {
  const LabelIndex index(x, y);
  bool found = false;
  search_maps(x.body, y.body, filtered_search(index), [&](const SMap& f) {
    found = true;
    if (witness) *witness = f;
    return false;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Base change

FilteredSSet pushforward(const PosetMap& alpha, const FilteredSSet& x) {
  if (!(x.base == alpha.source)) throw Error(ErrorKind::BaseMismatch, "pushforward along a map from another poset");
  FilteredSSet out{alpha.target, x.body, {}};
  for (const Tuple& t : x.phi) out.phi.push_back(alpha.apply(t));
  return out;
}

Term Pullback::pair(const Term& y, const Tuple& tuple) const {
  return product.pair(y, nerve_term(chains, source_nerve.base, tuple));
}

Pullback pullback(const PosetMap& alpha, const FilteredSSet& y, std::size_t budget) {
  if (!(y.base == alpha.target)) throw Error(ErrorKind::BaseMismatch, "pullback along a map into another poset");
  Pullback out;
  out.source_nerve = nerve(alpha.source);
  out.chains = ChainIndex(alpha.source);
  const FilteredSSet& n = out.source_nerve;
  out.product = product(
      y.body, n.body,
      [&](const Term& a, const Term& b) { return y.phi_of(a) == alpha.apply(n.phi_of(b)); }, budget);
  out.value = FilteredSSet{alpha.source, out.product.body, {}};
  for (const auto& [a, b] : out.product.parts) out.value.phi.push_back(n.phi_of(b));
  return out;
}

SMap pullback_map(const Pullback& source, const Pullback& target, const SMap& h) {
  return product_map(source.product, target.product, h, identity_map(source.source_nerve.body));
}

SMap unit_map(const FilteredSSet& x, const Pullback& pulled_pushed) {
  SMap out;
  for (int g = 0; g < x.size(); ++g) out.images.push_back(pulled_pushed.pair(x.body.id(g), x.phi[g]));
  return out;
}

void check_stratified(const StratifiedMap& f) {
  if (!(f.source.base == f.alpha.source) || !(f.target.base == f.alpha.target))
    throw Error(ErrorKind::BaseMismatch, "stratified map bases differ from its poset map");
  check_simplicial(f.source.body, f.target.body, f.map);
  for (int g = 0; g < f.source.size(); ++g)
    if (f.target.phi_of(f.map.images[g]) != f.alpha.apply(f.source.phi[g]))
      throw Error(ErrorKind::SquareDoesNotCommute, "labels disagree on " + f.source.body.generator(g).name);
}

Factorization factorize(const StratifiedMap& f) {
  check_stratified(f);
  Factorization out;
  out.pulled = pullback(f.alpha, f.target);
  out.pushed = pushforward(f.alpha, f.source);
  for (int g = 0; g < f.source.size(); ++g)
    out.to_pullback.images.push_back(out.pulled.pair(f.map.images[g], f.source.phi[g]));
  out.from_pushforward = f.map;
  return out;
}

std::size_t adjunction_check(const PosetMap& alpha, const FilteredSSet& x, const FilteredSSet& y,
                             std::size_t budget) {
  const FilteredSSet pushed = pushforward(alpha, x);
  const Pullback pulled = pullback(alpha, y, budget);
  const auto left = enumerate_filtered_maps(pushed, y, {}, budget);
  const auto right = enumerate_filtered_maps(x, pulled.value, {}, budget);

  std::set<std::vector<Term>> left_set, right_set, adjoints;
  for (const auto& f : left) left_set.insert(f.images);
  for (const auto& f : right) right_set.insert(f.images);

  for (const auto& f : left) {
    SMap adj;
    for (int g = 0; g < x.size(); ++g) adj.images.push_back(pulled.pair(f.images[g], x.phi[g]));
    if (!right_set.count(adj.images)) throw Error(ErrorKind::BijectionFailure, "adjoint map is not a filtered map");
    if (!adjoints.insert(adj.images).second) throw Error(ErrorKind::BijectionFailure, "adjunction is not injective");
  }
  const SMap counit = pulled.to_target();
  for (const auto& r : right)
    if (!left_set.count(compose(counit, r).images))
      throw Error(ErrorKind::BijectionFailure, "counit composite is not a filtered map");
  if (left.size() != right.size()) throw Error(ErrorKind::BijectionFailure, "hom-set sizes differ");
  return left.size();
}

}  // namespace strat
