#include "strat/lifting.hpp"

#include <algorithm>
#include <set>

namespace strat {

std::string GenCell::name(const Poset& base) const {
  const std::string body = kind == Kind::Boundary ? "boundary(" + std::to_string(n) + ")"
                                                  : "horn(" + std::to_string(n) + "," + std::to_string(k) + ")";
  return body + "@" + base.chain_name(phi);
}

CellInclusion realize(const Poset& base, const GenCell& cell) {
  if (!base.is_chain(cell.phi)) throw Error(ErrorKind::NotMonotone, "cell chain is not strictly increasing");
  const FilteredSSet delta = delta_phi(base, cell.phi);
  const SSet full = standard(cell.n);
  const SSet sub = cell.kind == GenCell::Kind::Boundary ? boundary(cell.n) : horn(cell.n, cell.k);
  const Tensor source = tensor(sub, delta);
  const Tensor target = tensor(full, delta);
  return {source.value, target.value,
          tensor_map(source, target, standard_inclusion(sub, full), identity_map(delta.body))};
}

GeneratingSets generating_sets(const Poset& base, int n_max) {
  if (n_max < 0) throw Error(ErrorKind::IndexOutOfRange, "negative dimension bound");
  GeneratingSets out;
  for (const Chain& phi : chains(base))
    for (int n = 0; n <= n_max; ++n) {
      out.cofibrations.push_back({GenCell::Kind::Boundary, n, 0, phi});
      for (int k = 0; n >= 1 && k <= n; ++k) out.trivial_cofibrations.push_back({GenCell::Kind::Horn, n, k, phi});
    }
  return out;
}

// ---------------------------------------------------------------------------
// Lifts

std::optional<SMap> find_lift(const LiftingProblem& prob, std::size_t node_budget) {
  check_filtered(prob.a, prob.b, prob.i);
  check_filtered(prob.x, prob.y, prob.p);
  check_filtered(prob.a, prob.x, prob.top);
  check_filtered(prob.b, prob.y, prob.bottom);
  if (compose(prob.p, prob.top) != compose(prob.bottom, prob.i))
    throw Error(ErrorKind::SquareDoesNotCommute, "p o top differs from bottom o i");

  const LabelIndex index(prob.b, prob.x);
  MapSearch search = filtered_search(index);
  search.node_budget = node_budget;
  // a generator hit by i as a non-degenerate simplex has its image forced
  for (int g = 0; g < prob.a.size(); ++g) {
    const Term& t = prob.i.images[g];
    if (t.degenerate()) continue;
    const Term forced = prob.top.images[g];
    auto [it, fresh] = search.fixed.emplace(t.gen, forced);
    if (!fresh && it->second != forced) return std::nullopt;
  }
  for (const auto& [g, t] : search.fixed)
    if (prob.x.phi_of(t) != prob.b.phi[g]) return std::nullopt;
  search.admissible = [&](int g, const Term& image) { return apply(prob.p, image) == prob.bottom.images[g]; };

  std::optional<SMap> lift;
  search_maps(prob.b.body, prob.x.body, search, [&](const SMap& h) {
    // i need not be injective, so the upper triangle is re-checked in full
    if (compose(h, prob.i) != prob.top) return true;
    lift = h;
    return false;
  });
  if (lift) {
    if (filtered_violation(prob.b, prob.x, *lift) || compose(prob.p, *lift) != prob.bottom)
      throw Error(ErrorKind::NotFiltered, "lift search returned an invalid diagonal");
  }
  return lift;
}

RlpVerdict rlp_against(const FilteredSSet& x, const FilteredSSet& y, const SMap& p, const Poset& base,
                       const std::vector<GenCell>& cells, std::size_t cap) {
  check_filtered(x, y, p);
  RlpVerdict out;
  for (const GenCell& cell : cells) {
    const CellInclusion inc = realize(base, cell);
    std::size_t squares = 0;
    // cap + 1 map budget per enumeration, so that overflow is detected rather than thrown
    const std::size_t budget = (cap + 1) * std::max<std::size_t>(1, std::max(inc.source.size(), inc.target.size()));
    auto over_cap = [&] {
      out.status = RlpVerdict::Status::Budget;
      out.failing_cell = cell;
      return out;
    };
    std::vector<SMap> tops;
    try {
      tops = enumerate_filtered_maps(inc.source, x, {}, budget);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::BudgetExceeded) return over_cap();
      throw;
    }
    for (const SMap& top : tops) {
      const SMap down = compose(p, top);
      std::map<int, Term> constraints;
      for (int g = 0; g < inc.source.size(); ++g)
        if (!inc.map.images[g].degenerate()) constraints.emplace(inc.map.images[g].gen, down.images[g]);
      std::vector<SMap> bottoms;
      try {
        bottoms = enumerate_filtered_maps(inc.target, y, constraints, budget);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::BudgetExceeded) return over_cap();
        throw;
      }
      for (const SMap& bottom : bottoms) {
        if (compose(bottom, inc.map) != down) continue;
        if (++squares > cap) return over_cap();
        ++out.squares;
        const LiftingProblem prob{inc.source, inc.target, x, y, inc.map, p, top, bottom};
        if (!find_lift(prob)) {
          out.status = RlpVerdict::Status::Fail;
          out.failing_cell = cell;
          out.top = top;
          out.bottom = bottom;
          return out;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Retract of a degenerate labelled simplex

Retract retract_decompose(const Poset& base, const Tuple& phi) {
  if (phi.empty() || !base.is_weakly_increasing(phi))
    throw Error(ErrorKind::NotMonotone, "retract needs a weakly increasing tuple");
  Retract out;
  out.phibar = image_chain(base, phi);
  const int n = static_cast<int>(phi.size()) - 1;
  const int k = static_cast<int>(out.phibar.size()) - 1;
  out.simplex = delta_phi(base, phi);
  out.middle = tensor(standard(n), delta_phi(base, out.phibar));

  // block[v]: position of phi(v) in phibar; blocks are intervals of vertices
  std::vector<int> block(n + 1), first(k + 1, n + 1), last(k + 1, -1);
  for (int v = 0; v <= n; ++v) {
    block[v] = static_cast<int>(std::find(out.phibar.begin(), out.phibar.end(), phi[v]) - out.phibar.begin());
    first[block[v]] = std::min(first[block[v]], v);
    last[block[v]] = std::max(last[block[v]], v);
  }
  // Inside its own block a vertex stays put; otherwise it is clamped into
  // block l. Sending every foreign vertex to the first vertex of block l would
  // not be monotone in v once a later block is involved.
  out.vertex_map.assign(k + 1, std::vector<int>(n + 1));
  for (int l = 0; l <= k; ++l)
    for (int v = 0; v <= n; ++v) out.vertex_map[l][v] = std::clamp(v, first[l], last[l]);

  const SSet& sn = out.middle.product.body;
  const SSet cell_n = standard(n);
  const SSet cell_k = standard(k);
  for (int g = 0; g < sn.size(); ++g) {
    const auto& [left, right] = out.middle.product.parts[g];
    const auto vs = cell_n.vertices(left);
    const auto ls = cell_k.vertices(right);
    std::vector<int> image;
    for (std::size_t j = 0; j < vs.size(); ++j) image.push_back(out.vertex_map[ls[j]][vs[j]]);
    out.retraction.images.push_back(standard_term(out.simplex.body, image));
  }
  for (int g = 0; g < out.simplex.size(); ++g) {
    const auto vs = out.simplex.body.vertices(out.simplex.body.id(g));
    std::vector<int> blocks;
    for (int v : vs) blocks.push_back(block[v]);
    out.section.images.push_back(
        out.middle.product.pair(cell_n.id(g), standard_term(cell_k, blocks)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Finite segments of the naturals

Poset natural_segment(int length) {
  if (length < 1) throw Error(ErrorKind::IndexOutOfRange, "segment needs at least one element");
  std::vector<std::string> names;
  for (int i = 0; i < length; ++i) names.push_back(std::to_string(i));
  return Poset::total_order(names);
}

PosetMap segment_embedding(const Poset& total_order, int length) {
  if (total_order.height() != total_order.size())
    throw Error(ErrorKind::NotMonotone, "only total orders embed in a segment");
  if (total_order.size() > length) throw Error(ErrorKind::IndexOutOfRange, "segment too short");
  std::vector<int> assignment(total_order.size());
  const auto order = total_order.linear_extension();
  for (int i = 0; i < static_cast<int>(order.size()); ++i) assignment[order[i]] = i;
  return PosetMap::make(total_order, natural_segment(length), assignment);
}

GenCell push_cell(const PosetMap& alpha, const GenCell& cell) {
  GenCell out = cell;
  out.phi = alpha.apply(cell.phi);
  if (!alpha.target.is_chain(out.phi)) throw Error(ErrorKind::NotMonotone, "cell chain collapses under the map");
  return out;
}

}  // namespace strat
