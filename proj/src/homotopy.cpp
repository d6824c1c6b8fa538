#include "strat/homotopy.hpp"

#include <set>

#include "strat/union_find.hpp"

namespace strat {

namespace {

std::vector<int> coface(int n, int i) {
  std::vector<int> theta;
  for (int v = 0; v <= n; ++v)
    if (v != i) theta.push_back(v);
  return theta;
}

SMap chain_inclusion(const Chain& psi, const Chain& phi) {
  return standard_map(static_cast<int>(psi.size()) - 1, static_cast<int>(phi.size()) - 1,
                      subchain_positions(psi, phi));
}

}  // namespace

// ---------------------------------------------------------------------------
// Mapping spaces

std::optional<int> MappingSpace::find(int degree, const SMap& f) const {
  const auto& idx = index.at(degree);
  auto it = idx.find(f.images);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

int MappingSpace::face(int degree, int element, int i) const {
  const SMap g = compose(elements.at(degree).at(element), coface_maps.at(degree).at(i));
  if (auto e = find(degree - 1, g)) return *e;
  throw Error(ErrorKind::NotFiltered, "face of a mapping-space element is not listed");
}

int MappingSpace::degeneracy(int degree, int element, int i) const {
  const SMap g = compose(elements.at(degree).at(element), codegeneracy_maps.at(degree).at(i));
  if (auto e = find(degree + 1, g)) return *e;
  throw Error(ErrorKind::NotFiltered, "degeneracy of a mapping-space element is not listed");
}

MappingSpace mapping_space(const FilteredSSet& k, const Chain& phi, int max_degree, std::size_t budget) {
  if (max_degree < 0) throw Error(ErrorKind::IndexOutOfRange, "negative degree bound");
  if (!k.base.is_chain(phi)) throw Error(ErrorKind::NotMonotone, "mapping space needs a chain");
  MappingSpace m;
  m.phi = phi;
  m.max_degree = max_degree;
  m.delta = delta_phi(k.base, phi);
  const SMap id = identity_map(m.delta.body);
  for (int n = 0; n <= max_degree; ++n) {
    m.sources.push_back(tensor(standard(n), m.delta, budget));
    m.elements.push_back(enumerate_filtered_maps(m.sources.back().value, k, {}, budget));
    std::map<std::vector<Term>, int> idx;
    for (int e = 0; e < static_cast<int>(m.elements.back().size()); ++e) idx.emplace(m.elements.back()[e].images, e);
    m.index.push_back(std::move(idx));
  }
  m.coface_maps.resize(max_degree + 1);
  m.codegeneracy_maps.resize(max_degree + 1);
  for (int n = 1; n <= max_degree; ++n)
    for (int i = 0; i <= n; ++i)
      m.coface_maps[n].push_back(tensor_map(m.sources[n - 1], m.sources[n], standard_map(n - 1, n, coface(n, i)), id));
  for (int n = 0; n < max_degree; ++n)
    for (int i = 0; i <= n; ++i)
      m.codegeneracy_maps[n].push_back(
          tensor_map(m.sources[n + 1], m.sources[n], standard_map(n + 1, n, surjection::codegeneracy(n + 1, i)), id));
  return m;
}

MappingSpaceSSet mapping_space_sset(const MappingSpace& m) {
  MappingSpaceSSet out;
  out.term_of.resize(m.max_degree + 1);
  for (int n = 0; n <= m.max_degree; ++n) {
    for (int e = 0; e < static_cast<int>(m.elements[n].size()); ++e) {
      std::optional<Term> degenerate;
      for (int j = 0; j < n && !degenerate; ++j) {
        const int below = m.face(n, e, j);
        if (m.degeneracy(n - 1, below, j) == e) degenerate = out.body.degeneracy(out.term_of[n - 1][below], j);
      }
      if (degenerate) {
        out.term_of[n].push_back(*degenerate);
        continue;
      }
      std::vector<Term> faces;
      for (int i = 0; n >= 1 && i <= n; ++i) faces.push_back(out.term_of[n - 1][m.face(n, e, i)]);
      const int g = out.body.add_generator(std::to_string(n) + ":" + std::to_string(e), n, std::move(faces));
      out.term_of[n].push_back(out.body.id(g));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pointings and stratified pi_0

Pointing restrict_pointing(const Poset& base, const Pointing& p, const Chain& psi) {
  if (!base.is_chain(psi) || !is_subchain(psi, p.chain))
    throw Error(ErrorKind::NotASubchain, base.chain_name(psi) + " is not a subchain of " + base.chain_name(p.chain));
  return Pointing{psi, compose(p.map, chain_inclusion(psi, p.chain))};
}

SPi0 spi0(const FilteredSSet& k, std::size_t budget) {
  SPi0 out;
  out.base = k.base;
  out.chains = ChainIndex(k.base);
  const int count = out.chains.size();
  out.points.resize(count);
  out.class_of.resize(count);
  out.classes.resize(count);
  std::vector<std::map<std::vector<Term>, int>> point_index(count);

  for (int c = 0; c < count; ++c) {
    // degree-0 elements of Delta^0 (x) Delta^phi have the generator order of
    // Delta^phi, so the same image lists describe maps Delta^phi -> K
    const MappingSpace m = mapping_space(k, out.chains[c], 1, budget);
    out.points[c] = m.elements[0];
    UnionFind uf(static_cast<int>(m.elements[0].size()));
    for (int e = 0; e < static_cast<int>(m.elements[1].size()); ++e) uf.unite(m.face(1, e, 0), m.face(1, e, 1));
    for (int p = 0; p < static_cast<int>(out.points[c].size()); ++p) {
      out.class_of[c].push_back(uf.find(p));  // roots are least members
      if (uf.find(p) == p) out.classes[c].push_back(p);
      point_index[c].emplace(out.points[c][p].images, p);
    }
  }

  for (int phi = 0; phi < count; ++phi)
    for (int psi = 0; psi < count; ++psi) {
      if (!is_subchain(out.chains[psi], out.chains[phi])) continue;
      const SMap incl = chain_inclusion(out.chains[psi], out.chains[phi]);
      std::map<int, int> cls;
      for (int p = 0; p < static_cast<int>(out.points[phi].size()); ++p) {
        const auto it = point_index[psi].find(compose(out.points[phi][p], incl).images);
        if (it == point_index[psi].end())
          throw Error(ErrorKind::NaturalityFailure, "restricted point is not a point of the subchain");
        const int from = out.class_of[phi][p], to = out.class_of[psi][it->second];
        auto [pos, fresh] = cls.emplace(from, to);
        if (!fresh && pos->second != to)
          throw Error(ErrorKind::NaturalityFailure, "restriction is not well defined on classes");
      }
      out.restrictions.emplace(std::make_pair(phi, psi), std::move(cls));
    }
  return out;
}

GlobalPointing global_pointing_exists(const FilteredSSet& k) {
  GlobalPointing out;
  out.exists = has_filtered_map(nerve(k.base), k, &out.witness);
  return out;
}

SPi0Map spi0_map(const SPi0& x, const SPi0& y, const FilteredSSet& source, const SMap& f) {
  (void)source;
  SPi0Map out;
  const int count = x.chains.size();
  out.components.resize(count);
  for (int c = 0; c < count; ++c) {
    std::map<std::vector<Term>, int> target_index;
    for (int p = 0; p < static_cast<int>(y.points[c].size()); ++p) target_index.emplace(y.points[c][p].images, p);
    for (int p = 0; p < static_cast<int>(x.points[c].size()); ++p) {
      const auto it = target_index.find(compose(f, x.points[c][p]).images);
      if (it == target_index.end()) throw Error(ErrorKind::NaturalityFailure, "image of a point is not a point");
      const int from = x.class_of[c][p], to = y.class_of[c][it->second];
      auto [pos, fresh] = out.components[c].emplace(from, to);
      if (!fresh && pos->second != to)
        throw Error(ErrorKind::NaturalityFailure, "induced map is not well defined on classes");
    }
  }
  for (const auto& [key, r] : x.restrictions) {
    const auto [phi, psi] = key;
    const auto& ry = y.restrictions.at(key);
    for (const auto& [cls, image] : r)
      if (ry.at(out.components[phi].at(cls)) != out.components[psi].at(image))
        throw Error(ErrorKind::NaturalityFailure,
                    "naturality fails along " + x.base.chain_name(x.chains[phi]) + " -> " +
                        x.base.chain_name(x.chains[psi]));
  }
  return out;
}

Spi0Comparison compare_spi0(const FilteredSSet& x, const FilteredSSet& y, const SMap& f, std::size_t budget) {
  check_filtered(x, y, f);
  const SPi0 sx = spi0(x, budget);
  const SPi0 sy = spi0(y, budget);
  const SPi0Map t = spi0_map(sx, sy, x, f);
  Spi0Comparison out;
  for (int c = 0; c < sx.chains.size(); ++c) {
    std::set<int> image;
    for (const auto& [from, to] : t.components[c]) image.insert(to);
    const bool bijective = image.size() == sx.size(c) && image.size() == sy.size(c);
    if (!bijective) {
      out.isomorphism = false;
      out.first_failure = sx.chains[c];
      out.source_size = sx.size(c);
      out.target_size = sy.size(c);
      return out;
    }
  }
  return out;
}

Spi0Comparison spi0_compare_stratified(const StratifiedMap& f, std::size_t budget) {
  if (!f.alpha.is_isomorphism())
    throw Error(ErrorKind::NotAnIsomorphismOfPosets, "stratified comparison needs an isomorphism of posets");
  check_stratified(f);
  return compare_spi0(pushforward(f.alpha, f.source), f.target, f.map, budget);
}

}  // namespace strat
