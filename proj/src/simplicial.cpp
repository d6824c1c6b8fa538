#include "strat/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "strat/union_find.hpp"

namespace strat {

// ---------------------------------------------------------------------------
// Terms and surjections

std::vector<int> Term::word() const {
  std::vector<int> w;
  for (int j = degree() - 1; j >= 0; --j)
    if (sigma[j] == sigma[j + 1]) w.push_back(j);
  return w;
}

Term Term::identity(int gen, int dim) { return Term{gen, surjection::identity(dim)}; }

Term Term::from_word(int gen, int dim, const std::vector<int>& word) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] <= word[i + 1])
      throw Error(ErrorKind::IndexOutOfRange, "degeneracy word must be strictly decreasing");
  const int n = dim + static_cast<int>(word.size());
  Term t{gen, std::vector<int>(n + 1)};
  for (int pos = 0; pos <= n; ++pos) {
    int below = 0;
    for (int j : word)
      if (j < pos) ++below;
    t.sigma[pos] = pos - below;
  }
  if (t.word() != word || t.base_dim() != dim)
    throw Error(ErrorKind::IndexOutOfRange, "degeneracy index exceeds the degree it is applied to");
  return t;
}

namespace surjection {

std::vector<int> identity(int n) {
  std::vector<int> v(n + 1);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<std::vector<int>> all(int n, int m) {
  std::vector<std::vector<int>> out;
  if (m < 0 || n < m) return out;
  std::vector<int> cur(n + 1, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos > n) {
      if (cur[n] == m) out.push_back(cur);
      return;
    }
    const int prev = cur[pos - 1];
    const int remaining = n - pos + 1;
    // stay
    if (m - prev <= remaining - 1) {
      cur[pos] = prev;
      self(self, pos + 1);
    }
    if (prev + 1 <= m) {
      cur[pos] = prev + 1;
      self(self, pos + 1);
    }
  };
  if (n == 0) {
    if (m == 0) out.push_back({0});
    return out;
  }
  rec(rec, 1);
  return out;
}

std::vector<int> compose(std::span<const int> outer, std::span<const int> inner) {
  std::vector<int> out(inner.size());
  for (std::size_t j = 0; j < inner.size(); ++j) out[j] = outer[inner[j]];
  return out;
}

std::vector<int> codegeneracy(int n, int j) {
  std::vector<int> out(n + 1);
  for (int t = 0; t <= n; ++t) out[t] = t <= j ? t : t - 1;
  return out;
}

}  // namespace surjection

namespace {

bool is_surjection(const std::vector<int>& s) {
  if (s.empty() || s[0] != 0) return false;
  for (std::size_t j = 0; j + 1 < s.size(); ++j)
    if (s[j + 1] != s[j] && s[j + 1] != s[j] + 1) return false;
  return true;
}

std::string join_ints(std::span<const int> v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// SSet

const std::vector<int>& SSet::generators_of_dim(int n) const {
  static const std::vector<int> kEmpty;
  if (n < 0 || n >= static_cast<int>(by_dim_.size())) return kEmpty;
  return by_dim_[n];
}

std::optional<int> SSet::find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

int SSet::index_of(std::string_view name) const {
  if (auto g = find(name)) return *g;
  throw Error(ErrorKind::UnknownElement, "unknown generator " + std::string(name));
}

void SSet::check_term(const Term& t) const {
  if (t.gen < 0 || t.gen >= size()) throw Error(ErrorKind::IndexOutOfRange, "term references unknown generator");
  if (!is_surjection(t.sigma) || t.base_dim() != gens_[t.gen].dim)
    throw Error(ErrorKind::NotSimplicial, "malformed degeneracy data on " + gens_[t.gen].name);
}

int SSet::add_generator(std::string name, int dim, std::vector<Term> faces) {
  if (dim < 0) throw Error(ErrorKind::IndexOutOfRange, "negative dimension");
  if (by_name_.count(name)) throw Error(ErrorKind::DuplicateElement, "generator " + name);
  const int expected_faces = dim == 0 ? 0 : dim + 1;
  if (static_cast<int>(faces.size()) != expected_faces)
    throw Error(ErrorKind::NotSimplicial, name + ": expected " + std::to_string(expected_faces) + " faces");
  for (const auto& f : faces) {
    check_term(f);
    if (f.degree() != dim - 1) throw Error(ErrorKind::NotSimplicial, name + ": face of wrong degree");
  }
  // d_i d_j = d_{j-1} d_i for i < j
  if (dim >= 2) {
    for (int j = 1; j <= dim; ++j)
      for (int i = 0; i < j; ++i)
        if (face(faces[j], i) != face(faces[i], j - 1))
          throw Error(ErrorKind::NotSimplicial, name + ": d_" + std::to_string(i) + " d_" + std::to_string(j) +
                                                    " != d_" + std::to_string(j - 1) + " d_" + std::to_string(i));
  }
  const int g = size();
  std::vector<int> verts;
  if (dim == 0) {
    verts = {g};
  } else {
    const Term& last_face = faces[dim];  // drops the last vertex
    const Term& first_face = faces[0];   // drops the first vertex
    verts = vertices(last_face);
    verts.push_back(vertices(first_face).back());
  }
  gens_.push_back(Generator{name, dim, std::move(faces)});
  if (static_cast<int>(by_dim_.size()) <= dim) by_dim_.resize(dim + 1);
  by_dim_[dim].push_back(g);
  by_name_.emplace(std::move(name), g);
  vertex_cache_.push_back(std::move(verts));
  return g;
}

Term SSet::face(const Term& t, int i) const {
  const int n = t.degree();
  if (n < 1 || i < 0 || i > n) throw Error(ErrorKind::IndexOutOfRange, "face index out of range");
  std::vector<int> rho;
  rho.reserve(n);
  for (int j = 0; j <= n; ++j)
    if (j != i) rho.push_back(t.sigma[j]);
  const int v = t.sigma[i];
  const bool still_hit = (i > 0 && t.sigma[i - 1] == v) || (i < n && t.sigma[i + 1] == v);
  if (still_hit) return Term{t.gen, std::move(rho)};
  for (int& r : rho)
    if (r > v) --r;
  const Term& f = gens_.at(t.gen).faces.at(v);
  return Term{f.gen, surjection::compose(f.sigma, rho)};
}

Term SSet::degeneracy(const Term& t, int i) const {
  const int n = t.degree();
  if (i < 0 || i > n) throw Error(ErrorKind::IndexOutOfRange, "degeneracy index out of range");
  Term out{t.gen, {}};
  out.sigma.reserve(n + 2);
  for (int j = 0; j <= n; ++j) {
    out.sigma.push_back(t.sigma[j]);
    if (j == i) out.sigma.push_back(t.sigma[j]);
  }
  return out;
}

std::vector<int> SSet::vertices(const Term& t) const {
  const auto& base = vertex_cache_.at(t.gen);
  std::vector<int> out(t.sigma.size());
  for (std::size_t j = 0; j < t.sigma.size(); ++j) out[j] = base[t.sigma[j]];
  return out;
}

std::vector<Term> SSet::simplices(int degree) const {
  std::vector<Term> out;
  std::map<int, std::vector<std::vector<int>>> surj_cache;
  for (int g = 0; g < size(); ++g) {
    const int m = gens_[g].dim;
    if (m > degree) continue;
    auto it = surj_cache.find(m);
    if (it == surj_cache.end()) it = surj_cache.emplace(m, surjection::all(degree, m)).first;
    for (const auto& s : it->second) out.push_back(Term{g, s});
  }
  return out;
}

std::size_t SSet::count_simplices(int degree) const {
  // C(degree, dim) degenerate copies of each generator
  auto binom = [](int n, int k) {
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
  };
  std::size_t total = 0;
  for (const auto& g : gens_)
    if (g.dim <= degree) total += binom(degree, g.dim);
  return total;
}

std::string SSet::term_name(const Term& t) const {
  const auto& name = gens_.at(t.gen).name;
  if (!t.degenerate()) return name;
  std::string out;
  for (int j : t.word()) out += "s" + std::to_string(j);
  return out + "(" + name + ")";
}

bool SSet::operator==(const SSet& other) const {
  if (size() != other.size()) return false;
  for (int g = 0; g < size(); ++g) {
    const auto& a = gens_[g];
    const auto& b = other.gens_[g];
    if (a.name != b.name || a.dim != b.dim || a.faces != b.faces) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Maps

Term apply(const SMap& f, const Term& t) {
  const Term& img = f.images.at(t.gen);
  return Term{img.gen, surjection::compose(img.sigma, t.sigma)};
}

SMap compose(const SMap& g, const SMap& f) {
  SMap out;
  out.images.reserve(f.images.size());
  for (const auto& t : f.images) out.images.push_back(apply(g, t));
  return out;
}

SMap identity_map(const SSet& x) {
  SMap out;
  for (int g = 0; g < x.size(); ++g) out.images.push_back(x.id(g));
  return out;
}

std::optional<std::string> simplicial_violation(const SSet& source, const SSet& target, const SMap& f) {
  if (static_cast<int>(f.images.size()) != source.size()) return "map does not assign every generator";
  for (int g = 0; g < source.size(); ++g) {
    const auto& gen = source.generator(g);
    const Term& img = f.images[g];
    if (img.gen < 0 || img.gen >= target.size()) return "image of " + gen.name + " is not a target simplex";
    if (!is_surjection(img.sigma) || img.base_dim() != target.generator(img.gen).dim)
      return "image of " + gen.name + " is malformed";
    if (img.degree() != gen.dim) return "image of " + gen.name + " has the wrong degree";
    for (int i = 0; i < static_cast<int>(gen.faces.size()); ++i)
      if (target.face(img, i) != apply(f, gen.faces[i]))
        return "d_" + std::to_string(i) + " does not commute on " + gen.name;
  }
  return std::nullopt;
}

void check_simplicial(const SSet& source, const SSet& target, const SMap& f) {
  if (auto v = simplicial_violation(source, target, f)) throw Error(ErrorKind::NotSimplicial, *v);
}

bool is_mono(const SSet& source, const SMap& f) {
  std::set<int> hit;
  for (int g = 0; g < source.size(); ++g) {
    const Term& img = f.images.at(g);
    if (img.degenerate()) return false;
    if (!hit.insert(img.gen).second) return false;
  }
  return true;
}

bool is_isomorphism(const SSet& source, const SSet& target, const SMap& f) {
  return source.size() == target.size() && is_mono(source, f);
}

bool injective_through(const SSet& source, const SMap& f, int max_degree) {
  for (int n = 0; n <= max_degree; ++n) {
    std::set<Term> seen;
    for (const auto& t : source.simplices(n))
      if (!seen.insert(apply(f, t)).second) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Standard cells

namespace {

SSet standard_cells(int n, const std::function<bool(const std::vector<int>&)>& keep) {
  SSet s;
  for (int k = 1; k <= n + 1; ++k) {
    // subsets of size k of {0..n}, lexicographic
    std::vector<int> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
      if (keep(subset)) {
        std::vector<Term> faces;
        if (k >= 2) {
          for (int i = 0; i < k; ++i) {
            std::vector<int> f = subset;
            f.erase(f.begin() + i);
            faces.push_back(s.id(s.index_of(join_ints(f, ','))));
          }
        }
        s.add_generator(join_ints(subset, ','), k - 1, std::move(faces));
      }
      int i = k - 1;
      while (i >= 0 && subset[i] == n - (k - 1 - i)) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return s;
}

}  // namespace

SSet standard(int n) {
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "standard simplex of negative dimension");
  return standard_cells(n, [](const std::vector<int>&) { return true; });
}

SSet boundary(int n) {
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "boundary of negative dimension");
  return standard_cells(n, [n](const std::vector<int>& s) { return static_cast<int>(s.size()) <= n; });
}

SSet horn(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw Error(ErrorKind::IndexOutOfRange, "horn index out of range");
  return standard_cells(n, [n, k](const std::vector<int>& s) {
    if (static_cast<int>(s.size()) == n + 1) return false;
    if (static_cast<int>(s.size()) == n && std::find(s.begin(), s.end(), k) == s.end()) return false;
    return true;
  });
}

SMap standard_inclusion(const SSet& sub, const SSet& full) {
  SMap out;
  for (const auto& g : sub.generators()) out.images.push_back(full.id(full.index_of(g.name)));
  return out;
}

Term standard_term(const SSet& standard_n, std::span<const int> seq) {
  std::vector<int> subset;
  std::vector<int> sigma;
  for (int v : seq) {
    if (!subset.empty() && v < subset.back()) throw Error(ErrorKind::NotMonotone, "vertex sequence decreases");
    if (subset.empty() || subset.back() != v) subset.push_back(v);
    sigma.push_back(static_cast<int>(subset.size()) - 1);
  }
  return Term{standard_n.index_of(join_ints(subset, ',')), std::move(sigma)};
}

SMap standard_map(int m, int n, std::span<const int> theta) {
  if (static_cast<int>(theta.size()) != m + 1) throw Error(ErrorKind::IndexOutOfRange, "theta has wrong length");
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (theta[i] < 0 || theta[i] > n) throw Error(ErrorKind::IndexOutOfRange, "theta out of range");
    if (i && theta[i] < theta[i - 1]) throw Error(ErrorKind::NotMonotone, "theta not monotone");
  }
  const SSet src = standard(m);
  const SSet tgt = standard(n);
  SMap out;
  for (int g = 0; g < src.size(); ++g) {
    std::vector<int> seq;
    for (int v : src.vertices(src.id(g))) seq.push_back(theta[v]);
    out.images.push_back(standard_term(tgt, seq));
  }
  return out;
}

SMap yoneda(const SSet& x, const Term& t) {
  const int n = t.degree();
  const SSet delta = standard(n);
  SMap out;
  for (int g = 0; g < delta.size(); ++g) {
    const auto verts = delta.vertices(delta.id(g));
    Term image = t;
    for (int v = n; v >= 0; --v)
      if (!std::binary_search(verts.begin(), verts.end(), v)) image = x.face(image, v);
    out.images.push_back(std::move(image));
  }
  return out;
}

SSet simplicial_complex(const std::vector<std::string>& vertices, const std::vector<std::vector<int>>& facets) {
  std::set<std::vector<int>> simplices;
  for (auto facet : facets) {
    std::sort(facet.begin(), facet.end());
    if (std::adjacent_find(facet.begin(), facet.end()) != facet.end())
      throw Error(ErrorKind::DuplicateElement, "facet repeats a vertex");
    for (int v : facet)
      if (v < 0 || v >= static_cast<int>(vertices.size())) throw Error(ErrorKind::UnknownElement, "facet vertex");
    const int k = static_cast<int>(facet.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) sub.push_back(facet[i]);
      simplices.insert(std::move(sub));
    }
  }
  std::vector<std::vector<int>> ordered(simplices.begin(), simplices.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  auto name_of = [&](const std::vector<int>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + vertices[s[i]];
    return out;
  };
  SSet out;
  for (const auto& s : ordered) {
    std::vector<Term> faces;
    for (std::size_t i = 0; s.size() >= 2 && i < s.size(); ++i) {
      auto f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
      faces.push_back(out.id(out.index_of(name_of(f))));
    }
    out.add_generator(name_of(s), static_cast<int>(s.size()) - 1, std::move(faces));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Products

std::optional<Term> Product::try_pair(const Term& a, const Term& b) const {
  const int n = a.degree();
  if (b.degree() != n) throw Error(ErrorKind::IndexOutOfRange, "pair of simplices of different degrees");
  std::vector<int> rho(n + 1, 0);
  for (int j = 1; j <= n; ++j) {
    const bool common = a.sigma[j] == a.sigma[j - 1] && b.sigma[j] == b.sigma[j - 1];
    rho[j] = rho[j - 1] + (common ? 0 : 1);
  }
  const int k = rho[n];
  std::vector<int> sa(k + 1), sb(k + 1);
  for (int j = 0; j <= n; ++j) {
    sa[rho[j]] = a.sigma[j];
    sb[rho[j]] = b.sigma[j];
  }
  auto it = index.find({Term{a.gen, std::move(sa)}, Term{b.gen, std::move(sb)}});
  if (it == index.end()) return std::nullopt;
  return Term{it->second, std::move(rho)};
}

Term Product::pair(const Term& a, const Term& b) const {
  if (auto t = try_pair(a, b)) return *t;
  throw Error(ErrorKind::InconsistentConstraint, "pair lies outside the product");
}

SMap Product::proj_left() const {
  SMap out;
  for (const auto& [a, b] : parts) out.images.push_back(a);
  return out;
}

SMap Product::proj_right() const {
  SMap out;
  for (const auto& [a, b] : parts) out.images.push_back(b);
  return out;
}

Product product(const SSet& x, const SSet& y, const PairFilter& keep, std::size_t budget) {
  Product p;
  if (x.empty() || y.empty()) return p;
  const int top = x.dimension() + y.dimension();
  std::size_t made = 0;
  for (int n = 0; n <= top; ++n) {
    std::map<int, std::vector<std::vector<int>>> surj;
    auto surjections = [&](int m) -> const std::vector<std::vector<int>>& {
      auto it = surj.find(m);
      if (it == surj.end()) it = surj.emplace(m, surjection::all(n, m)).first;
      return it->second;
    };
    for (int gx = 0; gx < x.size(); ++gx) {
      const int dx = x.generator(gx).dim;
      if (dx > n) continue;
      for (const auto& sx : surjections(dx)) {
        for (int gy = 0; gy < y.size(); ++gy) {
          const int dy = y.generator(gy).dim;
          if (dy > n || (n - dx) + (n - dy) > n) continue;
          for (const auto& sy : surjections(dy)) {
            bool common = false;
            for (int j = 0; j < n && !common; ++j) common = sx[j] == sx[j + 1] && sy[j] == sy[j + 1];
            if (common) continue;
            Term a{gx, sx};
            Term b{gy, sy};
            if (keep && !keep(a, b)) continue;
            std::vector<Term> faces;
            for (int i = 0; i <= n && n >= 1; ++i) faces.push_back(p.pair(x.face(a, i), y.face(b, i)));
            const int g = p.body.add_generator("(" + x.term_name(a) + "," + y.term_name(b) + ")", n,
                                               std::move(faces));
            p.index.emplace(std::make_pair(a, b), g);
            p.parts.emplace_back(std::move(a), std::move(b));
            if (++made > budget) throw Error(ErrorKind::BudgetExceeded, "product exceeds the simplex budget");
          }
        }
      }
    }
  }
  return p;
}

SMap product_map(const Product& source, const Product& target, const SMap& f, const SMap& g) {
  SMap out;
  out.images.reserve(source.parts.size());
  for (const auto& [a, b] : source.parts) out.images.push_back(target.pair(apply(f, a), apply(g, b)));
  return out;
}

// ---------------------------------------------------------------------------
// Map enumeration

std::size_t search_maps(const SSet& x, const SSet& y, const MapSearch& search,
                        const std::function<bool(const SMap&)>& visit) {
  std::vector<int> order;
  for (int n = 0; n <= x.dimension(); ++n)
    for (int g : x.generators_of_dim(n)) order.push_back(g);

  for (const auto& [g, t] : search.fixed) {
    if (g < 0 || g >= x.size()) throw Error(ErrorKind::InconsistentConstraint, "constraint on unknown generator");
    y.check_term(t);
    if (t.degree() != x.generator(g).dim)
      throw Error(ErrorKind::InconsistentConstraint, "constraint on " + x.generator(g).name + " has wrong degree");
  }

  std::map<int, std::vector<Term>> all_by_degree;
  auto default_candidates = [&](int g) -> const std::vector<Term>& {
    const int d = x.generator(g).dim;
    auto it = all_by_degree.find(d);
    if (it == all_by_degree.end()) it = all_by_degree.emplace(d, y.simplices(d)).first;
    return it->second;
  };

  SMap current;
  current.images.assign(x.size(), Term{});
  std::size_t visited = 0;
  std::size_t nodes = 0;
  bool stop = false;

  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (stop) return;
    if (pos == order.size()) {
      ++visited;
      if (!visit(current)) stop = true;
      return;
    }
    const int g = order[pos];
    const auto& gen = x.generator(g);
    std::vector<Term> required;
    required.reserve(gen.faces.size());
    for (const auto& f : gen.faces) required.push_back(apply(current, f));

    auto try_candidate = [&](const Term& c) {
      if (search.node_budget && ++nodes > search.node_budget)
        throw Error(ErrorKind::BudgetExceeded, "map search exceeded its node budget");
      if (search.admissible && !search.admissible(g, c)) return;
      for (std::size_t i = 0; i < required.size(); ++i)
        if (y.face(c, static_cast<int>(i)) != required[i]) return;
      current.images[g] = c;
      self(self, pos + 1);
    };

    if (auto it = search.fixed.find(g); it != search.fixed.end()) {
      try_candidate(it->second);
      return;
    }
    const auto& cands = search.candidates ? search.candidates(g) : default_candidates(g);
    for (const auto& c : cands) {
      if (stop) return;
      try_candidate(c);
    }
  };
  rec(rec, 0);
  return visited;
}

std::vector<SMap> enumerate_maps(const SSet& x, const SSet& y, const std::map<int, Term>& constraints,
                                 std::size_t budget) {
  MapSearch search;
  search.fixed = constraints;
  std::vector<SMap> out;
  search_maps(x, y, search, [&](const SMap& f) {
    out.push_back(f);
    if (out.size() * std::max<std::size_t>(1, x.size()) > budget)
      throw Error(ErrorKind::BudgetExceeded, "map enumeration exceeds the budget");
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Diagrams and colimits

std::map<std::pair<int, int>, SMap> SSetDiagram::all_arrows() const {
  const int n = shape.size();
  if (static_cast<int>(values.size()) != n) throw Error(ErrorKind::NotAFunctor, "one value per shape object required");
  for (const auto& [key, f] : arrows) {
    const auto [a, b] = key;
    if (a < 0 || b < 0 || a >= n || b >= n || !shape.less(a, b))
      throw Error(ErrorKind::NotAFunctor, "arrow not in the shape");
    if (auto v = simplicial_violation(values[a], values[b], f))
      throw Error(ErrorKind::NotAFunctor, shape.name(a) + "->" + shape.name(b) + ": " + *v);
  }
  std::map<std::pair<int, int>, SMap> out;
  const auto order = shape.linear_extension();
  for (int a = 0; a < n; ++a) {
    out.emplace(std::make_pair(a, a), identity_map(values[a]));
    for (int b : order) {
      if (!shape.less(a, b)) continue;
      std::optional<SMap> found;
      for (const auto& [key, f] : arrows) {
        const auto [c, target] = key;
        if (target != b || !shape.leq(a, c)) continue;
        SMap candidate = compose(f, out.at({a, c}));
        if (found && *found != candidate)
          throw Error(ErrorKind::NotAFunctor,
                      "composites " + shape.name(a) + "->" + shape.name(b) + " disagree");
        found = std::move(candidate);
      }
      if (!found) throw Error(ErrorKind::NotAFunctor, "no arrow path " + shape.name(a) + "->" + shape.name(b));
      out.emplace(std::make_pair(a, b), std::move(*found));
    }
  }
  return out;
}

Colimit colimit(const SSetDiagram& diagram, std::size_t budget) {
  diagram.all_arrows();  // functoriality check
  const int objects = diagram.shape.size();
  int top = -1;
  for (const auto& v : diagram.values) top = std::max(top, v.dimension());

  Colimit out;
  // normal form of every (object, simplex) per degree
  std::vector<std::vector<std::map<Term, int>>> index(top + 1, std::vector<std::map<Term, int>>(objects));
  std::vector<std::vector<int>> offset(top + 1, std::vector<int>(objects + 1, 0));
  std::vector<std::vector<Term>> normal(top + 1);

  for (int n = 0; n <= top; ++n) {
    std::vector<std::vector<Term>> terms(objects);
    for (int o = 0; o < objects; ++o) {
      terms[o] = diagram.values[o].simplices(n);
      offset[n][o + 1] = offset[n][o] + static_cast<int>(terms[o].size());
      for (int i = 0; i < static_cast<int>(terms[o].size()); ++i) index[n][o].emplace(terms[o][i], i);
    }
    const int total = offset[n][objects];
    if (static_cast<std::size_t>(total) > budget) throw Error(ErrorKind::BudgetExceeded, "colimit exceeds budget");

    UnionFind uf(total);
    for (const auto& [key, f] : diagram.arrows) {
      const auto [a, b] = key;
      for (int i = 0; i < static_cast<int>(terms[a].size()); ++i)
        uf.unite(offset[n][a] + i, offset[n][b] + index[n][b].at(apply(f, terms[a][i])));
    }

    auto locate = [&](int flat) {
      int o = 0;
      while (offset[n][o + 1] <= flat) ++o;
      return std::make_pair(o, flat - offset[n][o]);
    };

    // classes in order of their least member
    std::vector<std::vector<int>> members(total);
    for (int e = 0; e < total; ++e) members[uf.find(e)].push_back(e);

    normal[n].assign(total, Term{});
    for (int e = 0; e < total; ++e) {
      if (uf.find(e) != e && members[uf.find(e)].front() != e) continue;
      const auto& cls = members[uf.find(e)];
      if (cls.front() != e) continue;
      Term nf;
      bool found = false;
      for (int m : cls) {
        auto [o, i] = locate(m);
        const Term& t = terms[o][i];
        if (!t.degenerate()) continue;
        const int d = t.base_dim();
        const Term& base = normal[d][offset[d][o] + index[d][o].at(diagram.values[o].id(t.gen))];
        nf = Term{base.gen, surjection::compose(base.sigma, t.sigma)};
        found = true;
        break;
      }
      if (!found) {
        auto [o, i] = locate(e);
        const Term& rep = terms[o][i];
        std::vector<Term> faces;
        for (int k = 0; k <= n && n >= 1; ++k) {
          const Term f = diagram.values[o].face(rep, k);
          faces.push_back(normal[n - 1][offset[n - 1][o] + index[n - 1][o].at(f)]);
        }
        const int g = out.body.add_generator(
            diagram.shape.name(o) + ":" + diagram.values[o].generator(rep.gen).name, n, std::move(faces));
        out.representatives.emplace_back(o, rep);
        nf = out.body.id(g);
      }
      for (int m : cls) normal[n][m] = nf;
    }
  }

  for (int o = 0; o < objects; ++o) {
    SMap leg;
    const auto& v = diagram.values[o];
    for (int g = 0; g < v.size(); ++g) {
      const int d = v.generator(g).dim;
      leg.images.push_back(normal[d][offset[d][o] + index[d][o].at(v.id(g))]);
    }
    out.legs.push_back(std::move(leg));
  }
  return out;
}

}  // namespace strat
