#include "strat/poset.hpp"

#include <algorithm>
#include <unordered_set>

#include "strat/error.hpp"

namespace strat {

Poset Poset::from_relations(std::vector<std::string> elements,
                            const std::vector<std::pair<std::string, std::string>>& pairs) {
  Poset p;
  {
    std::unordered_set<std::string> seen;
    for (const auto& e : elements) {
      if (!seen.insert(e).second) throw Error(ErrorKind::DuplicateElement, e);
    }
  }
  p.elements_ = std::move(elements);
  const int n = p.size();
  p.leq_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) p.leq_[i * n + i] = 1;
  for (const auto& [a, b] : pairs) {
    const int ia = p.index_of(a);
    const int ib = p.index_of(b);
    p.leq_[ia * n + ib] = 1;
  }
  // Warshall closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.leq_[i * n + k])
        for (int j = 0; j < n; ++j)
          if (p.leq_[k * n + j]) p.leq_[i * n + j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.leq(i, j) && p.leq(j, i))
        throw Error(ErrorKind::CycleDetected, p.elements_[i] + " <= " + p.elements_[j] + " <= " +
                                                  p.elements_[i]);
  return p;
}

Poset Poset::total_order(std::vector<std::string> elements) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i + 1 < elements.size(); ++i) pairs.emplace_back(elements[i], elements[i + 1]);
  return from_relations(std::move(elements), pairs);
}

Poset Poset::discrete(std::vector<std::string> elements) { return from_relations(std::move(elements), {}); }

std::optional<int> Poset::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (elements_[i] == name) return i;
  return std::nullopt;
}

int Poset::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::UnknownElement, std::string(name));
}

std::vector<std::pair<int, int>> Poset::strict_relations() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (less(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : strict_relations()) {
    bool between = false;
    for (int c = 0; c < size() && !between; ++c) between = less(a, c) && less(c, b);
    if (!between) out.emplace_back(a, b);
  }
  return out;
}

int Poset::height() const {
  const auto order = linear_extension();
  std::vector<int> longest(size(), 1);
  int best = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int x = order[k];
    for (std::size_t j = 0; j < k; ++j)
      if (less(order[j], x)) longest[x] = std::max(longest[x], longest[order[j]] + 1);
    best = std::max(best, longest[x]);
  }
  return best;
}

std::vector<int> Poset::linear_extension() const {
  std::vector<int> out;
  std::vector<char> placed(size(), 0);
  while (static_cast<int>(out.size()) < size()) {
    for (int i = 0; i < size(); ++i) {
      if (placed[i]) continue;
      bool minimal = true;
      for (int j = 0; j < size() && minimal; ++j) minimal = placed[j] || !less(j, i);
      if (minimal) {
        placed[i] = 1;
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

std::string Poset::chain_name(std::span<const int> tuple) const {
  std::string out;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += '<';
    out += name(tuple[i]);
  }
  return out;
}

Chain Poset::parse_chain(std::string_view text) const {
  Chain c;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('<', start);
    const auto piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    c.push_back(index_of(piece));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (!is_chain(c)) throw Error(ErrorKind::NotMonotone, "not a chain: " + std::string(text));
  return c;
}

bool Poset::is_weakly_increasing(std::span<const int> tuple) const {
  for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
    if (!leq(tuple[i], tuple[i + 1])) return false;
  return true;
}

bool Poset::is_chain(std::span<const int> tuple) const {
  if (tuple.empty()) return false;
  for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
    if (!less(tuple[i], tuple[i + 1])) return false;
  return true;
}

PosetMap PosetMap::make(Poset source, Poset target, std::vector<int> assignment) {
  if (static_cast<int>(assignment.size()) != source.size())
    throw Error(ErrorKind::UnknownElement, "poset map must assign every source element");
  for (int x : assignment)
    if (x < 0 || x >= target.size()) throw Error(ErrorKind::UnknownElement, "poset map target out of range");
  for (int a = 0; a < source.size(); ++a)
    for (int b = 0; b < source.size(); ++b)
      if (source.leq(a, b) && !target.leq(assignment[a], assignment[b]))
        throw Error(ErrorKind::NotMonotone, "poset map not order-preserving at " + source.name(a) + " <= " +
                                                source.name(b));
  return PosetMap{std::move(source), std::move(target), std::move(assignment)};
}

PosetMap PosetMap::identity(const Poset& p) {
  std::vector<int> id(p.size());
  for (int i = 0; i < p.size(); ++i) id[i] = i;
  return PosetMap{p, p, std::move(id)};
}

Tuple PosetMap::apply(std::span<const int> tuple) const {
  Tuple out;
  out.reserve(tuple.size());
  for (int x : tuple) out.push_back(assignment.at(x));
  return out;
}

bool PosetMap::is_isomorphism() const {
  if (source.size() != target.size()) return false;
  std::vector<char> hit(target.size(), 0);
  for (int x : assignment) {
    if (hit[x]) return false;
    hit[x] = 1;
  }
  for (int a = 0; a < source.size(); ++a)
    for (int b = 0; b < source.size(); ++b)
      if (source.leq(a, b) != target.leq(assignment[a], assignment[b])) return false;
  return true;
}

std::vector<Chain> chains(const Poset& p) {
  std::vector<Chain> out;
  Chain current;
  auto extend = [&](auto&& self, int last) -> void {
    out.push_back(current);
    for (int y = 0; y < p.size(); ++y) {
      if (!p.less(last, y)) continue;
      current.push_back(y);
      self(self, y);
      current.pop_back();
    }
  };
  for (int x = 0; x < p.size(); ++x) {
    current = {x};
    extend(extend, x);
  }
  std::stable_sort(out.begin(), out.end(), [](const Chain& a, const Chain& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::pair<Chain, Chain>> chain_inclusions(const Poset& p) {
  const auto all = chains(p);
  std::vector<std::pair<Chain, Chain>> out;
  for (const auto& phi : all)
    for (const auto& psi : all)
      if (is_subchain(psi, phi)) out.emplace_back(psi, phi);
  return out;
}

Poset cone(const Poset& p, const std::string& bottom) {
  if (p.find(bottom)) throw Error(ErrorKind::IdentifierClash, bottom);
  std::vector<std::string> elements;
  elements.push_back(bottom);
  for (const auto& e : p.elements()) elements.push_back(e);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& e : p.elements()) pairs.emplace_back(bottom, e);
  for (auto [a, b] : p.strict_relations()) pairs.emplace_back(p.name(a), p.name(b));
  return Poset::from_relations(std::move(elements), pairs);
}

Chain image_chain(const Poset& p, std::span<const int> tuple) {
  if (tuple.empty() || !p.is_weakly_increasing(tuple))
    throw Error(ErrorKind::NotMonotone, "tuple is not weakly increasing: " + p.chain_name(tuple));
  Chain out;
  for (int x : tuple)
    if (out.empty() || out.back() != x) out.push_back(x);
  return out;
}

bool is_subchain(std::span<const int> psi, std::span<const int> phi) {
  if (psi.empty()) return false;
  std::size_t j = 0;
  for (int x : psi) {
    while (j < phi.size() && phi[j] != x) ++j;
    if (j == phi.size()) return false;
    ++j;
  }
  return true;
}

std::vector<int> subchain_positions(std::span<const int> psi, std::span<const int> phi) {
  std::vector<int> pos;
  std::size_t j = 0;
  for (int x : psi) {
    while (j < phi.size() && phi[j] != x) ++j;
    if (j == phi.size()) throw Error(ErrorKind::NotASubchain, "chain is not contained in the target chain");
    pos.push_back(static_cast<int>(j++));
  }
  return pos;
}

ChainIndex::ChainIndex(const Poset& p) : chains_(chains(p)) {
  for (int i = 0; i < static_cast<int>(chains_.size()); ++i) index_.emplace(chains_[i], i);
}

std::optional<int> ChainIndex::find(const Chain& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int ChainIndex::at(const Chain& c) const {
  if (auto i = find(c)) return *i;
  throw Error(ErrorKind::NotASubchain, "unknown chain");
}

}  // namespace strat
