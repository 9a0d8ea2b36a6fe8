#include "oml/lattice.hpp"

#include <algorithm>
#include <queue>

#include "oml/errors.hpp"

namespace oml {

Lattice Lattice::build(const std::vector<std::string>& names,
                       const std::vector<std::pair<std::string, std::string>>& covers,
                       std::size_t max_size) {
  std::unordered_map<std::string, ElementId> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw SemanticError("element name may not be empty");
    if (!index.emplace(names[i], i).second)
      throw SemanticError("duplicate element '" + names[i] + "'");
  }
  std::vector<std::pair<ElementId, ElementId>> edges;
  edges.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    auto lo_it = index.find(lo);
    if (lo_it == index.end()) throw UnknownElement(lo);
    auto hi_it = index.find(hi);
    if (hi_it == index.end()) throw UnknownElement(hi);
    edges.emplace_back(lo_it->second, hi_it->second);
  }
  return build_from_ids(names, edges, max_size);
}

Lattice Lattice::build_from_ids(std::vector<std::string> names,
                                const std::vector<std::pair<ElementId, ElementId>>& edges,
                                std::size_t max_size) {
  const std::size_t n = names.size();
  if (n == 0) throw SemanticError("lattice has no elements");
  if (n > max_size) throw LatticeTooLarge(n, max_size);

  Lattice lat;
  lat.names_ = std::move(names);
  for (std::size_t i = 0; i < n; ++i) lat.index_.emplace(lat.names_[i], i);

  // Adjacency of the strict edges, deduplicated.
  std::vector<std::vector<ElementId>> succ(n), pred(n);
  {
    std::vector<Bitset> seen(n, Bitset(n));
    for (const auto& [lo, hi] : edges) {
      if (lo == hi)
        throw CycleDetected("element '" + lat.names_[lo] + "' listed below itself");
      if (seen[lo].test(hi)) continue;
      seen[lo].set(hi);
      succ[lo].push_back(hi);
      pred[hi].push_back(lo);
    }
  }

  // Kahn topological sort; leftovers witness a cycle.
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t v = 0; v < n; ++v) indegree[v] = pred[v].size();
  std::vector<ElementId> topo;
  topo.reserve(n);
  std::queue<ElementId> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(v);
  while (!ready.empty()) {
    ElementId v = ready.front();
    ready.pop();
    topo.push_back(v);
    for (ElementId w : succ[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  if (topo.size() != n) {
    for (std::size_t v = 0; v < n; ++v)
      if (indegree[v] > 0)
        throw CycleDetected("involving element '" + lat.names_[v] + "'");
  }

  // Reflexive-transitive closure, filled in topological order.
  lat.below_.assign(n, Bitset(n));
  for (ElementId v : topo) {
    lat.below_[v].set(v);
    for (ElementId u : pred[v]) lat.below_[v] |= lat.below_[u];
  }
  lat.above_.assign(n, Bitset(n));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u : lat.below_[v].members()) lat.above_[u].set(v);

  // A finite poset with a unique minimal element has a least element, and
  // dually; more than one of either means the poset is unbounded.
  ElementId bottom = Bitset::npos, top = Bitset::npos;
  for (std::size_t v = 0; v < n; ++v) {
    if (lat.below_[v].count() == 1) {
      if (bottom != Bitset::npos) throw NotBounded("bottom");
      bottom = v;
    }
    if (lat.above_[v].count() == 1) {
      if (top != Bitset::npos) throw NotBounded("top");
      top = v;
    }
  }
  lat.bottom_ = bottom;
  lat.top_ = top;

  // Position of each element in the topological order: in any down-set the
  // greatest element, if it exists, is the latest member in this order.
  std::vector<std::size_t> topo_pos(n);
  for (std::size_t i = 0; i < n; ++i) topo_pos[topo[i]] = i;

  lat.meet_.assign(n * n, 0);
  lat.join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      Bitset lower = lat.below_[a] & lat.below_[b];
      ElementId glb = Bitset::npos;
      for (std::size_t m : lower.members())
        if (glb == Bitset::npos || topo_pos[m] > topo_pos[glb]) glb = m;
      if (!(lat.below_[glb] == lower))
        throw NotALattice(lat.names_[a], lat.names_[b], /*missing_meet=*/true);

      Bitset upper = lat.above_[a] & lat.above_[b];
      ElementId lub = Bitset::npos;
      for (std::size_t m : upper.members())
        if (lub == Bitset::npos || topo_pos[m] < topo_pos[lub]) lub = m;
      if (!(lat.above_[lub] == upper))
        throw NotALattice(lat.names_[a], lat.names_[b], /*missing_meet=*/false);

      lat.meet_[a * n + b] = lat.meet_[b * n + a] = glb;
      lat.join_[a * n + b] = lat.join_[b * n + a] = lub;
    }
  }
  return lat;
}

ElementId Lattice::id(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownElement(name);
  return it->second;
}

std::optional<ElementId> Lattice::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId Lattice::meet_of(const Bitset& subset) const {
  std::size_t first = subset.find_first();
  if (first == Bitset::npos) throw EmptySet();
  ElementId acc = first;
  for (std::size_t x = subset.find_next(first); x != Bitset::npos; x = subset.find_next(x))
    acc = meet(acc, x);
  return acc;
}

ElementId Lattice::join_of(const Bitset& subset) const {
  std::size_t first = subset.find_first();
  if (first == Bitset::npos) throw EmptySet();
  ElementId acc = first;
  for (std::size_t x = subset.find_next(first); x != Bitset::npos; x = subset.find_next(x))
    acc = join(acc, x);
  return acc;
}

std::vector<std::pair<ElementId, ElementId>> Lattice::cover_pairs() const {
  const std::size_t n = size();
  std::vector<std::pair<ElementId, ElementId>> out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      // b covers a when the open interval (a, b) is empty.
      Bitset between = below_[b] & above_[a];
      if (between.count() == 2) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oml
