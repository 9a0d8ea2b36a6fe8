#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "oml/bitset.hpp"

namespace oml {

using ElementId = std::size_t;

/// Finite bounded lattice represented by its full order relation.
///
/// Built from a list of element names and a generating set of strict order
/// edges ("covers"). Construction computes the reflexive-transitive closure,
/// verifies the result is a bounded lattice, and tabulates meet and join for
/// every pair. All later per-element work is table lookups and bitset sweeps
/// over the down-set / up-set rows.
class Lattice {
public:
  static constexpr std::size_t kDefaultMaxSize = 512;

  /// Build from named edges `lower < upper`. The edges may include
  /// transitive redundancy; only the generated order matters.
  ///
  /// Throws SemanticError (bad names), UnknownElement, LatticeTooLarge,
  /// CycleDetected, NotBounded, or NotALattice.
  static Lattice build(const std::vector<std::string>& names,
                       const std::vector<std::pair<std::string, std::string>>& covers,
                       std::size_t max_size = kDefaultMaxSize);

  /// Same, with edges already resolved to element indices.
  static Lattice build_from_ids(std::vector<std::string> names,
                                const std::vector<std::pair<ElementId, ElementId>>& edges,
                                std::size_t max_size = kDefaultMaxSize);

  std::size_t size() const { return names_.size(); }
  const std::string& name(ElementId x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a named element; throws UnknownElement.
  ElementId id(const std::string& name) const;
  std::optional<ElementId> find(const std::string& name) const;

  bool leq(ElementId a, ElementId b) const { return below_[b].test(a); }
  ElementId meet(ElementId a, ElementId b) const { return meet_[a * size() + b]; }
  ElementId join(ElementId a, ElementId b) const { return join_[a * size() + b]; }
  ElementId bottom() const { return bottom_; }
  ElementId top() const { return top_; }

  /// Row of the order relation: all x with x <= a.
  const Bitset& down_set(ElementId a) const { return below_[a]; }
  /// All x with a <= x.
  const Bitset& up_set(ElementId a) const { return above_[a]; }

  /// Meet / join over a non-empty subset; throws EmptySet.
  ElementId meet_of(const Bitset& subset) const;
  ElementId join_of(const Bitset& subset) const;

  /// Transitive reduction of the order: the pairs (a, b) with b covering a,
  /// sorted by (a, b).
  std::vector<std::pair<ElementId, ElementId>> cover_pairs() const;

private:
  Lattice() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, ElementId> index_;
  std::vector<Bitset> below_;  // below_[a] = down-set of a
  std::vector<Bitset> above_;  // above_[a] = up-set of a
  std::vector<ElementId> meet_;
  std::vector<ElementId> join_;
  ElementId bottom_ = 0;
  ElementId top_ = 0;
};

}  // namespace oml
