#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oml/bitset.hpp"
#include "oml/lattice.hpp"

namespace oml {

/// A bounded lattice with an orthocomplement. Construction verifies the
/// involution, De Morgan, and complement laws; the orthomodular law is a
/// separate check (check_orthomodular) so that deliberately non-orthomodular
/// inputs such as the benzene ring can still be represented.
class OrthoLattice {
public:
  /// Throws InvolutionViolation, DeMorganViolation, or ComplementViolation,
  /// each naming the first witness in index order.
  static OrthoLattice attach(Lattice base, std::vector<ElementId> neg);

  const Lattice& base() const { return base_; }
  std::size_t size() const { return base_.size(); }

  ElementId neg(ElementId x) const { return neg_[x]; }

  // Forwarders, so callers rarely need base() spelled out.
  bool leq(ElementId a, ElementId b) const { return base_.leq(a, b); }
  ElementId meet(ElementId a, ElementId b) const { return base_.meet(a, b); }
  ElementId join(ElementId a, ElementId b) const { return base_.join(a, b); }
  ElementId bottom() const { return base_.bottom(); }
  ElementId top() const { return base_.top(); }
  const Bitset& down_set(ElementId a) const { return base_.down_set(a); }
  const Bitset& up_set(ElementId a) const { return base_.up_set(a); }
  const std::string& name(ElementId x) const { return base_.name(x); }
  ElementId id(const std::string& name) const { return base_.id(name); }
  std::optional<ElementId> find(const std::string& name) const { return base_.find(name); }

private:
  OrthoLattice(Lattice base, std::vector<ElementId> neg)
      : base_(std::move(base)), neg_(std::move(neg)) {}

  Lattice base_;
  std::vector<ElementId> neg_;
};

struct PairWitness {
  ElementId x, y;
};

/// Tests x ∨ (¬x ∧ (x ∨ y)) = x ∨ y over all pairs; returns the first
/// violating pair in index order, or nullopt when the law holds.
std::optional<PairWitness> check_orthomodular(const OrthoLattice& ol);

/// a commutes with b: a = (a ∧ b) ∨ (a ∧ ¬b).
bool commutes(const OrthoLattice& ol, ElementId a, ElementId b);

/// True when every 3 distinct members of the subset include one element
/// commuting with the other two. Throws EmptySet.
bool is_greechie_set(const OrthoLattice& ol, const Bitset& subset);

/// Least superset closed under meet and join. Throws EmptySet.
Bitset generated_sublattice(const OrthoLattice& ol, const Bitset& seed);

/// Least superset closed under meet, join, and negation; always contains
/// bottom and top. Throws EmptySet.
Bitset generated_subalgebra(const OrthoLattice& ol, const Bitset& seed);

/// Contains 0 and 1, closed under meet/join/negation, and distributive on
/// every internal triple.
bool is_boolean_subalgebra(const OrthoLattice& ol, const Bitset& subset);

}  // namespace oml
