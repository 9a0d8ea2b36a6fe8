#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "oml/bitset.hpp"
#include "oml/ortho.hpp"

namespace oml {

/// A context: Boolean subalgebra of the ambient lattice, carried with its
/// own atoms (atoms of the subalgebra, not of the ambient lattice).
struct BooleanSubalgebra {
  Bitset members;
  std::vector<ElementId> atoms;

  std::size_t size() const { return members.count(); }
};

/// Wrap a member set after validating it is a Boolean subalgebra and
/// computing its atoms. Throws InvalidSubalgebra.
BooleanSubalgebra as_subalgebra(const OrthoLattice& ol, const Bitset& members);

inline constexpr std::size_t kDefaultEnumerationBudget = 10000;

/// Every Boolean subalgebra (optionally only those containing a given
/// element), sorted by size then lexicographic membership. Grows each
/// algebra from {0,1} by single commuting generators, which reaches every
/// Boolean subalgebra because its members commute pairwise. Throws
/// BudgetExceeded past the cap.
std::vector<BooleanSubalgebra> enumerate_boolean_subalgebras(
    const OrthoLattice& ol, std::optional<ElementId> containing = std::nullopt,
    std::size_t budget = kDefaultEnumerationBudget);

/// The maximal Boolean subalgebras.
std::vector<BooleanSubalgebra> blocks(const OrthoLattice& ol,
                                      std::size_t budget = kDefaultEnumerationBudget);

/// The classically expanded context: subalgebra generated by W together
/// with the center (passed in as a member set).
BooleanSubalgebra expanded_context(const OrthoLattice& ol, const BooleanSubalgebra& w,
                                   const Bitset& center_members);

/// One maximal filter per atom t: F_t = {x in B : t <= x}, in atom order.
std::vector<Bitset> maximal_filters(const OrthoLattice& ol, const BooleanSubalgebra& b);

/// Two-valued homomorphism on a Boolean subalgebra, stored as its maximal
/// filter plus the atom generating it. value(x) is 1 exactly when x lies in
/// the filter.
struct Valuation {
  ElementId atom;
  Bitset filter;

  bool value(ElementId x) const { return filter.test(x); }
};

/// Validate that F is a maximal filter of B and wrap it. Verifies the
/// homomorphism laws on all pairs. Throws NotAFilter / NotMaximal.
Valuation valuation_from_filter(const OrthoLattice& ol, const BooleanSubalgebra& b,
                                const Bitset& filter);

/// One valuation per atom of B.
std::vector<Valuation> all_valuations(const OrthoLattice& ol, const BooleanSubalgebra& b);

}  // namespace oml
