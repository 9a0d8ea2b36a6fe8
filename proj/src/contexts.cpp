#include "oml/contexts.hpp"

#include <algorithm>
#include <unordered_set>

#include "oml/errors.hpp"

namespace oml {

namespace {

// Lexicographic order on the sorted member sequences.
bool member_lex_less(const Bitset& a, const Bitset& b) {
  std::size_t x = a.find_first(), y = b.find_first();
  while (x != Bitset::npos && y != Bitset::npos) {
    if (x != y) return x < y;
    x = a.find_next(x);
    y = b.find_next(y);
  }
  return x == Bitset::npos && y != Bitset::npos;
}

}  // namespace

BooleanSubalgebra as_subalgebra(const OrthoLattice& ol, const Bitset& members) {
  if (!members.test(ol.bottom()) || !members.test(ol.top()))
    throw InvalidSubalgebra("missing bottom or top");
  std::vector<ElementId> m = members.members();
  for (ElementId x : m)
    if (!members.test(ol.neg(x)))
      throw InvalidSubalgebra("not closed under negation at '" + ol.name(x) + "'");
  for (ElementId x : m)
    for (ElementId y : m)
      if (!members.test(ol.meet(x, y)) || !members.test(ol.join(x, y)))
        throw InvalidSubalgebra("not closed under meet/join at ('" + ol.name(x) + "', '" +
                                ol.name(y) + "')");
  for (ElementId x : m)
    for (ElementId y : m)
      for (ElementId z : m)
        if (ol.meet(x, ol.join(y, z)) != ol.join(ol.meet(x, y), ol.meet(x, z)))
          throw InvalidSubalgebra("distributivity fails at ('" + ol.name(x) + "', '" +
                                  ol.name(y) + "', '" + ol.name(z) + "')");

  BooleanSubalgebra b;
  b.members = members;
  for (ElementId x : m) {
    if (x == ol.bottom()) continue;
    bool minimal = true;
    for (ElementId y : m)
      if (y != ol.bottom() && y != x && ol.leq(y, x)) minimal = false;
    if (minimal) b.atoms.push_back(x);
  }
  if (b.members.count() != (std::size_t{1} << b.atoms.size()))
    throw InvalidSubalgebra("member count is not 2^atoms");
  return b;
}

std::vector<BooleanSubalgebra> enumerate_boolean_subalgebras(
    const OrthoLattice& ol, std::optional<ElementId> containing, std::size_t budget) {
  const std::size_t n = ol.size();

  // comm[x]: everything that commutes with x, both ways round.
  std::vector<Bitset> comm(n, Bitset(n));
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      if (commutes(ol, x, y) && commutes(ol, y, x)) comm[x].set(y);

  // Breadth-first growth by one commuting generator at a time. Every
  // Boolean subalgebra commutes pairwise, so each one is reached from {0,1}
  // through a chain of such extensions.
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Bitset> found;
  Bitset seed = generated_subalgebra(ol, Bitset::single(n, ol.bottom()));
  seen.insert(seed);
  found.push_back(seed);
  for (std::size_t i = 0; i < found.size(); ++i) {
    Bitset s = found[i];
    for (ElementId x = 0; x < n; ++x) {
      if (s.test(x) || !s.is_subset_of(comm[x])) continue;
      Bitset grown = s;
      grown.set(x);
      Bitset t = generated_subalgebra(ol, grown);
      if (seen.insert(t).second) {
        if (seen.size() > budget) throw BudgetExceeded(budget);
        found.push_back(t);
      }
    }
  }

  std::vector<BooleanSubalgebra> out;
  for (const Bitset& s : found) {
    if (containing && !s.test(*containing)) continue;
    out.push_back(as_subalgebra(ol, s));
  }
  std::sort(out.begin(), out.end(), [](const BooleanSubalgebra& a, const BooleanSubalgebra& b) {
    if (a.members.count() != b.members.count()) return a.members.count() < b.members.count();
    return member_lex_less(a.members, b.members);
  });
  return out;
}

std::vector<BooleanSubalgebra> blocks(const OrthoLattice& ol, std::size_t budget) {
  std::vector<BooleanSubalgebra> all = enumerate_boolean_subalgebras(ol, std::nullopt, budget);
  std::vector<BooleanSubalgebra> maximal;
  for (const auto& s : all) {
    bool is_max = true;
    for (const auto& t : all)
      if (!(s.members == t.members) && s.members.is_subset_of(t.members)) is_max = false;
    if (is_max) maximal.push_back(s);
  }
  return maximal;
}

BooleanSubalgebra expanded_context(const OrthoLattice& ol, const BooleanSubalgebra& w,
                                   const Bitset& center_members) {
  return as_subalgebra(ol, generated_subalgebra(ol, w.members | center_members));
}

std::vector<Bitset> maximal_filters(const OrthoLattice& ol, const BooleanSubalgebra& b) {
  std::vector<Bitset> filters;
  filters.reserve(b.atoms.size());
  for (ElementId t : b.atoms) filters.push_back(b.members & ol.up_set(t));
  return filters;
}

Valuation valuation_from_filter(const OrthoLattice& ol, const BooleanSubalgebra& b,
                                const Bitset& filter) {
  if (!filter.is_subset_of(b.members)) throw NotAFilter("contains non-members");
  if (filter.none()) throw NotAFilter("empty");
  if (filter.test(ol.bottom())) throw NotAFilter("contains bottom");
  for (ElementId x : filter.members())
    for (ElementId y : b.members.members())
      if (ol.leq(x, y) && !filter.test(y))
        throw NotAFilter("not upward closed at '" + ol.name(y) + "'");
  for (ElementId x : filter.members())
    for (ElementId y : filter.members())
      if (!filter.test(ol.meet(x, y))) throw NotAFilter("not closed under meet");
  for (ElementId x : b.members.members())
    if (!filter.test(x) && !filter.test(ol.neg(x)))
      throw NotMaximal("contains neither '" + ol.name(x) + "' nor its negation");

  ElementId atom = ol.base().meet_of(filter);
  if (std::find(b.atoms.begin(), b.atoms.end(), atom) == b.atoms.end())
    throw NotMaximal("not generated by an atom");

  // The homomorphism laws follow from the filter properties; verify anyway.
  auto v = [&](ElementId x) { return filter.test(x); };
  for (ElementId x : b.members.members()) {
    if (v(ol.neg(x)) != !v(x)) throw NotAFilter("negation law fails");
    for (ElementId y : b.members.members()) {
      if (v(ol.meet(x, y)) != (v(x) && v(y))) throw NotAFilter("meet law fails");
      if (v(ol.join(x, y)) != (v(x) || v(y))) throw NotAFilter("join law fails");
    }
  }
  return Valuation{atom, filter};
}

std::vector<Valuation> all_valuations(const OrthoLattice& ol, const BooleanSubalgebra& b) {
  std::vector<Valuation> out;
  out.reserve(b.atoms.size());
  for (const Bitset& f : maximal_filters(ol, b)) out.push_back(valuation_from_filter(ol, b, f));
  return out;
}

}  // namespace oml
