#include "oml/ortho.hpp"

#include "oml/errors.hpp"

namespace oml {

OrthoLattice OrthoLattice::attach(Lattice base, std::vector<ElementId> neg) {
  const std::size_t n = base.size();
  if (neg.size() != n) throw SemanticError("orthocomplement map is not total");
  for (ElementId x = 0; x < n; ++x)
    if (neg[x] >= n) throw SemanticError("orthocomplement out of range");

  for (ElementId x = 0; x < n; ++x)
    if (neg[neg[x]] != x) throw InvolutionViolation(base.name(x));

  for (ElementId x = 0; x < n; ++x)
    if (base.meet(x, neg[x]) != base.bottom()) throw ComplementViolation(base.name(x));

  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      if (neg[base.join(x, y)] != base.meet(neg[x], neg[y]))
        throw DeMorganViolation(base.name(x), base.name(y));

  // Forced by the three laws above, but cheap to keep as a belt-and-braces
  // check.
  if (neg[base.bottom()] != base.top()) throw ComplementViolation(base.name(base.bottom()));

  return OrthoLattice(std::move(base), std::move(neg));
}

std::optional<PairWitness> check_orthomodular(const OrthoLattice& ol) {
  const std::size_t n = ol.size();
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      ElementId rhs = ol.join(x, y);
      ElementId lhs = ol.join(x, ol.meet(ol.neg(x), rhs));
      if (lhs != rhs) return PairWitness{x, y};
    }
  }
  return std::nullopt;
}

bool commutes(const OrthoLattice& ol, ElementId a, ElementId b) {
  return a == ol.join(ol.meet(a, b), ol.meet(a, ol.neg(b)));
}

bool is_greechie_set(const OrthoLattice& ol, const Bitset& subset) {
  std::vector<std::size_t> m = subset.members();
  if (m.empty()) throw EmptySet();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      for (std::size_t k = j + 1; k < m.size(); ++k) {
        ElementId a = m[i], b = m[j], c = m[k];
        bool ok = (commutes(ol, a, b) && commutes(ol, a, c)) ||
                  (commutes(ol, b, a) && commutes(ol, b, c)) ||
                  (commutes(ol, c, a) && commutes(ol, c, b));
        if (!ok) return false;
      }
    }
  }
  return true;
}

namespace {

// Worklist closure: when work[i] is processed, every product with the
// elements at indices <= i is inserted, so all pairs of the final set get
// combined exactly once.
Bitset close(const OrthoLattice& ol, const Bitset& seed, bool with_neg) {
  if (seed.none()) throw EmptySet();
  Bitset s = seed;
  std::vector<ElementId> work = seed.members();
  auto push = [&](ElementId z) {
    if (!s.test(z)) {
      s.set(z);
      work.push_back(z);
    }
  };
  for (std::size_t i = 0; i < work.size(); ++i) {
    ElementId x = work[i];
    if (with_neg) push(ol.neg(x));
    for (std::size_t j = 0; j <= i; ++j) {
      ElementId y = work[j];
      push(ol.meet(x, y));
      push(ol.join(x, y));
    }
  }
  return s;
}

}  // namespace

Bitset generated_sublattice(const OrthoLattice& ol, const Bitset& seed) {
  return close(ol, seed, /*with_neg=*/false);
}

Bitset generated_subalgebra(const OrthoLattice& ol, const Bitset& seed) {
  return close(ol, seed, /*with_neg=*/true);
}

bool is_boolean_subalgebra(const OrthoLattice& ol, const Bitset& subset) {
  if (!subset.test(ol.bottom()) || !subset.test(ol.top())) return false;
  std::vector<std::size_t> m = subset.members();
  for (ElementId x : m)
    if (!subset.test(ol.neg(x))) return false;
  for (ElementId x : m)
    for (ElementId y : m)
      if (!subset.test(ol.meet(x, y)) || !subset.test(ol.join(x, y))) return false;
  for (ElementId x : m)
    for (ElementId y : m)
      for (ElementId z : m)
        if (ol.meet(x, ol.join(y, z)) != ol.join(ol.meet(x, y), ol.meet(x, z)))
          return false;
  return true;
}

}  // namespace oml
