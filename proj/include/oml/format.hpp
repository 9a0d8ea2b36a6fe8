#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oml/lattice.hpp"
#include "oml/ortho.hpp"

namespace oml {

/// Parsed form of the line-oriented lattice interchange format:
///
///   # comment
///   lattice <name>
///   elements: n1 n2 ...
///   bottom: n
///   top: n
///   covers: a<b, c<d, ...
///   ortho: a:b, c:d, ...
///
/// `elements`, `covers`, and `ortho` sections may repeat and accumulate;
/// `lattice`, `bottom`, and `top` must appear exactly once. Names may use
/// any non-whitespace characters except the structural ones (# , : < ;).
struct LatticeDocument {
  std::string name;
  std::vector<std::string> elements;
  std::string bottom, top;
  std::vector<std::pair<std::string, std::string>> covers;  // lower < upper
  std::vector<std::pair<std::string, std::string>> ortho;   // x : ¬x

  bool operator==(const LatticeDocument&) const = default;
};

/// Throws SyntaxError (with line number) for grammar problems and
/// SemanticError for name-level ones: duplicate elements, unknown names,
/// missing or asymmetric or conflicting ortho entries.
LatticeDocument parse_oml(const std::string& text);

/// Canonical rendering; parse_oml(emit_oml(doc)) == doc.
std::string emit_oml(const LatticeDocument& doc);

/// Build the lattice, cross-check the declared bottom/top, and attach the
/// orthocomplement (which verifies the involution, complement, and
/// De Morgan laws).
OrthoLattice realize(const LatticeDocument& doc,
                     std::size_t max_size = Lattice::kDefaultMaxSize);

/// Canonical document for a lattice: elements in index order, covers the
/// sorted transitive reduction, ortho one entry per element.
LatticeDocument document_from(const std::string& name, const OrthoLattice& ol);

}  // namespace oml
