#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oml/ortho.hpp"

namespace oml {

/// Bundled example lattices, compiled into the library from corpus/*.oml.
/// The list covers the powers of two (2, 2x2, 2x2x2), the modular
/// non-Boolean MO_n family (mo2, mo3), the benzene ring o6 (an ortholattice
/// that fails the orthomodular law), the product 2xmo2, and the 12-element
/// two-block pasting g12.
struct CorpusEntry {
  std::string name;
  std::string text;
};

/// Names in bundled order.
std::vector<std::string> corpus_names();

/// Raw .oml text of a bundled lattice.
std::optional<std::string> corpus_text(const std::string& name);

/// Raw .gd text of a bundled block diagram (g12 only).
std::optional<std::string> corpus_diagram_text(const std::string& name);

/// Parse and realize a bundled lattice; throws SemanticError for unknown
/// names. Note that o6 deliberately fails check_orthomodular (but is a
/// lawful ortholattice, so it loads).
OrthoLattice corpus_lattice(const std::string& name);

}  // namespace oml
