#pragma once

#include <string>
#include <vector>

#include "oml/format.hpp"

namespace oml {

/// Block diagram: a list of blocks, each a list of atom names.
///
///   greechie <name>
///   blocks: a b c ; c d e
///
/// Blocks may also be spread over several `blocks:` lines.
struct GreechieDocument {
  std::string name;
  std::vector<std::vector<std::string>> blocks;

  bool operator==(const GreechieDocument&) const = default;
};

/// Throws SyntaxError / SemanticError.
GreechieDocument parse_greechie(const std::string& text);

/// Paste one Boolean algebra 2^|block| per block, identifying bottom, top,
/// shared atoms, and their complements across blocks. Rejects diagrams two
/// blocks of which share more than one atom (BlockOverlapTooLarge) or whose
/// block-intersection graph contains a loop of order 3 or 4 (LoopOrder3or4).
/// The output is re-validated: it must build, carry a lawful
/// orthocomplement, and satisfy the orthomodular law, else GenerationFailed
/// reports the counterexample.
///
/// Element naming: bottom "0", top "1", atoms by name, complement of atom x
/// as "x'", other block subsets as their atoms joined with '+'. Atom names
/// must not collide with that scheme ("0", "1", trailing "'", containing
/// '+').
LatticeDocument generate_from_greechie(const GreechieDocument& doc);

}  // namespace oml
