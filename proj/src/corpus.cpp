#include "oml/corpus.hpp"

#include "oml/errors.hpp"
#include "oml/format.hpp"

namespace oml {

namespace {

struct RawEntry {
  const char* name;
  const char* text;
};

const RawEntry kLattices[] = {
#include "corpus_oml.inc"
};

const RawEntry kDiagrams[] = {
#include "corpus_gd.inc"
};

}  // namespace

std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const auto& e : kLattices) names.emplace_back(e.name);
  return names;
}

std::optional<std::string> corpus_text(const std::string& name) {
  for (const auto& e : kLattices)
    if (name == e.name) return std::string(e.text);
  return std::nullopt;
}

std::optional<std::string> corpus_diagram_text(const std::string& name) {
  for (const auto& e : kDiagrams)
    if (name == e.name) return std::string(e.text);
  return std::nullopt;
}

OrthoLattice corpus_lattice(const std::string& name) {
  auto text = corpus_text(name);
  if (!text) throw SemanticError("no bundled lattice named '" + name + "'");
  return realize(parse_oml(*text));
}

}  // namespace oml
