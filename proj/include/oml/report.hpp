#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "oml/consequences.hpp"
#include "oml/format.hpp"
#include "oml/greechie.hpp"
#include "oml/modal.hpp"
#include "oml/ortho.hpp"
#include "oml/square.hpp"

namespace oml {

/// Every CLI report is a JSON object; plain text output is a rendering of
/// the same object, so the two formats can never drift apart. Key order is
/// fixed by construction, which makes reports byte-reproducible.
using Json = nlohmann::ordered_json;

/// A validate run walks the stages in order and stops at the first
/// failure: lattice (the covers describe a bounded lattice), involution,
/// complement, de-morgan, orthomodular.
struct ValidateOutcome {
  std::string lattice;
  std::size_t size = 0;
  std::vector<std::string> passed;
  std::optional<std::string> failed_stage;
  std::optional<std::string> detail;                         // exception text
  std::optional<std::pair<std::string, std::string>> witness;  // orthomodular pair
  bool valid() const { return !failed_stage.has_value(); }
};

Json validate_report(const ValidateOutcome& outcome);

Json center_report(const std::string& name, const OrthoLattice& ol, const CenterInfo& c);

Json modal_report(const std::string& name, const OrthoLattice& ol, const CenterInfo& c,
                  const ModalTables& t);

/// sat may be null when the orthomodular gate already failed.
Json axioms_report(const std::string& name, const OrthoLattice& ol,
                   const std::optional<PairWitness>& om_witness, const SaturationReport* sat);

Json consequences_report(const std::string& name, const OrthoLattice& ol, const CenterInfo& c,
                         const ConsequenceAgreement& agreement,
                         const ModalCollapseVerdict& collapse);

Json square_report(const std::string& name, const OrthoLattice& ol, const CenterInfo& c,
                   ElementId p, const std::string& policy,
                   const std::vector<SquareReport>& reports);

Json greechie_report(const GreechieDocument& diagram, const LatticeDocument& lattice);

Json corpus_list_report(const std::vector<std::pair<std::string, std::size_t>>& entries);

Json corpus_show_report(const std::string& name, const std::string& text);

/// Pretty-printed JSON with a trailing newline.
void render_json(const Json& report, std::ostream& out);

/// Human-readable rendering of the same object.
void render_text(const Json& report, std::ostream& out);

/// True when the report object signals that every checked property holds;
/// drives the process exit code (0 versus 1).
bool report_holds(const Json& report);

}  // namespace oml
