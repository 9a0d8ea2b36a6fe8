#include "oml/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "oml/consequences.hpp"
#include "oml/contexts.hpp"
#include "oml/corpus.hpp"
#include "oml/errors.hpp"
#include "oml/format.hpp"
#include "oml/greechie.hpp"
#include "oml/modal.hpp"
#include "oml/report.hpp"
#include "oml/square.hpp"

namespace oml {

namespace {

struct Options {
  std::string input;
  std::string element;
  std::string context = "all";
  std::string format = "text";
  std::size_t max_size = Lattice::kDefaultMaxSize;
  std::size_t budget = kDefaultEnumerationBudget;
  std::string corpus_action = "list";
  std::string corpus_name;
};

/// Inputs are file paths or corpus:<name> references to bundled data.
std::string load_text(const std::string& input, bool diagram) {
  const std::string prefix = "corpus:";
  if (input.rfind(prefix, 0) == 0) {
    std::string name = input.substr(prefix.size());
    auto text = diagram ? corpus_diagram_text(name) : corpus_text(name);
    if (!text)
      throw SemanticError(std::string("no bundled ") + (diagram ? "diagram" : "lattice") +
                          " named '" + name + "'");
    return *text;
  }
  std::ifstream in(input);
  if (!in) throw SemanticError("cannot read '" + input + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int emit(const Json& report, const Options& o, std::ostream& out) {
  if (o.format == "json")
    render_json(report, out);
  else
    render_text(report, out);
  return report_holds(report) ? 0 : 1;
}

int do_validate(const Options& o, std::ostream& out) {
  LatticeDocument doc = parse_oml(load_text(o.input, false));
  ValidateOutcome v;
  v.lattice = doc.name;
  v.size = doc.elements.size();
  try {
    OrthoLattice ol = realize(doc, o.max_size);
    v.passed = {"lattice", "involution", "complement", "de-morgan"};
    if (auto w = check_orthomodular(ol)) {
      v.failed_stage = "orthomodular";
      v.witness = {ol.name(w->x), ol.name(w->y)};
    } else {
      v.passed.push_back("orthomodular");
    }
  } catch (const CycleDetected& e) {
    v.failed_stage = "lattice";
    v.detail = e.what();
  } catch (const NotBounded& e) {
    v.failed_stage = "lattice";
    v.detail = e.what();
  } catch (const NotALattice& e) {
    v.failed_stage = "lattice";
    v.detail = e.what();
  } catch (const InvolutionViolation& e) {
    v.passed = {"lattice"};
    v.failed_stage = "involution";
    v.detail = e.what();
  } catch (const ComplementViolation& e) {
    v.passed = {"lattice", "involution"};
    v.failed_stage = "complement";
    v.detail = e.what();
  } catch (const DeMorganViolation& e) {
    v.passed = {"lattice", "involution", "complement"};
    v.failed_stage = "de-morgan";
    v.detail = e.what();
  }
  return emit(validate_report(v), o, out);
}

int do_center(const Options& o, std::ostream& out) {
  LatticeDocument doc = parse_oml(load_text(o.input, false));
  OrthoLattice ol = realize(doc, o.max_size);
  CenterInfo c = center(ol);
  return emit(center_report(doc.name, ol, c), o, out);
}

int do_modal(const Options& o, std::ostream& out) {
  LatticeDocument doc = parse_oml(load_text(o.input, false));
  OrthoLattice ol = realize(doc, o.max_size);
  CenterInfo c = center(ol);
  ModalTables t = modal_tables(ol, c);
  return emit(modal_report(doc.name, ol, c, t), o, out);
}

int do_axioms(const Options& o, std::ostream& out) {
  LatticeDocument doc = parse_oml(load_text(o.input, false));
  OrthoLattice ol = realize(doc, o.max_size);
  std::optional<PairWitness> om = check_orthomodular(ol);
  std::optional<SaturationReport> sat;
  if (!om) {
    CenterInfo c = center(ol);
    ModalTables t = modal_tables(ol, c);
    sat = check_saturation_axioms(ol, t);
  }
  return emit(axioms_report(doc.name, ol, om, sat ? &*sat : nullptr), o, out);
}

int do_consequences(const Options& o, std::ostream& out) {
  LatticeDocument doc = parse_oml(load_text(o.input, false));
  OrthoLattice ol = realize(doc, o.max_size);
  ElementId p = ol.id(o.element);
  CenterInfo c = center(ol);
  ModalTables t = modal_tables(ol, c);
  ConsequenceAgreement agreement = check_consequence_agreement(ol, c, t, p, o.budget);
  ModalCollapseVerdict collapse = check_modal_collapse(ol, c, t, p);
  return emit(consequences_report(doc.name, ol, c, agreement, collapse), o, out);
}

int do_square(const Options& o, std::ostream& out) {
  LatticeDocument doc = parse_oml(load_text(o.input, false));
  OrthoLattice ol = realize(doc, o.max_size);
  ElementId p = ol.id(o.element);
  CenterInfo c = center(ol);
  ModalTables t = modal_tables(ol, c);
  ContextPolicy policy = o.context == "blocks"    ? ContextPolicy::Blocks
                         : o.context == "minimal" ? ContextPolicy::Minimal
                                                  : ContextPolicy::All;
  std::vector<SquareReport> reports = square_reports(ol, c, t, p, policy, o.budget);
  return emit(square_report(doc.name, ol, c, p, o.context, reports), o, out);
}

int do_greechie(const Options& o, std::ostream& out) {
  GreechieDocument diagram = parse_greechie(load_text(o.input, true));
  LatticeDocument lattice = generate_from_greechie(diagram);
  return emit(greechie_report(diagram, lattice), o, out);
}

int do_corpus(const Options& o, std::ostream& out) {
  if (o.corpus_action == "list") {
    std::vector<std::pair<std::string, std::size_t>> entries;
    for (const std::string& name : corpus_names())
      entries.emplace_back(name, corpus_lattice(name).size());
    return emit(corpus_list_report(entries), o, out);
  }
  // show
  auto text = corpus_text(o.corpus_name);
  if (!text) throw SemanticError("no bundled lattice named '" + o.corpus_name + "'");
  return emit(corpus_show_report(o.corpus_name, *text), o, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Modal enrichment and squares of opposition on finite orthomodular lattices"};
  app.name("omlsquare");
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", o.input, "Path to a .oml file, or corpus:<name>")->required();
    cmd->add_option("--max-size", o.max_size, "Largest accepted element count");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* validate = app.add_subcommand(
      "validate", "Check the lattice and orthocomplement laws, then the orthomodular law");
  add_input(validate);
  add_format(validate);

  CLI::App* center_cmd =
      app.add_subcommand("center", "List the central elements and the atoms of the center");
  add_input(center_cmd);
  add_format(center_cmd);

  CLI::App* modal =
      app.add_subcommand("modal", "Tabulate the modal operators: least central element above "
                                  "and greatest central element below each element");
  add_input(modal);
  add_format(modal);

  CLI::App* axioms = app.add_subcommand(
      "axioms", "Verify the orthomodular law and the saturation axioms S1-S7");
  add_input(axioms);
  add_format(axioms);

  CLI::App* consequences = app.add_subcommand(
      "consequences",
      "Compute the classical consequences of an element three ways and cross-check them");
  add_input(consequences);
  add_format(consequences);
  consequences->add_option("--element", o.element, "Element under test")->required();
  consequences->add_option("--budget", o.budget, "Context enumeration budget");

  CLI::App* square = app.add_subcommand(
      "square", "Check the four square-of-opposition relations over contextual valuations");
  add_input(square);
  add_format(square);
  square->add_option("--element", o.element, "Non-central element under test")->required();
  square->add_option("--context", o.context, "Contexts to quantify over")
      ->check(CLI::IsMember({"all", "blocks", "minimal"}));
  square->add_option("--budget", o.budget, "Context enumeration budget");

  CLI::App* greechie = app.add_subcommand(
      "greechie", "Generate an orthomodular lattice from a block diagram (.gd)");
  greechie->add_option("input", o.input, "Path to a .gd file, or corpus:<name>")->required();
  add_format(greechie);

  CLI::App* corpus = app.add_subcommand("corpus", "Inspect the bundled example lattices");
  corpus->add_option("action", o.corpus_action, "list, or show <name>")
      ->check(CLI::IsMember({"list", "show"}));
  corpus->add_option("name", o.corpus_name, "Entry to show");
  add_format(corpus);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(validate)) return do_validate(o, out);
    if (app.got_subcommand(center_cmd)) return do_center(o, out);
    if (app.got_subcommand(modal)) return do_modal(o, out);
    if (app.got_subcommand(axioms)) return do_axioms(o, out);
    if (app.got_subcommand(consequences)) return do_consequences(o, out);
    if (app.got_subcommand(square)) return do_square(o, out);
    if (app.got_subcommand(greechie)) return do_greechie(o, out);
    if (app.got_subcommand(corpus)) {
      if (o.corpus_action == "show" && o.corpus_name.empty()) {
        err << "error: 'corpus show' needs an entry name\n";
        return 2;
      }
      return do_corpus(o, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";  // unreachable: require_subcommand(1)
  return 2;
}

}  // namespace oml
