#include "oml/report.hpp"

#include <algorithm>
#include <ostream>

namespace oml {

namespace {

Json name_array(const OrthoLattice& ol, const Bitset& set) {
  Json arr = Json::array();
  for (std::size_t x : set.members()) arr.push_back(ol.name(x));
  return arr;
}

Json name_array(const OrthoLattice& ol, const std::vector<ElementId>& ids) {
  Json arr = Json::array();
  for (ElementId x : ids) arr.push_back(ol.name(x));
  return arr;
}

Json header(const char* kind, const std::string& name, std::size_t size) {
  Json j;
  j["tool"] = "omlsquare";
  j["report"] = kind;
  j["lattice"] = name;
  j["size"] = size;
  return j;
}

Json subalgebra_json(const OrthoLattice& ol, const BooleanSubalgebra& w) {
  Json j;
  j["members"] = name_array(ol, w.members);
  j["atoms"] = name_array(ol, w.atoms);
  return j;
}

Json verdict_json(const OrthoLattice& ol, const RelationVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  if (v.violation_atom) j["violation_atom"] = ol.name(*v.violation_atom);
  if (v.witness_atom) j["witness_atom"] = ol.name(*v.witness_atom);
  return j;
}

}  // namespace

Json validate_report(const ValidateOutcome& outcome) {
  Json j = header("validate", outcome.lattice, outcome.size);
  j["passed"] = outcome.passed;
  if (outcome.failed_stage) {
    Json f;
    f["stage"] = *outcome.failed_stage;
    if (outcome.witness) {
      f["witness"] = Json{{"x", outcome.witness->first}, {"y", outcome.witness->second}};
    }
    if (outcome.detail) f["detail"] = *outcome.detail;
    j["failure"] = f;
  }
  j["valid"] = outcome.valid();
  return j;
}

Json center_report(const std::string& name, const OrthoLattice& ol, const CenterInfo& c) {
  Json j = header("center", name, ol.size());
  j["center"] = name_array(ol, c.members);
  j["center_atoms"] = name_array(ol, c.algebra.atoms);
  return j;
}

Json modal_report(const std::string& name, const OrthoLattice& ol, const CenterInfo& c,
                  const ModalTables& t) {
  Json j = header("modal", name, ol.size());
  j["center"] = name_array(ol, c.members);
  Json table = Json::array();
  for (ElementId x = 0; x < ol.size(); ++x) {
    Json row;
    row["element"] = ol.name(x);
    row["diamond"] = ol.name(t.dia(x));
    row["box"] = ol.name(t.box_of(x));
    table.push_back(row);
  }
  j["table"] = table;
  return j;
}

Json axioms_report(const std::string& name, const OrthoLattice& ol,
                   const std::optional<PairWitness>& om_witness, const SaturationReport* sat) {
  Json j = header("axioms", name, ol.size());
  Json om;
  om["holds"] = !om_witness.has_value();
  if (om_witness)
    om["witness"] = Json{{"x", ol.name(om_witness->x)}, {"y", ol.name(om_witness->y)}};
  j["orthomodular"] = om;
  bool all = !om_witness.has_value();
  if (sat) {
    Json axioms = Json::array();
    for (const AxiomVerdict& v : sat->axioms) {
      Json a;
      a["axiom"] = v.axiom;
      a["holds"] = v.holds;
      if (!v.holds) a["witness"] = name_array(ol, v.witness);
      axioms.push_back(a);
    }
    j["axioms"] = axioms;
    all = all && sat->all_hold();
  }
  j["all_hold"] = all;
  return j;
}

Json consequences_report(const std::string& name, const OrthoLattice& ol, const CenterInfo& c,
                         const ConsequenceAgreement& agreement,
                         const ModalCollapseVerdict& collapse) {
  Json j = header("consequences", name, ol.size());
  j["element"] = ol.name(agreement.of);
  j["center"] = name_array(ol, c.members);
  j["by_definition"] = name_array(ol, agreement.by_definition);
  j["by_order"] = name_array(ol, agreement.by_order);
  j["by_diamond"] = name_array(ol, agreement.by_diamond);
  j["agree"] = agreement.holds;
  if (agreement.disagreement) j["disagreement"] = ol.name(*agreement.disagreement);
  Json mc;
  mc["holds"] = collapse.holds;
  mc["overlap"] = ol.name(collapse.overlap);
  mc["overlap_is_zero"] = collapse.antecedent;
  mc["central"] = collapse.central;
  j["modal_collapse"] = mc;
  j["all_hold"] = agreement.holds && collapse.holds;
  return j;
}

Json square_report(const std::string& name, const OrthoLattice& ol, const CenterInfo& c,
                   ElementId p, const std::string& policy,
                   const std::vector<SquareReport>& reports) {
  Json j = header("square", name, ol.size());
  j["element"] = ol.name(p);
  j["policy"] = policy;
  j["center"] = name_array(ol, c.members);
  bool all = true;
  Json contexts = Json::array();
  for (const SquareReport& r : reports) {
    Json ctx;
    ctx["context"] = subalgebra_json(ol, r.context);
    ctx["expanded"] = subalgebra_json(ol, r.expanded);
    ctx["corners"] = Json{{"diamond_p", ol.name(r.corners.diamond_p)},
                          {"diamond_not_p", ol.name(r.corners.diamond_np)},
                          {"box_p", ol.name(r.corners.box_p)},
                          {"box_not_p", ol.name(r.corners.box_np)}};
    ctx["contraries"] = verdict_json(ol, r.contraries);
    ctx["subcontraries"] = verdict_json(ol, r.subcontraries);
    ctx["subalterns"] = Json{{"affirmative", verdict_json(ol, r.subalterns.affirmative)},
                             {"negative", verdict_json(ol, r.subalterns.negative)}};
    ctx["contradictories"] =
        Json{{"diamond_pair", verdict_json(ol, r.contradictories.diamond_pair)},
             {"box_pair", verdict_json(ol, r.contradictories.box_pair)}};
    ctx["all_hold"] = r.all_hold();
    all = all && r.all_hold();
    contexts.push_back(ctx);
  }
  j["contexts"] = contexts;
  j["all_hold"] = all;
  return j;
}

Json greechie_report(const GreechieDocument& diagram, const LatticeDocument& lattice) {
  Json j;
  j["tool"] = "omlsquare";
  j["report"] = "greechie";
  j["diagram"] = diagram.name;
  Json blocks = Json::array();
  for (const auto& block : diagram.blocks) blocks.push_back(block);
  j["blocks"] = blocks;
  j["size"] = lattice.elements.size();
  Json doc;
  doc["name"] = lattice.name;
  doc["elements"] = lattice.elements;
  doc["bottom"] = lattice.bottom;
  doc["top"] = lattice.top;
  Json covers = Json::array();
  for (const auto& [lo, hi] : lattice.covers) covers.push_back(Json::array({lo, hi}));
  doc["covers"] = covers;
  Json ortho = Json::array();
  for (const auto& [x, y] : lattice.ortho) ortho.push_back(Json::array({x, y}));
  doc["ortho"] = ortho;
  j["lattice"] = doc;
  return j;
}

Json corpus_list_report(const std::vector<std::pair<std::string, std::size_t>>& entries) {
  Json j;
  j["tool"] = "omlsquare";
  j["report"] = "corpus";
  Json list = Json::array();
  for (const auto& [name, size] : entries)
    list.push_back(Json{{"name", name}, {"size", size}});
  j["entries"] = list;
  return j;
}

Json corpus_show_report(const std::string& name, const std::string& text) {
  Json j;
  j["tool"] = "omlsquare";
  j["report"] = "corpus-show";
  j["name"] = name;
  j["oml"] = text;
  return j;
}

void render_json(const Json& report, std::ostream& out) { out << report.dump(2) << "\n"; }

bool report_holds(const Json& report) {
  const std::string kind = report.at("report").get<std::string>();
  if (kind == "validate") return report.at("valid").get<bool>();
  if (report.contains("all_hold")) return report.at("all_hold").get<bool>();
  return true;
}

namespace {

std::string joined(const Json& names, const char* sep = " ") {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += sep;
    out += n.get<std::string>();
  }
  return out;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::string verdict_line(const Json& v) {
  std::string s = v.at("holds").get<bool>() ? "ok" : "FAIL";
  if (v.contains("violation_atom"))
    s += " (violated at atom " + v.at("violation_atom").get<std::string>() + ")";
  if (v.contains("witness_atom"))
    s += " (witness atom " + v.at("witness_atom").get<std::string>() + ")";
  return s;
}

void text_validate(const Json& j, std::ostream& out) {
  out << "lattice " << j.at("lattice").get<std::string>() << " (" << j.at("size").get<std::size_t>()
      << " elements)\n";
  for (const auto& stage : j.at("passed")) out << "  " << stage.get<std::string>() << ": ok\n";
  if (j.contains("failure")) {
    const Json& f = j.at("failure");
    out << "  " << f.at("stage").get<std::string>() << ": FAIL";
    if (f.contains("witness"))
      out << " at (" << f.at("witness").at("x").get<std::string>() << ", "
          << f.at("witness").at("y").get<std::string>() << ")";
    if (f.contains("detail")) out << " — " << f.at("detail").get<std::string>();
    out << "\n";
  }
  out << "valid: " << yesno(j.at("valid").get<bool>()) << "\n";
}

void text_center(const Json& j, std::ostream& out) {
  out << "lattice " << j.at("lattice").get<std::string>() << " (" << j.at("size").get<std::size_t>()
      << " elements)\n";
  out << "center: " << joined(j.at("center")) << "\n";
  out << "center atoms: " << joined(j.at("center_atoms")) << "\n";
}

void text_modal(const Json& j, std::ostream& out) {
  out << "lattice " << j.at("lattice").get<std::string>() << " (" << j.at("size").get<std::size_t>()
      << " elements)\n";
  out << "center: " << joined(j.at("center")) << "\n";
  const Json& table = j.at("table");
  std::size_t w0 = 7, w1 = 7;  // widths of "element", "diamond"
  for (const auto& row : table) {
    w0 = std::max(w0, row.at("element").get<std::string>().size());
    w1 = std::max(w1, row.at("diamond").get<std::string>().size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w + 2 - s.size(), ' ');
  };
  out << pad("element", w0) << pad("diamond", w1) << "box\n";
  for (const auto& row : table)
    out << pad(row.at("element").get<std::string>(), w0)
        << pad(row.at("diamond").get<std::string>(), w1) << row.at("box").get<std::string>()
        << "\n";
}

void text_axioms(const Json& j, std::ostream& out) {
  out << "lattice " << j.at("lattice").get<std::string>() << " (" << j.at("size").get<std::size_t>()
      << " elements)\n";
  const Json& om = j.at("orthomodular");
  out << "orthomodular: " << (om.at("holds").get<bool>() ? "ok" : "FAIL");
  if (om.contains("witness"))
    out << " at (" << om.at("witness").at("x").get<std::string>() << ", "
        << om.at("witness").at("y").get<std::string>() << ")";
  out << "\n";
  if (j.contains("axioms")) {
    for (const auto& a : j.at("axioms")) {
      out << a.at("axiom").get<std::string>() << ": "
          << (a.at("holds").get<bool>() ? "ok" : "FAIL");
      if (a.contains("witness")) out << " at (" << joined(a.at("witness"), ", ") << ")";
      out << "\n";
    }
  }
  out << "all hold: " << yesno(j.at("all_hold").get<bool>()) << "\n";
}

void text_consequences(const Json& j, std::ostream& out) {
  out << "lattice " << j.at("lattice").get<std::string>() << " (" << j.at("size").get<std::size_t>()
      << " elements)\n";
  out << "element: " << j.at("element").get<std::string>() << "\n";
  out << "center: " << joined(j.at("center")) << "\n";
  out << "consequences by definition: " << joined(j.at("by_definition")) << "\n";
  out << "consequences by order:      " << joined(j.at("by_order")) << "\n";
  out << "consequences by diamond:    " << joined(j.at("by_diamond")) << "\n";
  out << "methods agree: " << yesno(j.at("agree").get<bool>());
  if (j.contains("disagreement"))
    out << " (first disagreement: " << j.at("disagreement").get<std::string>() << ")";
  out << "\n";
  const Json& mc = j.at("modal_collapse");
  out << "modal collapse: " << (mc.at("holds").get<bool>() ? "ok" : "FAIL")
      << " (diamond overlap = " << mc.at("overlap").get<std::string>()
      << ", central: " << yesno(mc.at("central").get<bool>()) << ")\n";
}

void text_square(const Json& j, std::ostream& out) {
  out << "lattice " << j.at("lattice").get<std::string>() << " (" << j.at("size").get<std::size_t>()
      << " elements)\n";
  out << "element: " << j.at("element").get<std::string>() << "\n";
  out << "policy: " << j.at("policy").get<std::string>() << "\n";
  out << "center: " << joined(j.at("center")) << "\n";
  const Json& contexts = j.at("contexts");
  for (const auto& ctx : contexts) {
    out << "context {" << joined(ctx.at("context").at("members"), ", ") << "} -> expanded {"
        << joined(ctx.at("expanded").at("members"), ", ") << "}\n";
    const Json& c = ctx.at("corners");
    out << "  corners: diamond p = " << c.at("diamond_p").get<std::string>()
        << ", diamond not-p = " << c.at("diamond_not_p").get<std::string>()
        << ", box p = " << c.at("box_p").get<std::string>()
        << ", box not-p = " << c.at("box_not_p").get<std::string>() << "\n";
    out << "  contraries: " << verdict_line(ctx.at("contraries")) << "\n";
    out << "  subcontraries: " << verdict_line(ctx.at("subcontraries")) << "\n";
    out << "  subaltern affirmative: " << verdict_line(ctx.at("subalterns").at("affirmative"))
        << "\n";
    out << "  subaltern negative: " << verdict_line(ctx.at("subalterns").at("negative")) << "\n";
    out << "  contradictories diamond pair: "
        << verdict_line(ctx.at("contradictories").at("diamond_pair")) << "\n";
    out << "  contradictories box pair: "
        << verdict_line(ctx.at("contradictories").at("box_pair")) << "\n";
  }
  out << contexts.size() << (contexts.size() == 1 ? " context" : " contexts")
      << " checked, all hold: " << yesno(j.at("all_hold").get<bool>()) << "\n";
}

void text_greechie(const Json& j, std::ostream& out) {
  const Json& doc = j.at("lattice");
  out << "# generated from diagram " << j.at("diagram").get<std::string>() << " ("
      << j.at("blocks").size() << (j.at("blocks").size() == 1 ? " block)\n" : " blocks)\n");
  out << "lattice " << doc.at("name").get<std::string>() << "\n";
  out << "elements: " << joined(doc.at("elements")) << "\n";
  out << "bottom: " << doc.at("bottom").get<std::string>() << "\n";
  out << "top: " << doc.at("top").get<std::string>() << "\n";
  const Json& covers = doc.at("covers");
  if (!covers.empty()) {
    out << "covers: ";
    for (std::size_t i = 0; i < covers.size(); ++i) {
      if (i) out << ", ";
      out << covers[i][0].get<std::string>() << "<" << covers[i][1].get<std::string>();
    }
    out << "\n";
  }
  out << "ortho: ";
  const Json& ortho = doc.at("ortho");
  for (std::size_t i = 0; i < ortho.size(); ++i) {
    if (i) out << ", ";
    out << ortho[i][0].get<std::string>() << ":" << ortho[i][1].get<std::string>();
  }
  out << "\n";
}

void text_corpus(const Json& j, std::ostream& out) {
  for (const auto& e : j.at("entries")) out << e.at("name").get<std::string>() << "\n";
}

void text_corpus_show(const Json& j, std::ostream& out) {
  out << j.at("oml").get<std::string>();
}

}  // namespace

void render_text(const Json& report, std::ostream& out) {
  const std::string kind = report.at("report").get<std::string>();
  if (kind == "validate") return text_validate(report, out);
  if (kind == "center") return text_center(report, out);
  if (kind == "modal") return text_modal(report, out);
  if (kind == "axioms") return text_axioms(report, out);
  if (kind == "consequences") return text_consequences(report, out);
  if (kind == "square") return text_square(report, out);
  if (kind == "greechie") return text_greechie(report, out);
  if (kind == "corpus") return text_corpus(report, out);
  if (kind == "corpus-show") return text_corpus_show(report, out);
  render_json(report, out);  // unreachable fallback
}

}  // namespace oml
