#include "oml/format.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "oml/errors.hpp"

namespace oml {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == ',' || c == ':' ||
        c == '<' || c == ';')
      return false;
  return true;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// "a<b" or "a:b" — exactly one separator, nonempty trimmed sides.
std::pair<std::string, std::string> parse_pair(const std::string& entry, char sep,
                                               std::size_t line) {
  auto parts = split_on(entry, sep);
  if (parts.size() != 2)
    throw SyntaxError(line, "expected exactly one '" + std::string(1, sep) + "' in '" +
                                trim(entry) + "'");
  std::string lhs = trim(parts[0]), rhs = trim(parts[1]);
  if (!valid_name(lhs) || !valid_name(rhs))
    throw SyntaxError(line, "bad name in '" + trim(entry) + "'");
  return {lhs, rhs};
}

}  // namespace

LatticeDocument parse_oml(const std::string& text) {
  LatticeDocument doc;
  bool have_header = false, have_bottom = false, have_top = false;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) continue;

    if (!have_header) {
      if (line.rfind("lattice", 0) != 0)
        throw SyntaxError(lineno, "expected 'lattice <name>' header");
      std::string name = trim(line.substr(7));
      if (!valid_name(name)) throw SyntaxError(lineno, "bad lattice name");
      doc.name = name;
      have_header = true;
      continue;
    }

    auto section = [&](const char* kw) -> const char* {
      std::string key = std::string(kw) + ":";
      if (line.rfind(key, 0) == 0) return line.c_str() + key.size();
      return nullptr;
    };

    if (const char* rest = section("elements")) {
      for (const std::string& tok : split_ws(rest)) {
        if (!valid_name(tok)) throw SyntaxError(lineno, "bad element name '" + tok + "'");
        doc.elements.push_back(tok);
      }
    } else if (const char* rest = section("bottom")) {
      if (have_bottom) throw SyntaxError(lineno, "duplicate 'bottom:' section");
      auto toks = split_ws(rest);
      if (toks.size() != 1 || !valid_name(toks[0]))
        throw SyntaxError(lineno, "expected one name after 'bottom:'");
      doc.bottom = toks[0];
      have_bottom = true;
    } else if (const char* rest = section("top")) {
      if (have_top) throw SyntaxError(lineno, "duplicate 'top:' section");
      auto toks = split_ws(rest);
      if (toks.size() != 1 || !valid_name(toks[0]))
        throw SyntaxError(lineno, "expected one name after 'top:'");
      doc.top = toks[0];
      have_top = true;
    } else if (const char* rest = section("covers")) {
      std::string body = trim(rest);
      if (!body.empty())
        for (const std::string& entry : split_on(body, ','))
          doc.covers.push_back(parse_pair(entry, '<', lineno));
    } else if (const char* rest = section("ortho")) {
      std::string body = trim(rest);
      if (!body.empty())
        for (const std::string& entry : split_on(body, ','))
          doc.ortho.push_back(parse_pair(entry, ':', lineno));
    } else if (line.rfind("lattice", 0) == 0) {
      throw SyntaxError(lineno, "duplicate 'lattice' header");
    } else {
      throw SyntaxError(lineno, "unknown section '" + line + "'");
    }
  }

  if (!have_header) throw SyntaxError(lineno, "missing 'lattice <name>' header");
  if (doc.elements.empty()) throw SyntaxError(lineno, "empty or missing elements section");
  if (!have_bottom) throw SyntaxError(lineno, "missing 'bottom:' section");
  if (!have_top) throw SyntaxError(lineno, "missing 'top:' section");

  // Name-level validation.
  std::unordered_set<std::string> names;
  for (const std::string& e : doc.elements)
    if (!names.insert(e).second) throw SemanticError("duplicate element '" + e + "'");
  auto known = [&](const std::string& n) {
    if (!names.count(n)) throw SemanticError("unknown element '" + n + "'");
  };
  known(doc.bottom);
  known(doc.top);
  for (const auto& [lo, hi] : doc.covers) {
    known(lo);
    known(hi);
  }
  std::unordered_map<std::string, std::string> neg;
  for (const auto& [x, y] : doc.ortho) {
    known(x);
    known(y);
    auto [it, fresh] = neg.emplace(x, y);
    if (!fresh && it->second != y)
      throw SemanticError("conflicting ortho entries for '" + x + "'");
  }
  for (const std::string& e : doc.elements)
    if (!neg.count(e)) throw SemanticError("missing ortho entry for '" + e + "'");
  for (const auto& [x, y] : neg) {
    auto back = neg.find(y);
    if (back == neg.end() || back->second != x)
      throw SemanticError("ortho entry '" + x + ":" + y + "' has no symmetric partner");
  }
  return doc;
}

std::string emit_oml(const LatticeDocument& doc) {
  for (const std::string& e : doc.elements)
    if (!valid_name(e)) throw SemanticError("element name '" + e + "' cannot be serialized");

  std::ostringstream out;
  out << "lattice " << doc.name << "\n";
  out << "elements:";
  for (const std::string& e : doc.elements) out << " " << e;
  out << "\n";
  out << "bottom: " << doc.bottom << "\n";
  out << "top: " << doc.top << "\n";
  if (!doc.covers.empty()) {
    out << "covers: ";
    for (std::size_t i = 0; i < doc.covers.size(); ++i) {
      if (i) out << ", ";
      out << doc.covers[i].first << "<" << doc.covers[i].second;
    }
    out << "\n";
  }
  out << "ortho: ";
  for (std::size_t i = 0; i < doc.ortho.size(); ++i) {
    if (i) out << ", ";
    out << doc.ortho[i].first << ":" << doc.ortho[i].second;
  }
  out << "\n";
  return out.str();
}

OrthoLattice realize(const LatticeDocument& doc, std::size_t max_size) {
  Lattice lat = Lattice::build(doc.elements, doc.covers, max_size);
  if (lat.name(lat.bottom()) != doc.bottom)
    throw SemanticError("declared bottom '" + doc.bottom + "' but computed '" +
                        lat.name(lat.bottom()) + "'");
  if (lat.name(lat.top()) != doc.top)
    throw SemanticError("declared top '" + doc.top + "' but computed '" +
                        lat.name(lat.top()) + "'");
  std::vector<ElementId> neg(lat.size());
  for (const auto& [x, y] : doc.ortho) neg[lat.id(x)] = lat.id(y);
  return OrthoLattice::attach(std::move(lat), std::move(neg));
}

LatticeDocument document_from(const std::string& name, const OrthoLattice& ol) {
  LatticeDocument doc;
  doc.name = name;
  doc.elements = ol.base().names();
  doc.bottom = ol.name(ol.bottom());
  doc.top = ol.name(ol.top());
  for (const auto& [lo, hi] : ol.base().cover_pairs())
    doc.covers.emplace_back(ol.name(lo), ol.name(hi));
  for (ElementId x = 0; x < ol.size(); ++x)
    doc.ortho.emplace_back(ol.name(x), ol.name(ol.neg(x)));
  return doc;
}

}  // namespace oml
