#include "oml/greechie.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "oml/errors.hpp"
#include "oml/ortho.hpp"

namespace oml {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool valid_atom_token(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == ',' || c == ':' ||
        c == '<' || c == ';')
      return false;
  return true;
}

// Union-find over dense indices.
struct UnionFind {
  std::vector<std::size_t> parent;
  std::size_t add() {
    parent.push_back(parent.size());
    return parent.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

GreechieDocument parse_greechie(const std::string& text) {
  GreechieDocument doc;
  bool have_header = false;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;

    if (!have_header) {
      if (line.rfind("greechie", 0) != 0)
        throw SyntaxError(lineno, "expected 'greechie <name>' header");
      std::string name = trim(line.substr(8));
      if (!valid_atom_token(name)) throw SyntaxError(lineno, "bad diagram name");
      doc.name = name;
      have_header = true;
      continue;
    }
    if (line.rfind("blocks:", 0) != 0)
      throw SyntaxError(lineno, "unknown section '" + line + "'");

    std::string body = line.substr(7);
    std::string entry;
    std::istringstream blocks(body);
    while (std::getline(blocks, entry, ';')) {
      std::vector<std::string> atoms;
      std::istringstream toks(entry);
      std::string tok;
      while (toks >> tok) {
        if (!valid_atom_token(tok)) throw SyntaxError(lineno, "bad atom name '" + tok + "'");
        atoms.push_back(tok);
      }
      if (atoms.empty()) throw SyntaxError(lineno, "empty block");
      doc.blocks.push_back(std::move(atoms));
    }
  }
  if (!have_header) throw SyntaxError(lineno, "missing 'greechie <name>' header");
  if (doc.blocks.empty()) throw SyntaxError(lineno, "no blocks given");
  return doc;
}

LatticeDocument generate_from_greechie(const GreechieDocument& doc) {
  const auto& blocks = doc.blocks;

  for (const auto& block : blocks) {
    if (block.size() < 2) throw SemanticError("each block needs at least 2 atoms");
    std::set<std::string> uniq(block.begin(), block.end());
    if (uniq.size() != block.size()) throw SemanticError("block repeats an atom");
    for (const auto& a : block) {
      if (a == "0" || a == "1" || a.back() == '\'' || a.find('+') != std::string::npos)
        throw SemanticError("atom name '" + a + "' collides with the generated naming scheme");
    }
  }

  // Pairwise intersections; more than one shared atom is rejected.
  const std::size_t nb = blocks.size();
  std::vector<std::vector<std::string>> shared(nb * nb);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j) {
      std::vector<std::string> common;
      for (const auto& a : blocks[i])
        if (std::find(blocks[j].begin(), blocks[j].end(), a) != blocks[j].end())
          common.push_back(a);
      if (common.size() > 1) throw BlockOverlapTooLarge(i, j);
      shared[i * nb + j] = shared[j * nb + i] = common;
    }
  auto connected = [&](std::size_t i, std::size_t j) { return !shared[i * nb + j].empty(); };
  auto connector = [&](std::size_t i, std::size_t j) { return shared[i * nb + j][0]; };

  // Loops of order 3: three pairwise-connected blocks whose connecting
  // atoms are not all the same (three blocks through one shared atom form
  // a legal star).
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j)
      for (std::size_t k = j + 1; k < nb; ++k) {
        if (!connected(i, j) || !connected(j, k) || !connected(i, k)) continue;
        const std::string &ab = connector(i, j), &bc = connector(j, k), &ac = connector(i, k);
        if (!(ab == bc && bc == ac))
          throw LoopOrder3or4("blocks " + std::to_string(i + 1) + ", " +
                              std::to_string(j + 1) + ", " + std::to_string(k + 1));
      }
  // Loops of order 4: a 4-cycle whose diagonals do not intersect (diagonal
  // contact would already have been caught as an order-3 loop or a star).
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) {
          if (i >= j || i >= k || i >= l || j == k || j == l || k == l || j > l) continue;
          if (connected(i, j) && connected(j, k) && connected(k, l) && connected(l, i) &&
              !connected(i, k) && !connected(j, l))
            throw LoopOrder3or4("blocks " + std::to_string(i + 1) + ", " +
                                std::to_string(j + 1) + ", " + std::to_string(k + 1) + ", " +
                                std::to_string(l + 1));
        }

  // Identify block subsets across blocks: bottom, top, each shared atom,
  // and its in-block complement. Keys name the identification classes.
  UnionFind uf;
  std::unordered_map<std::string, std::size_t> key_node;
  auto node_for = [&](const std::string& key) {
    auto it = key_node.find(key);
    if (it != key_node.end()) return it->second;
    std::size_t n = uf.add();
    key_node.emplace(key, n);
    return n;
  };

  std::vector<std::vector<std::size_t>> subset_node(nb);
  for (std::size_t bi = 0; bi < nb; ++bi) {
    const auto& block = blocks[bi];
    const std::size_t k = block.size();
    const unsigned full = (1u << k) - 1;
    subset_node[bi].resize(full + 1);
    for (unsigned mask = 0; mask <= full; ++mask) {
      std::vector<std::string> keys;
      if (mask == 0) {
        keys.push_back("0");
      } else if (mask == full) {
        keys.push_back("1");
      } else {
        if (std::popcount(mask) == 1)
          keys.push_back("atom " + block[std::countr_zero(mask)]);
        if (std::popcount(full & ~mask) == 1)
          keys.push_back("neg " + block[std::countr_zero(full & ~mask)]);
        keys.push_back("sub " + std::to_string(bi) + " " + std::to_string(mask));
      }
      std::size_t first = node_for(keys[0]);
      for (std::size_t t = 1; t < keys.size(); ++t) uf.unite(node_for(keys[t]), first);
      subset_node[bi][mask] = first;
    }
  }

  // One canonical name per class, preferring bounds, then atom names, then
  // primed complements, then joined subsets in first-encounter order.
  auto subset_name = [&](std::size_t bi, unsigned mask) {
    const auto& block = blocks[bi];
    const unsigned full = (1u << block.size()) - 1;
    if (mask == 0) return std::string("0");
    if (mask == full) return std::string("1");
    if (std::popcount(mask) == 1) return block[std::countr_zero(mask)];
    if (std::popcount(full & ~mask) == 1)
      return block[std::countr_zero(full & ~mask)] + "'";
    std::string joined;
    for (std::size_t t = 0; t < block.size(); ++t)
      if (mask & (1u << t)) {
        if (!joined.empty()) joined += "+";
        joined += block[t];
      }
    return joined;
  };
  auto name_rank = [](const std::string& n) {
    if (n == "0" || n == "1") return 0;
    if (n.find('+') != std::string::npos) return 3;
    return n.back() == '\'' ? 2 : 1;
  };

  std::unordered_map<std::size_t, std::string> class_name;
  std::vector<std::string> elements{"0"};
  class_name[uf.find(node_for("0"))] = "0";
  class_name[uf.find(node_for("1"))] = "1";
  for (std::size_t bi = 0; bi < nb; ++bi) {
    const unsigned full = (1u << blocks[bi].size()) - 1;
    for (unsigned mask = 1; mask < full; ++mask) {
      std::size_t cls = uf.find(subset_node[bi][mask]);
      std::string candidate = subset_name(bi, mask);
      auto it = class_name.find(cls);
      if (it == class_name.end()) {
        class_name.emplace(cls, candidate);
        elements.push_back(candidate);
      } else if (name_rank(candidate) < name_rank(it->second)) {
        std::replace(elements.begin(), elements.end(), it->second, candidate);
        it->second = candidate;
      }
    }
  }
  elements.push_back("1");

  auto el_name = [&](std::size_t bi, unsigned mask) {
    return class_name.at(uf.find(subset_node[bi][mask]));
  };

  // Covers: within each block, S is covered by S plus one atom.
  std::set<std::pair<std::string, std::string>> cover_set;
  std::map<std::string, std::string> neg;
  for (std::size_t bi = 0; bi < nb; ++bi) {
    const std::size_t k = blocks[bi].size();
    const unsigned full = (1u << k) - 1;
    for (unsigned mask = 0; mask <= full; ++mask) {
      for (std::size_t t = 0; t < k; ++t)
        if (!(mask & (1u << t)))
          cover_set.emplace(el_name(bi, mask), el_name(bi, mask | (1u << t)));
      auto [it, fresh] = neg.emplace(el_name(bi, mask), el_name(bi, full & ~mask));
      if (!fresh && it->second != el_name(bi, full & ~mask))
        throw GenerationFailed("inconsistent complements for '" + it->first + "'");
    }
  }

  LatticeDocument raw;
  raw.name = doc.name;
  raw.elements = elements;
  raw.bottom = "0";
  raw.top = "1";
  raw.covers.assign(cover_set.begin(), cover_set.end());
  for (const std::string& e : elements) raw.ortho.emplace_back(e, neg.at(e));

  // Re-validation: the pasting must actually be an orthomodular lattice.
  try {
    OrthoLattice ol = realize(raw);
    if (auto cx = check_orthomodular(ol))
      throw GenerationFailed("orthomodular law fails at ('" + ol.name(cx->x) + "', '" +
                             ol.name(cx->y) + "')");
    return document_from(doc.name, ol);
  } catch (const GenerationFailed&) {
    throw;
  } catch (const Error& e) {
    throw GenerationFailed(e.what());
  }
}

}  // namespace oml
