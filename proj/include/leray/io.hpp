#pragma once

#include <bit>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "leray/complex.hpp"
#include "leray/error.hpp"
#include "leray/flat_spectral.hpp"
#include "leray/helly.hpp"
#include "leray/homology.hpp"
#include "leray/leray.hpp"
#include "leray/matroid.hpp"
#include "leray/nerve.hpp"

namespace leray::io {

using nlohmann::json;

// Text formats are line oriented: `key: values`, `#` starts a comment.
//
//   complex:  vertices: 1 2 3 / facet: 1 2 / empty: true
//   matroid:  ground: 1 2 3 4 / uniform: 2 | blocks: [1 2][3 4] | independent: 1 3
//   family:   set: 1 2
//   instance: sections [X], [Y], [M] holding the blocks above; field: gf2

struct Line {
  int number = 0;
  std::string key;
  std::string value;
};

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline bool looks_like_json(const std::string& text) {
  const auto b = text.find_first_not_of(" \t\r\n");
  return b != std::string::npos && text[b] == '{';
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

inline std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    raw = trim(raw);
    if (raw.empty()) continue;
    if (raw.front() == '[' && raw.back() == ']' && raw.find(':') == std::string::npos) {
      out.push_back({number, raw, ""});
      continue;
    }
    const auto colon = raw.find(':');
    if (colon == std::string::npos)
      throw InputError("line " + std::to_string(number) + ": expected 'key: value'");
    out.push_back({number, trim(raw.substr(0, colon)), trim(raw.substr(colon + 1))});
  }
  return out;
}

inline std::vector<Vertex> parse_vertices(const std::string& s, int line) {
  std::vector<Vertex> v;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9)
      throw InputError("line " + std::to_string(line) + ": '" + tok + "' is not a vertex label");
    v.push_back(static_cast<Vertex>(std::stoul(tok)));
  }
  return v;
}

inline bool parse_bool(const std::string& s, int line) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw InputError("line " + std::to_string(line) + ": expected true or false");
}

// "[1 2][3 4]"
inline std::vector<VertexSet> parse_blocks(const std::string& s, int line) {
  std::vector<VertexSet> blocks;
  std::size_t pos = 0;
  while (true) {
    pos = s.find_first_not_of(" \t", pos);
    if (pos == std::string::npos) break;
    if (s[pos] != '[') throw InputError("line " + std::to_string(line) + ": expected '['");
    const auto close = s.find(']', pos);
    if (close == std::string::npos) throw InputError("line " + std::to_string(line) + ": missing ']'");
    blocks.emplace_back(parse_vertices(s.substr(pos + 1, close - pos - 1), line));
    pos = close + 1;
  }
  return blocks;
}

// --- complexes -------------------------------------------------------------

inline SimplicialComplex complex_from_lines(const std::vector<Line>& lines) {
  std::optional<VertexSet> ambient;
  std::vector<Simplex> facets;
  bool empty = false;
  for (const auto& l : lines) {
    if (l.key == "vertices") {
      ambient = VertexSet(parse_vertices(l.value, l.number));
    } else if (l.key == "facet") {
      facets.emplace_back(parse_vertices(l.value, l.number));
    } else if (l.key == "empty") {
      empty = parse_bool(l.value, l.number);
    } else {
      throw InputError("line " + std::to_string(l.number) + ": unknown directive '" + l.key + "'");
    }
  }
  if (!ambient) throw InputError("complex: missing 'vertices:' line");
  return SimplicialComplex::from_facets(*ambient, facets, empty);
}

inline SimplicialComplex complex_from_json(const json& j) {
  try {
    VertexSet ambient(j.at("vertices").get<std::vector<Vertex>>());
    std::vector<Simplex> facets;
    if (j.contains("facets"))
      for (const auto& f : j.at("facets")) facets.emplace_back(f.get<std::vector<Vertex>>());
    const bool empty = j.value("empty", false);
    return SimplicialComplex::from_facets(ambient, facets, empty);
  } catch (const json::exception& e) {
    throw InputError(std::string("complex JSON: ") + e.what());
  }
}

inline SimplicialComplex parse_complex(const std::string& text) {
  if (looks_like_json(text)) return complex_from_json(parse_json(text));
  return complex_from_lines(split_lines(text));
}

inline json to_json(const Simplex& s) { return json(s.vertices()); }

inline json complex_to_json(const SimplicialComplex& x) {
  json facets = json::array();
  if (!x.is_empty_complex())
    for (const auto& f : x.facets()) facets.push_back(to_json(f));
  return {{"vertices", to_json(x.ambient())}, {"facets", facets}, {"empty", x.is_empty_complex()}};
}

inline std::string join_vertices(const Simplex& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
  return out;
}

inline std::string complex_to_text(const SimplicialComplex& x) {
  std::string out = "vertices: " + join_vertices(x.ambient()) + "\n";
  if (x.is_empty_complex()) return out + "empty: true\n";
  for (const auto& f : x.facets()) out += "facet: " + join_vertices(f) + "\n";
  return out;
}

// --- matroids --------------------------------------------------------------

inline Matroid matroid_from_lines(const std::vector<Line>& lines) {
  std::optional<VertexSet> ground;
  std::optional<int> uniform;
  std::optional<std::vector<VertexSet>> blocks;
  std::vector<Simplex> independent;
  bool has_independent = false;
  for (const auto& l : lines) {
    if (l.key == "ground") {
      ground = VertexSet(parse_vertices(l.value, l.number));
    } else if (l.key == "uniform") {
      auto v = parse_vertices(l.value, l.number);
      if (v.size() != 1) throw InputError("line " + std::to_string(l.number) + ": expected one rank");
      uniform = static_cast<int>(v[0]);
    } else if (l.key == "blocks") {
      blocks = parse_blocks(l.value, l.number);
    } else if (l.key == "independent") {
      independent.emplace_back(parse_vertices(l.value, l.number));
      has_independent = true;
    } else {
      throw InputError("line " + std::to_string(l.number) + ": unknown directive '" + l.key + "'");
    }
  }
  if (!ground) throw InputError("matroid: missing 'ground:' line");
  const int kinds = (uniform ? 1 : 0) + (blocks ? 1 : 0) + (has_independent ? 1 : 0);
  if (kinds > 1) throw InputError("matroid: give exactly one of uniform, blocks, independent");
  if (uniform) {
    if (*uniform > static_cast<int>(ground->size()))
      throw InputError("matroid: uniform rank exceeds the ground set size");
    const int r = *uniform;
    return Matroid::from_predicate(*ground, [r](Mask a) { return std::popcount(a) <= r; });
  }
  if (blocks) {
    auto m = partition_matroid(*blocks);
    if (m.ground() != *ground) throw InputError("matroid: blocks must partition the ground set");
    return m;
  }
  return validate_matroid(SimplicialComplex::from_facets(*ground, independent, true));
}

inline Matroid matroid_from_json(const json& j) {
  try {
    VertexSet ground(j.at("ground").get<std::vector<Vertex>>());
    std::vector<Line> lines{{0, "ground", join_vertices(ground)}};
    if (j.contains("uniform")) lines.push_back({0, "uniform", std::to_string(j.at("uniform").get<int>())});
    if (j.contains("blocks")) {
      std::string b;
      for (const auto& blk : j.at("blocks")) b += "[" + join_vertices(VertexSet(blk.get<std::vector<Vertex>>())) + "]";
      lines.push_back({0, "blocks", b});
    }
    if (j.contains("independent"))
      for (const auto& f : j.at("independent"))
        lines.push_back({0, "independent", join_vertices(Simplex(f.get<std::vector<Vertex>>()))});
    return matroid_from_lines(lines);
  } catch (const json::exception& e) {
    throw InputError(std::string("matroid JSON: ") + e.what());
  }
}

inline Matroid parse_matroid(const std::string& text) {
  if (looks_like_json(text)) return matroid_from_json(parse_json(text));
  return matroid_from_lines(split_lines(text));
}

// Written as the bases; reading the output back gives the same matroid.
inline std::string matroid_to_text(const Matroid& m) {
  std::string out = "ground: " + join_vertices(m.ground()) + "\n";
  for (const auto& b : m.bases()) out += "independent: " + join_vertices(b) + "\n";
  return out;
}

inline json matroid_to_json(const Matroid& m) {
  json bases = json::array();
  for (const auto& b : m.bases()) bases.push_back(to_json(b));
  return {{"ground", to_json(m.ground())}, {"independent", bases}};
}

// --- set families ----------------------------------------------------------

inline SetFamily parse_set_family(const std::string& text) {
  std::vector<VertexSet> sets;
  if (looks_like_json(text)) {
    try {
      const json doc = parse_json(text);
      for (const auto& s : doc.at("sets")) sets.emplace_back(s.get<std::vector<Vertex>>());
    } catch (const json::exception& e) {
      throw InputError(std::string("set family JSON: ") + e.what());
    }
  } else {
    for (const auto& l : split_lines(text)) {
      if (l.key != "set")
        throw InputError("line " + std::to_string(l.number) + ": unknown directive '" + l.key + "'");
      sets.emplace_back(parse_vertices(l.value, l.number));
    }
  }
  if (sets.empty()) throw InputError("set family: no sets given");
  return SetFamily(sets);
}

// --- instances -------------------------------------------------------------

struct InstanceText {
  SimplicialComplex x, y;
  Matroid m;
  std::optional<FieldSpec> field;
};

inline InstanceText parse_instance(const std::string& text) {
  try {
    if (looks_like_json(text)) {
      const json j = parse_json(text);
      std::optional<FieldSpec> field;
      if (j.contains("field")) field = FieldSpec::parse(j.at("field").get<std::string>());
      return {complex_from_json(j.at("X")), complex_from_json(j.at("Y")), matroid_from_json(j.at("M")),
              field};
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("instance JSON: ") + e.what());
  }
  std::map<std::string, std::vector<Line>> sections;
  std::optional<FieldSpec> field;
  std::string current;
  for (const auto& l : split_lines(text)) {
    if (l.value.empty() && l.key.front() == '[') {
      current = l.key.substr(1, l.key.size() - 2);
      if (current != "X" && current != "Y" && current != "M")
        throw InputError("line " + std::to_string(l.number) + ": unknown section " + l.key);
      continue;
    }
    if (current.empty() && l.key == "field") {
      field = FieldSpec::parse(l.value);
      continue;
    }
    if (current.empty())
      throw InputError("line " + std::to_string(l.number) + ": directive outside of a section");
    sections[current].push_back(l);
  }
  for (const char* s : {"X", "Y", "M"})
    if (!sections.count(s)) throw InputError(std::string("instance: missing section [") + s + "]");
  return {complex_from_lines(sections["X"]), complex_from_lines(sections["Y"]),
          matroid_from_lines(sections["M"]), field};
}

inline std::string instance_to_text(const HellyInstance& inst) {
  return "field: " + inst.field().name() + "\n[X]\n" + complex_to_text(inst.x()) + "[Y]\n" +
         complex_to_text(inst.y()) + "[M]\n" + matroid_to_text(inst.matroid());
}

// --- results ---------------------------------------------------------------

inline json betti_to_json(const BettiVector& b) {
  json ranks = json::object();
  for (int i = -1; i <= b.top_degree(); ++i) ranks[std::to_string(i)] = b[i];
  if (b.is_zero()) ranks = json::object();
  return {{"field", b.field().name()}, {"betti", ranks}};
}

inline json leray_to_json(const LerayResult& r, const char* subset_key = "S") {
  json w = nullptr;
  if (r.witness) w = {{subset_key, to_json(r.witness->subset)}, {"degree", r.witness->degree}};
  return {{"L", r.value}, {"witness", w}};
}

inline json e1_to_json(const E1Page& page) {
  json entries = json::array();
  for (const auto& e : page.entries) {
    json flats = json::array();
    for (const auto& c : e.flats)
      flats.push_back({{"flat", to_json(c.flat)}, {"homology", c.homology}, {"lattice", c.lattice}});
    entries.push_back({{"p", e.p}, {"q", e.q}, {"dim", e.dim}, {"flats", flats}});
  }
  return {{"rank", page.rank}, {"entries", entries}};
}

inline json witness_to_json(const Witness& w, const char* method, const std::vector<std::string>& checks) {
  return {{"bound", w.bound},
          {"witness", to_json(w.sigma)},
          {"rank", w.rank_value},
          {"method", method},
          {"checks", checks}};
}

}  // namespace leray::io
