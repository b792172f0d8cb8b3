#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "koethe/decide.hpp"
#include "koethe/errors.hpp"
#include "koethe/quiver.hpp"

namespace koethe {

using json = nlohmann::json;

// Label data rejected by the cyclic-validity check; a parse_error that
// remembers it was the label's fault.
struct invalid_label_error : parse_error {
  using parse_error::parse_error;
};

namespace detail {

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

inline std::vector<int> parse_int_list(const std::string& blob, int line) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(blob);
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw parse_error(line, "bad integer '" + item + "'");
    }
  }
  if (out.empty()) throw parse_error(line, "empty integer list");
  return out;
}

}  // namespace detail

// One statement per line: 'mode hereditary|general', 'vertex NAME',
// 'arrow SRC -> DST [seq a1,...,am | val d,e]'.  '#' starts a comment.
inline Quiver parse_text(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      const std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      lines.push_back(line);
    }
  }

  QuiverMode mode = QuiverMode::hereditary;
  bool mode_seen = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::vector<std::string> toks = detail::tokens_of(lines[i]);
    if (toks.empty() || toks[0] != "mode") continue;
    const int ln = static_cast<int>(i) + 1;
    if (mode_seen) throw parse_error(ln, "duplicate mode directive");
    if (toks.size() != 2) throw parse_error(ln, "mode needs one argument");
    if (toks[1] == "hereditary")
      mode = QuiverMode::hereditary;
    else if (toks[1] == "general")
      mode = QuiverMode::general;
    else
      throw parse_error(ln, "unknown mode '" + toks[1] + "'");
    mode_seen = true;
  }

  std::set<std::string> vertices;
  std::set<std::pair<std::string, std::string>> pairs;
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int ln = static_cast<int>(i) + 1;
    const std::vector<std::string> toks = detail::tokens_of(lines[i]);
    if (toks.empty() || toks[0] == "mode") continue;
    if (toks[0] == "vertex") {
      if (toks.size() != 2) throw parse_error(ln, "vertex needs one name");
      vertices.insert(toks[1]);
      continue;
    }
    if (toks[0] != "arrow")
      throw parse_error(ln, "unknown directive '" + toks[0] + "'");
    if (toks.size() < 4 || toks[2] != "->")
      throw parse_error(ln, "expected 'arrow SRC -> DST'");
    Arrow a{toks[1], toks[3], DualizationSequence::trivial()};
    if (toks.size() == 6 && toks[4] == "seq") {
      const std::vector<int> seq = detail::parse_int_list(toks[5], ln);
      if (seq.size() < 3 || !validate_cyclic(seq))
        throw invalid_label_error(ln, "not a cyclic dimension sequence");
      a.label.entries = seq;
    } else if (toks.size() == 6 && toks[4] == "val") {
      const std::vector<int> val = detail::parse_int_list(toks[5], ln);
      if (val.size() != 2 || val[0] < 1 || val[1] < 1)
        throw invalid_label_error(ln, "val needs two positive integers");
      a.label = DualizationSequence::from_valuation(val[0], val[1]);
    } else if (toks.size() != 4) {
      throw parse_error(ln, "trailing tokens after arrow statement");
    }
    std::pair<std::string, std::string> key{a.source, a.target};
    if (mode == QuiverMode::hereditary && key.second < key.first)
      std::swap(key.first, key.second);
    if (!pairs.insert(key).second)
      throw parse_error(ln, "duplicate arrow between '" + a.source +
                                "' and '" + a.target + "'");
    vertices.insert(a.source);
    vertices.insert(a.target);
    arrows.push_back(a);
  }
  try {
    return Quiver(mode, {vertices.begin(), vertices.end()}, arrows);
  } catch (const error& e) {
    throw parse_error(0, e.what());
  }
}

inline Quiver parse_json_quiver(const json& j) {
  QuiverMode mode = QuiverMode::hereditary;
  if (j.contains("mode")) {
    const std::string m = j.at("mode").get<std::string>();
    if (m == "general")
      mode = QuiverMode::general;
    else if (m != "hereditary")
      throw parse_error(0, "unknown mode '" + m + "'");
  }
  std::set<std::string> vertices;
  if (j.contains("vertices"))
    for (const auto& v : j.at("vertices"))
      vertices.insert(v.get<std::string>());
  std::vector<Arrow> arrows;
  if (j.contains("arrows"))
    for (const auto& ja : j.at("arrows")) {
      Arrow a{ja.at("from").get<std::string>(), ja.at("to").get<std::string>(),
              DualizationSequence::trivial()};
      if (ja.contains("seq")) {
        const std::vector<int> seq = ja.at("seq").get<std::vector<int>>();
        if (seq.size() < 3 || !validate_cyclic(seq))
          throw invalid_label_error(0, "not a cyclic dimension sequence");
        a.label.entries = seq;
      } else if (ja.contains("val")) {
        const std::vector<int> val = ja.at("val").get<std::vector<int>>();
        if (val.size() != 2 || val[0] < 1 || val[1] < 1)
          throw invalid_label_error(0, "val needs two positive integers");
        a.label = DualizationSequence::from_valuation(val[0], val[1]);
      }
      vertices.insert(a.source);
      vertices.insert(a.target);
      arrows.push_back(a);
    }
  try {
    return Quiver(mode, {vertices.begin(), vertices.end()}, arrows);
  } catch (const error& e) {
    throw parse_error(0, e.what());
  }
}

// Text or JSON, decided by the first non-space character.
inline Quiver parse(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_json_quiver(json::parse(text));
    break;
  }
  return parse_text(text);
}

inline std::string seq_to_string(const std::vector<int>& seq) {
  std::string s;
  for (std::size_t i = 0; i < seq.size(); ++i)
    s += (i ? "," : "") + std::to_string(seq[i]);
  return s;
}

inline std::string emit(const Quiver& q) {
  std::string out = "mode ";
  out += q.mode() == QuiverMode::hereditary ? "hereditary" : "general";
  out += "\n";
  for (const std::string& v : q.vertices()) out += "vertex " + v + "\n";
  for (const Arrow& a : q.arrows()) {
    out += "arrow " + a.source + " -> " + a.target;
    if (!a.label.finite)
      out += " val " + std::to_string(a.label.rdim()) + "," +
             std::to_string(a.label.ldim());
    else if (a.label.reading() != std::vector<int>{1, 1, 1})
      out += " seq " + seq_to_string(a.label.reading());
    out += "\n";
  }
  return out;
}

inline json emit_json(const Quiver& q) {
  json j;
  j["mode"] = q.mode() == QuiverMode::hereditary ? "hereditary" : "general";
  j["vertices"] = q.vertices();
  j["arrows"] = json::array();
  for (const Arrow& a : q.arrows()) {
    json ja{{"from", a.source}, {"to", a.target}};
    if (!a.label.finite)
      ja["val"] = std::vector<int>{a.label.rdim(), a.label.ldim()};
    else if (a.label.reading() != std::vector<int>{1, 1, 1})
      ja["seq"] = a.label.reading();
    j["arrows"].push_back(ja);
  }
  return j;
}

inline json reason_to_json(const FailureReason& r) {
  json j;
  j["kind"] = failure_kind_name(r.kind);
  j["detail"] = r.detail;
  if (!r.vertex.empty()) j["vertex"] = r.vertex;
  if (!r.arrow.empty()) j["arrow"] = r.arrow;
  if (!r.expected.empty()) j["expected"] = r.expected;
  if (!r.found.empty()) j["found"] = r.found;
  return j;
}

inline json verdict_to_json(const KoetheVerdict& v) {
  json j;
  j["components"] = json::array();
  for (const ComponentVerdict& c : v.components) {
    json jc;
    jc["vertices"] = c.vertices;
    jc["type"] = c.diagram.name();
    jc["repFinite"] = c.rep_finite;
    jc["koethe"] = c.koethe();
    jc["clause"] = c.clause ? json(c.clause) : json(nullptr);
    if (c.convergence) jc["t"] = *c.convergence;
    jc["reason"] = c.reason ? reason_to_json(*c.reason) : json(nullptr);
    j["components"].push_back(jc);
  }
  j["koethe"] = v.overall;
  return j;
}

}  // namespace koethe
