#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "koethe/koethe.hpp"

namespace koethe::cli {

// Command dispatch shared by the tool and the test suite.  Exit codes:
// 0 success, 1 usage or input error, 2 verdict differs from --expect.

struct Options {
  std::string command;
  std::string file;        // "-" reads stdin
  std::string seq_arg;     // dimseq validate/indecs
  int m = 0;               // dimseq list
  bool json_output = false;
  int max_steps = 10000;
  int cap = 16;            // dimseq list entry cap
  std::string expect;      // "", "yes", "no"
  std::string mode = "hereditary";  // koethe: hereditary | rsz
};

namespace detail {

inline std::string render_vector(const json& dim) {
  std::string s = "(";
  for (std::size_t i = 0; i < dim.size(); ++i)
    s += (i ? "," : "") + dim[i].dump();
  return s + ")";
}

inline json component_header(const Quiver& comp) {
  return json{{"vertices", comp.vertices()}};
}

inline std::vector<int> parse_int_list_cli(const std::string& blob) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(blob);
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw error("bad integer '" + item + "' in sequence");
    }
  }
  if (out.empty()) throw error("empty sequence");
  return out;
}

}  // namespace detail

inline Options parse_args(const std::vector<std::string>& args) {
  Options o;
  if (args.empty()) throw error("no command given");
  o.command = args[0];
  std::vector<std::string> positional;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& a = args[i];
    auto next = [&]() -> const std::string& {
      if (i + 1 >= args.size()) throw error("flag " + a + " needs a value");
      return args[++i];
    };
    if (a == "--json")
      o.json_output = true;
    else if (a == "--max-steps")
      o.max_steps = std::stoi(next());
    else if (a == "--cap")
      o.cap = std::stoi(next());
    else if (a == "--expect") {
      o.expect = next();
      if (o.expect != "yes" && o.expect != "no")
        throw error("--expect takes yes or no");
    } else if (a == "--mode") {
      o.mode = next();
      if (o.mode != "hereditary" && o.mode != "rsz")
        throw error("--mode takes hereditary or rsz");
    } else if (!a.empty() && a[0] == '-' && a != "-") {
      throw error("unknown flag " + a);
    } else {
      positional.push_back(a);
    }
  }

  if (o.command == "dimseq") {
    if (positional.empty()) throw error("dimseq needs a subcommand");
    o.seq_arg = positional[0];  // validate | list | indecs
    if (o.seq_arg == "list") {
      if (positional.size() < 2) throw error("dimseq list needs a length");
      o.m = std::stoi(positional[1]);
    } else {
      if (positional.size() < 2)
        throw error("dimseq " + o.seq_arg + " needs a sequence");
      o.file = positional[1];  // reused as the sequence text
    }
  } else {
    if (positional.empty()) throw error("missing input file (use - for stdin)");
    o.file = positional[0];
  }
  return o;
}

inline Quiver load_quiver(const Options& o, std::istream& in) {
  std::string text;
  if (o.file == "-") {
    std::ostringstream all;
    all << in.rdbuf();
    text = all.str();
  } else {
    std::ifstream f(o.file);
    if (!f) throw error("cannot open '" + o.file + "'");
    std::ostringstream all;
    all << f.rdbuf();
    text = all.str();
  }
  return parse(text);
}

inline json run_classify(const Quiver& q) {
  json j{{"components", json::array()}};
  for (const Quiver& comp : components(q)) {
    json jc = detail::component_header(comp);
    const DiagramType t = classify(comp);
    jc["type"] = t.name();
    jc["repFinite"] = t.representation_finite();
    j["components"].push_back(jc);
  }
  return j;
}

inline json run_indecs(const Quiver& q, int cap) {
  json j{{"components", json::array()}};
  for (const Quiver& comp : components(q)) {
    json jc = detail::component_header(comp);
    jc["indecomposables"] = json::array();
    for (const EnumeratedIndec& e : enumerate_indecomposables(comp, cap))
      jc["indecomposables"].push_back(
          json{{"dim", e.vector}, {"t", e.t}, {"sink", e.sink}});
    jc["count"] = jc["indecomposables"].size();
    j["components"].push_back(jc);
  }
  return j;
}

inline json run_roots(const Quiver& q, int cap) {
  json j{{"components", json::array()}};
  for (const Quiver& comp : components(q)) {
    json jc = detail::component_header(comp);
    jc["roots"] = json::array();
    for (const DimVector& r : positive_roots(comp, cap))
      jc["roots"].push_back(r);
    jc["count"] = jc["roots"].size();
    j["components"].push_back(jc);
  }
  return j;
}

inline json run_reps(const Quiver& q, int cap) {
  json j{{"components", json::array()}};
  for (const Quiver& comp : components(q)) {
    json jc = detail::component_header(comp);
    jc["reps"] = json::array();
    for (const MatrixRep& r : enumerate_indec_reps(comp, cap))
      jc["reps"].push_back(json{{"dim", r.dim_vector()}, {"top", top_dims(r)}});
    jc["count"] = jc["reps"].size();
    j["components"].push_back(jc);
  }
  return j;
}

inline json run_crosscheck(const Quiver& q, int cap) {
  const CrossCheckReport r = cross_validate(q, cap);
  json j{{"diagram", r.diagram_verdict},
         {"bruteForce", r.brute_force_verdict},
         {"agree", r.agree},
         {"witness", nullptr}};
  if (r.witness)
    j["witness"] = json{{"dim", r.witness->rep.dim_vector()},
                        {"vertex", r.witness->vertex},
                        {"multiplicity", r.witness->multiplicity}};
  return j;
}

inline void render_text(const std::string& command, const json& j,
                        std::ostream& out) {
  if (j.contains("components")) {
    int idx = 0;
    for (const json& jc : j["components"]) {
      out << "component " << ++idx << ":";
      for (const json& v : jc["vertices"]) out << " " << v.get<std::string>();
      out << "\n";
      if (jc.contains("type"))
        out << "  type: " << jc["type"].get<std::string>()
            << "  representation-finite: "
            << (jc["repFinite"].get<bool>() ? "yes" : "no") << "\n";
      if (jc.contains("koethe")) {
        out << "  koethe: " << (jc["koethe"].get<bool>() ? "yes" : "no");
        if (!jc["clause"].is_null()) {
          out << " (clause " << jc["clause"].get<int>();
          if (jc.contains("t")) out << ", t=" << jc["t"].get<int>();
          out << ")";
        }
        if (!jc["reason"].is_null()) {
          const json& r = jc["reason"];
          out << " [" << r["kind"].get<std::string>();
          if (r.contains("detail")) out << " " << r["detail"].get<std::string>();
          if (r.contains("vertex")) out << " at " << r["vertex"].get<std::string>();
          if (r.contains("arrow")) out << " on " << r["arrow"].get<std::string>();
          if (r.contains("found"))
            out << " found " << detail::render_vector(r["found"]);
          out << "]";
        }
        out << "\n";
      }
      if (jc.contains("indecomposables")) {
        out << "  indecomposables: " << jc["count"].get<std::size_t>() << "\n";
        for (const json& e : jc["indecomposables"])
          out << "  " << detail::render_vector(e["dim"]) << "  t="
              << e["t"].get<int>() << " sink=" << e["sink"].get<std::string>()
              << "\n";
      }
      if (jc.contains("roots")) {
        out << "  positive roots: " << jc["count"].get<std::size_t>() << "\n";
        for (const json& r : jc["roots"])
          out << "  " << detail::render_vector(r) << "\n";
      }
      if (jc.contains("reps")) {
        out << "  matrix representations: " << jc["count"].get<std::size_t>()
            << "\n";
        for (const json& r : jc["reps"])
          out << "  dim=" << detail::render_vector(r["dim"])
              << " top=" << detail::render_vector(r["top"]) << "\n";
      }
    }
    if (j.contains("koethe"))
      out << "koethe: " << (j["koethe"].get<bool>() ? "yes" : "no") << "\n";
    return;
  }
  if (command == "crosscheck") {
    out << "diagram verdict: " << (j["diagram"].get<bool>() ? "yes" : "no")
        << "\n"
        << "brute-force verdict: "
        << (j["bruteForce"].get<bool>() ? "yes" : "no") << "\n"
        << "agreement: " << (j["agree"].get<bool>() ? "yes" : "no") << "\n";
    if (!j["witness"].is_null())
      out << "witness: dim=" << detail::render_vector(j["witness"]["dim"])
          << " top multiplicity " << j["witness"]["multiplicity"].get<long long>()
          << " at " << j["witness"]["vertex"].get<std::string>() << "\n";
    return;
  }
  if (command == "dimseq") {
    if (j.contains("classes")) {
      out << j["classes"].size() << " classes of length " << j["m"].get<int>()
          << " (entries <= " << j["cap"].get<int>() << ")\n";
      for (const json& c : j["classes"])
        out << detail::render_vector(c) << "\n";
    } else if (j.contains("valid")) {
      out << "seq " << detail::render_vector(j["seq"]) << ": "
          << (j["valid"].get<bool>() ? "valid" : "invalid") << "\n"
          << "x = " << detail::render_vector(j["x"]) << "\n"
          << "y = " << detail::render_vector(j["y"]) << "\n";
    } else {
      for (const json& p : j["vectors"]) out << detail::render_vector(p) << " ";
      out << "\n";
    }
    return;
  }
  out << j.dump(2) << "\n";
}

inline int run_command(const std::vector<std::string>& args, std::istream& in,
                       std::ostream& out, std::ostream& err) {
  try {
    const Options o = parse_args(args);
    json j;
    if (o.command == "dimseq") {
      if (o.seq_arg == "list") {
        j = json{{"m", o.m}, {"cap", o.cap}, {"classes", json::array()}};
        for (const DimSeq& s : generate(o.m, o.cap)) j["classes"].push_back(s);
      } else if (o.seq_arg == "validate") {
        const std::vector<int> seq = detail::parse_int_list_cli(o.file);
        const DimSeqWitness w = validate(seq);
        j = json{{"seq", seq}, {"valid", w.valid}, {"x", w.x}, {"y", w.y}};
        j["cyclic"] = validate_cyclic(seq);
      } else if (o.seq_arg == "indecs") {
        const std::vector<int> seq = detail::parse_int_list_cli(o.file);
        j = json{{"seq", seq}, {"vectors", json::array()}};
        for (const Rank2Pair& p : indec_dimvectors(seq))
          j["vectors"].push_back(std::vector<long long>{p.first, p.second});
      } else {
        throw error("unknown dimseq subcommand '" + o.seq_arg + "'");
      }
    } else if (o.command == "classify") {
      j = run_classify(load_quiver(o, in));
    } else if (o.command == "indecs") {
      j = run_indecs(load_quiver(o, in), o.max_steps);
    } else if (o.command == "roots") {
      j = run_roots(load_quiver(o, in), o.max_steps);
    } else if (o.command == "reps") {
      j = run_reps(load_quiver(o, in), o.max_steps);
    } else if (o.command == "crosscheck") {
      j = run_crosscheck(load_quiver(o, in), o.max_steps);
    } else if (o.command == "separated") {
      const Quiver s = separated_quiver(load_quiver(o, in));
      if (o.json_output)
        out << emit_json(s).dump(2) << "\n";
      else
        out << emit(s);
      return 0;
    } else if (o.command == "koethe") {
      const Quiver q = load_quiver(o, in);
      const KoetheVerdict v = o.mode == "rsz" ? decide_radical_square_zero(q)
                                              : decide_hereditary(q);
      j = verdict_to_json(v);
      if (o.json_output)
        out << j.dump(2) << "\n";
      else
        render_text(o.command, j, out);
      if (!o.expect.empty() && (o.expect == "yes") != v.overall) {
        err << "expected " << o.expect << ", got "
            << (v.overall ? "yes" : "no") << "\n";
        return 2;
      }
      return 0;
    } else {
      throw error("unknown command '" + o.command + "'");
    }
    if (o.json_output)
      out << j.dump(2) << "\n";
    else
      render_text(o.command, j, out);
    return 0;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace koethe::cli
