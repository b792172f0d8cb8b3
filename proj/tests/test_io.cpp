#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "koethe/cli.hpp"
#include "koethe/io.hpp"
#include "test_support.hpp"

using namespace koethe;

namespace {

int run(const std::vector<std::string>& args, const std::string& input,
        std::string* out_text = nullptr) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run_command(args, in, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

json run_json(const std::vector<std::string>& args, const std::string& input) {
  std::string text;
  REQUIRE(run(args, input, &text) == 0);
  return json::parse(text);
}

}  // namespace

TEST_CASE("text parsing") {
  const Quiver q = parse("arrow a -> b\n");
  CHECK(q.vertices() == std::vector<std::string>{"a", "b"});
  CHECK(q.arrows().size() == 1);
  CHECK(q.mode() == QuiverMode::hereditary);

  const Quiver h = parse("# comment line\narrow b -> c seq 3,1,2,2,1\n");
  CHECK(h.arrows()[0].label.reading() == std::vector<int>{3, 1, 2, 2, 1});

  const Quiver v = parse("arrow a -> b val 1,4\nvertex z\n");
  CHECK_FALSE(v.arrows()[0].label.finite);
  CHECK(v.has_vertex("z"));
  CHECK(classify(components(v)[0]) == DiagramType::unknown());

  const Quiver g = parse("mode general\narrow a -> a\n");
  CHECK(g.mode() == QuiverMode::general);

  SECTION("diagnostics carry line numbers") {
    try {
      parse("arrow a -> b\nfrobnicate c\n");
      FAIL("expected parse_error");
    } catch (const parse_error& e) {
      CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse("arrow a -> b seq 2,2,2,2\n"), invalid_label_error);
    CHECK_THROWS_AS(parse("arrow a -> b seq 1,x,1\n"), parse_error);
    CHECK_THROWS_AS(parse("arrow a -> b\narrow b -> a\n"), parse_error);
    CHECK_THROWS_AS(parse("mode hereditary\nmode general\n"), parse_error);
    CHECK_THROWS_AS(parse("mode sideways\n"), parse_error);
    CHECK_THROWS_AS(parse("arrow a ->\n"), parse_error);
    CHECK_THROWS_AS(parse("arrow a -> a\n"), parse_error);  // hereditary loop
  }
}

TEST_CASE("json parsing mirrors the text format") {
  const std::string jtext = R"({
    "mode": "hereditary",
    "vertices": ["a", "b", "c"],
    "arrows": [{"from": "a", "to": "b"},
               {"from": "b", "to": "c", "seq": [2, 1, 2, 1]}]
  })";
  const Quiver jq = parse(jtext);
  const Quiver tq =
      parse("vertex a\nvertex b\nvertex c\narrow a -> b\narrow b -> c seq 2,1,2,1\n");
  CHECK(jq == tq);
  CHECK(parse(emit_json(jq).dump()) == jq);
}

TEST_CASE("round trips") {
  std::mt19937 rng(67);
  const std::vector<std::vector<int>> labels{
      {1, 1, 1}, {2, 1, 2, 1}, {1, 2, 1, 2}, {3, 1, 2, 2, 1}, {1, 3, 1, 3, 1, 3}};
  for (int trial = 0; trial < 100; ++trial) {
    Quiver base = support::random_dag(
        rng, std::uniform_int_distribution<int>(1, 8)(rng));
    std::vector<Arrow> arrows;
    for (Arrow a : base.arrows()) {
      a.label.entries = labels[std::uniform_int_distribution<std::size_t>(
          0, labels.size() - 1)(rng)];
      arrows.push_back(a);
    }
    const Quiver q(base.mode(), base.vertices(), arrows);
    CHECK(parse(emit(q)) == q);
    CHECK(parse(emit_json(q).dump()) == q);
  }

  SECTION("general mode with loops") {
    Quiver g(QuiverMode::general, {"x", "y"},
             {Arrow{"x", "x"}, Arrow{"x", "y"}, Arrow{"y", "x"}});
    CHECK(parse(emit(g)) == g);
  }

  SECTION("separated output reparses and reclassifies") {
    Quiver g(QuiverMode::general, {"1", "2"},
             {Arrow{"1", "2"}, Arrow{"2", "1"}});
    const Quiver s = separated_quiver(g);
    const Quiver back = parse(emit(s));
    CHECK(back == s);
    REQUIRE(components(back).size() == 2);
    CHECK(classify(components(back)[0]) == classify(components(s)[0]));
  }
}

TEST_CASE("command line dispatch") {
  const std::string b2_yes = "arrow a -> b seq 2,1,2,1\n";
  const std::string b2_no = "arrow a -> b seq 1,2,1,2\n";
  const std::string e8 = [] {
    std::string t;
    for (int i = 1; i < 7; ++i)
      t += "arrow " + std::to_string(i) + " -> " + std::to_string(i + 1) + "\n";
    t += "arrow 3 -> 8\n";
    return t;
  }();

  SECTION("koethe verdicts and exit codes") {
    json j = run_json({"koethe", "-", "--json"}, b2_yes);
    CHECK(j["koethe"] == true);
    CHECK(j["components"][0]["clause"] == 2);
    CHECK(j["components"][0]["type"] == "B2");

    CHECK(run({"koethe", "-", "--expect", "yes"}, b2_yes) == 0);
    CHECK(run({"koethe", "-", "--expect", "no"}, b2_yes) == 2);
    CHECK(run({"koethe", "-", "--expect", "yes"}, e8) == 2);
    CHECK(run({"koethe", "-", "--expect", "no"}, e8) == 0);

    json jerr = run_json({"koethe", "-", "--json"}, b2_no);
    CHECK(jerr["koethe"] == false);
    CHECK(jerr["components"][0]["reason"]["kind"] == "DimensionSequenceMismatch");
  }

  SECTION("clause-3 verdicts report the meeting point") {
    const std::string two_chains =
        "arrow 1 -> 2\narrow 3 -> 2 seq 2,1,2,1\n";
    json j = run_json({"koethe", "-", "--json"}, two_chains);
    CHECK(j["components"][0]["clause"] == 3);
    CHECK(j["components"][0]["t"] == 2);
  }

  SECTION("radical-square-zero mode") {
    const std::string cyc = "mode general\narrow 1 -> 2\narrow 2 -> 1\n";
    json j = run_json({"koethe", "-", "--mode", "rsz", "--json"}, cyc);
    CHECK(j["koethe"] == true);
    CHECK(j["components"].size() == 2);
  }

  SECTION("classify, indecs, roots, reps, crosscheck") {
    json c = run_json({"classify", "-", "--json"}, e8);
    CHECK(c["components"][0]["type"] == "E8");
    CHECK(c["components"][0]["repFinite"] == true);

    const std::string h3_case1 = "arrow 1 -> 2\narrow 2 -> 3 seq 3,1,2,2,1\n";
    json i = run_json({"indecs", "-", "--json"}, h3_case1);
    bool deep = false;
    for (const json& e : i["components"][0]["indecomposables"])
      if (e["dim"] == json::array({2, 3, 6})) {
        deep = true;
        CHECK(e["t"] == 5);
      }
    CHECK(deep);

    json r = run_json({"roots", "-", "--json"}, "arrow 1 -> 2\narrow 2 -> 3\n");
    CHECK(r["components"][0]["count"] == 6);

    json reps = run_json({"reps", "-", "--json"}, "arrow 1 -> 2\n");
    CHECK(reps["components"][0]["count"] == 3);

    json cc = run_json({"crosscheck", "-", "--json"}, e8);
    CHECK(cc["agree"] == true);
    CHECK(cc["diagram"] == false);
    CHECK_FALSE(cc["witness"].is_null());
  }

  SECTION("reps reports the fat top of a failing star") {
    const std::string star_out =
        "arrow 2 -> 1\narrow 2 -> 3\narrow 2 -> 4\n";
    json j = run_json({"reps", "-", "--json"}, star_out);
    bool fat = false;
    for (const json& r : j["components"][0]["reps"])
      if (r["top"] == json::array({0, 2, 0, 0})) fat = true;
    CHECK(fat);
  }

  SECTION("separated output round-trips through the tool") {
    const std::string cyc = "mode general\narrow 1 -> 2\narrow 2 -> 1\n";
    std::string text;
    REQUIRE(run({"separated", "-"}, cyc, &text) == 0);
    const Quiver back = parse(text);
    CHECK(back.vertices().size() == 4);
    CHECK(back.mode() == QuiverMode::hereditary);
  }

  SECTION("dimseq subcommands") {
    json v = run_json({"dimseq", "validate", "2,1,2,1", "--json"}, "");
    CHECK(v["valid"] == true);
    CHECK(v["y"] == json::array({0, 1, 2, 1, 0}));

    json l = run_json({"dimseq", "list", "6", "--cap", "8", "--json"}, "");
    CHECK(l["classes"].size() == 3);

    json ind = run_json({"dimseq", "indecs", "1,2,1,2", "--json"}, "");
    CHECK(ind["vectors"][2] == json::array({2, 1}));
  }

  SECTION("usage and parse failures exit 1") {
    CHECK(run({"koethe", "-"}, "frobnicate\n") == 1);
    CHECK(run({"bogus", "-"}, "") == 1);
    CHECK(run({"koethe", "/nonexistent/file"}, "") == 1);
    CHECK(run({"koethe", "-", "--expect", "maybe"}, b2_yes) == 1);
    CHECK(run({"roots", "-"}, "arrow a -> b seq 3,1,2,2,1\n") == 1);
    CHECK(run({"dimseq", "list", "abc"}, "") == 1);
    CHECK(run({"indecs", "-", "--max-steps", "many"}, "arrow a -> b\n") == 1);
  }

  SECTION("output is deterministic") {
    std::string first, second;
    REQUIRE(run({"koethe", "-", "--json"}, e8, &first) == 0);
    REQUIRE(run({"koethe", "-", "--json"}, e8, &second) == 0);
    CHECK(first == second);
  }

  SECTION("--max-steps caps the tower") {
    CHECK(run({"indecs", "-", "--max-steps", "2"},
              "arrow 1 -> 2\narrow 2 -> 3\narrow 3 -> 4\n") == 1);
  }

  SECTION("text and json carry the same verdict") {
    std::string text;
    REQUIRE(run({"koethe", "-"}, b2_yes, &text) == 0);
    CHECK(text.find("koethe: yes") != std::string::npos);
    CHECK(text.find("clause 2") != std::string::npos);
  }
}
