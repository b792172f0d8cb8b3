// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "koethe/koethe.hpp"
#include "test_support.hpp"

using namespace koethe;
using support::vec;

namespace {

struct Failure {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw Failure{message};
}

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string verdict = "PASS", detail;
  try {
    body();
  } catch (const Failure& f) {
    verdict = "FAIL";
    detail = f.message;
    ++failures;
  } catch (const std::exception& e) {
    verdict = "FAIL";
    detail = e.what();
    ++failures;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::cout << verdict << "  criterion " << number << ": " << title << " ("
            << ms << " ms)";
  if (!detail.empty()) std::cout << "  -- " << detail;
  std::cout << "\n";
}

std::set<DimVector> vector_set(const std::vector<EnumeratedIndec>& es) {
  std::set<DimVector> out;
  for (const EnumeratedIndec& e : es) out.insert(e.vector);
  return out;
}

std::set<DimVector> root_set(const Quiver& q) {
  const auto r = positive_roots(q);
  return {r.begin(), r.end()};
}

std::set<DimVector> closed_set(ClosedFormType t, int n) {
  const auto r = closed_form_roots(t, n);
  return {r.begin(), r.end()};
}

std::multiset<long long> coords(const DimVector& v) {
  return {v.begin(), v.end()};
}

bool contains_coords(const std::set<DimVector>& roots,
                     std::multiset<long long> want) {
  for (const DimVector& r : roots)
    if (coords(r) == want) return true;
  return false;
}

void golden_chain(unsigned mask, int t, const std::string& seed,
                  const std::vector<DimVector>& expected) {
  Quiver q = support::h3(mask);
  CoxeterTower tower(q);
  require(tower.state(t).quiver.is_sink(seed),
          "chain seed is not a sink at its stage");
  const auto chain = inverse_reflection_chain(tower, t, unit_vector(q, seed));
  require(chain == expected, "tower chain deviates from the printed values");
}

void criterion1() {
  golden_chain(0u, 5, "3",
               {vec({0, 0, 1}), vec({0, 2, 1}), vec({0, 2, 3}), vec({2, 2, 3}),
                vec({2, 3, 3}), vec({2, 3, 6})});
  golden_chain(2u, 4, "3",
               {vec({0, 0, 1}), vec({0, 2, 1}), vec({0, 2, 1}), vec({2, 2, 1}),
                vec({2, 3, 1})});
  golden_chain(1u, 5, "2",
               {vec({0, 1, 0}), vec({0, 1, 2}), vec({1, 1, 2}), vec({1, 2, 2}),
                vec({1, 2, 4}), vec({1, 2, 4})});
  golden_chain(3u, 7, "2",
               {vec({0, 1, 0}), vec({1, 1, 0}), vec({1, 1, 2}), vec({1, 4, 2}),
                vec({3, 4, 2}), vec({3, 4, 2}), vec({3, 5, 2}),
                vec({2, 5, 2})});
}

void criterion2() {
  const Quiver yes = support::single_arrow({2, 1, 2, 1});
  require(decide_hereditary(yes).overall, "(2,1,2,1) must decide yes");
  require(vector_set(enumerate_indecomposables(yes)) ==
              std::set<DimVector>{vec({0, 1}), vec({1, 2}), vec({1, 1}),
                                  vec({1, 0})},
          "(2,1,2,1) indecomposable vectors are wrong");

  const Quiver no = support::single_arrow({1, 2, 1, 2});
  require(!decide_hereditary(no).overall, "(1,2,1,2) must decide no");
  require(vector_set(enumerate_indecomposables(no)).count(vec({2, 1})) == 1,
          "(1,2,1,2) must produce the vector (2,1)");
}

void criterion3() {
  require(generate(3, 16) == std::vector<DimSeq>{{1, 1, 1}},
          "length-3 census must be exactly (1,1,1)");
  require(generate(4, 16).size() == 1, "length-4 census must have one class");
  require(generate(5, 16) ==
              std::vector<DimSeq>{canonical_class({3, 1, 2, 2, 1})},
          "length-5 census must be the class of (3,1,2,2,1)");
  const std::vector<DimSeq> six = generate(6, 16);
  const std::vector<DimSeq> expected{canonical_class({1, 2, 2, 2, 1, 4}),
                                     canonical_class({1, 2, 3, 1, 2, 3}),
                                     canonical_class({1, 3, 1, 3, 1, 3})};
  require(six == expected, "length-6 census must be the three known classes");
}

void criterion4() {
  for (int n = 1; n <= 8; ++n) {
    require(root_set(support::a_n(n)) == closed_set(ClosedFormType::A, n),
            "A" + std::to_string(n) + " orbit differs from the closed form");
    require(static_cast<int>(root_set(support::a_n(n)).size()) ==
                n * (n + 1) / 2,
            "A root count");
  }
  for (int n = 2; n <= 6; ++n) {
    require(root_set(support::b_n(n)) == closed_set(ClosedFormType::B, n),
            "B" + std::to_string(n) + " orbit differs from the closed form");
    require(root_set(support::c_n(n)) == closed_set(ClosedFormType::C, n),
            "C" + std::to_string(n) + " orbit differs from the closed form");
    require(static_cast<int>(root_set(support::b_n(n)).size()) == n * n,
            "B root count");
    require(static_cast<int>(root_set(support::c_n(n)).size()) == n * n,
            "C root count");
  }
  for (int n = 4; n <= 7; ++n) {
    require(root_set(support::d_n(n)) == closed_set(ClosedFormType::D, n),
            "D" + std::to_string(n) + " orbit differs from the closed form");
    require(static_cast<int>(root_set(support::d_n(n)).size()) == n * (n - 1),
            "D root count");
  }

  const struct {
    Quiver q;
    std::size_t count;
  } exceptional[] = {{support::e_n(6), 36}, {support::e_n(7), 63},
                     {support::e_n(8), 120}, {support::f4(), 24},
                     {support::g2(), 6}};
  for (const auto& [q, count] : exceptional) {
    require(root_set(q).size() == count, "exceptional orbit count");
    require(enumerate_indecomposables(q).size() == count,
            "reflection enumeration count differs from the orbit count");
  }

  require(contains_coords(root_set(support::d_n(4)), {1, 2, 1, 1}),
          "D4 highest root");
  require(root_set(support::d_n(5)).count(vec({1, 2, 2, 1, 1})) == 1,
          "D5 highest root pattern (...,2,...,1,1)");
  require(contains_coords(root_set(support::e_n(6)), {1, 2, 3, 2, 1, 2}),
          "E6 highest root coordinates");
  require(contains_coords(root_set(support::e_n(7)), {2, 3, 4, 3, 2, 1, 2}),
          "E7 highest root coordinates");
  require(contains_coords(root_set(support::e_n(8)), {2, 4, 6, 5, 4, 3, 2, 3}),
          "E8 highest root coordinates");
  require(root_set(support::f4()).count(vec({2, 3, 4, 2})) == 1,
          "F4 highest root coordinates");
}

void criterion5() {
  const struct {
    const char* name;
    std::vector<support::EdgeSpec> edges;
  } diagrams[] = {{"A4", support::path_edges(4)}, {"D4", support::d_edges(4)},
                  {"D5", support::d_edges(5)},    {"E6", support::e_edges(6)},
                  {"E7", support::e_edges(7)},    {"E8", support::e_edges(8)}};
  for (const auto& d : diagrams) {
    const unsigned total = 1u << d.edges.size();
    for (unsigned mask = 0; mask < total; ++mask) {
      const Quiver q = support::oriented(d.edges, mask);
      const bool diagram_says = decide_hereditary(q).overall;
      const bool brute_says = !find_top_violation(q).has_value();
      require(diagram_says == brute_says,
              std::string(d.name) + " mask " + std::to_string(mask) +
                  ": diagram says " + (diagram_says ? "yes" : "no") +
                  ", brute force disagrees");
    }
  }
}

void criterion6() {
  for (unsigned mask = 0; mask < 128u; ++mask) {
    const KoetheVerdict v = decide_hereditary(support::e_n(8, mask));
    require(!v.overall &&
                v.components[0].reason->kind == FailureKind::ForbiddenType,
            "E8 orientation must fail as a forbidden type");
  }
  for (unsigned mask = 0; mask < 8u; ++mask)
    for (const std::vector<int>& s :
         {std::vector<int>{2, 1, 2, 1}, std::vector<int>{1, 2, 1, 2}}) {
      const KoetheVerdict v = decide_hereditary(support::f4(mask, s));
      require(!v.overall &&
                  v.components[0].reason->kind == FailureKind::ForbiddenType,
              "F4 orientation must fail as a forbidden type");
    }
  for (unsigned mask = 0; mask < 4u; ++mask) {
    const KoetheVerdict v = decide_hereditary(support::h3(mask));
    require(!v.overall &&
                v.components[0].reason->kind == FailureKind::ForbiddenType,
            "H3 orientation must fail as a forbidden type");
  }
  for (unsigned mask = 0; mask < 8u; ++mask) {
    const KoetheVerdict v = decide_hereditary(support::h4(mask));
    require(!v.overall &&
                v.components[0].reason->kind == FailureKind::ForbiddenType,
            "H4 orientation must fail as a forbidden type");
  }
  for (int n = 1; n <= 5; ++n)
    for (unsigned mask = 0; mask < (n == 1 ? 1u : (1u << (n - 1))); ++mask)
      require(decide_hereditary(support::a_n(n, mask)).overall,
              "A" + std::to_string(n) + " must pass with any orientation");
}

void criterion7() {
  Quiver loop(QuiverMode::general, {"1"}, {Arrow{"1", "1"}});
  require(decide_radical_square_zero(loop).overall,
          "one-loop species must decide yes");

  Quiver cyc(QuiverMode::general, {"1", "2"},
             {Arrow{"1", "2"}, Arrow{"2", "1"}});
  require(decide_radical_square_zero(cyc).overall,
          "two-cycle species must decide yes");

  Quiver star(QuiverMode::general, {"1", "2", "3", "4", "5"},
              {Arrow{"1", "2"}, Arrow{"1", "3"}, Arrow{"1", "4"},
               Arrow{"5", "1"}});
  const KoetheVerdict v = decide_radical_square_zero(star);
  require(!v.overall, "three-out star species must decide no");
  bool saw = false;
  for (const ComponentVerdict& c : v.components)
    if (c.reason && c.reason->kind == FailureKind::ConditionViolated &&
        c.reason->detail == "Dn-a")
      saw = true;
  require(saw, "three-out star must fail the branch-vertex condition");
}

void criterion8() {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> coord(-9, 9);

  // reflection involution, 10^4 vectors spread over catalogue diagrams
  const std::vector<Quiver> table{support::a_n(5, 6),  support::b_n(4, 3),
                                  support::c_n(4, 9),  support::d_n(6, 21),
                                  support::e_n(7, 40), support::f4(2),
                                  support::g2()};
  int reflected = 0;
  while (reflected < 10000)
    for (const Quiver& q : table) {
      SpeciesState st{q, 0};
      DimVector x(q.size());
      for (long long& c : x) c = coord(rng);
      for (const std::string& k : sinks(q)) {
        require(reflect_vector_at_sink(st, k, reflect_vector_at_sink(st, k, x)) ==
                    x,
                "sink reflection is not an involution");
        ++reflected;
      }
    }

  // bilinear-form invariance under every simple reflection
  for (const Quiver& q : table) {
    const auto f = symmetrizer(q);
    for (int trial = 0; trial < 50; ++trial) {
      DimVector x(q.size()), y(q.size());
      for (long long& c : x) c = coord(rng);
      for (long long& c : y) c = coord(rng);
      for (const std::string& k : q.vertices())
        require(bilinear(q, f, weyl_reflect(q, f, k, x),
                         weyl_reflect(q, f, k, y)) == bilinear(q, f, x, y),
                "bilinear form is not reflection invariant");
    }
  }

  // radical smallness and one-vector enlargements
  for (const Quiver& q : {support::d_n(4, 6), support::a_n(4, 5)}) {
    const std::vector<MatrixRep> reps = enumerate_indec_reps(q);
    for (const MatrixRep& r : reps)
      require(is_small_subrep(r, radical(r)), "radical must be small");
    for (int trial = 0; trial < 100; ++trial) {
      const MatrixRep& r =
          reps[std::uniform_int_distribution<std::size_t>(0, reps.size() - 1)(rng)];
      const int v = std::uniform_int_distribution<int>(0, q.size() - 1)(rng);
      const int dv = r.dims[static_cast<std::size_t>(v)];
      if (dv == 0) continue;
      QMatrix extra(dv, 1);
      for (int i = 0; i < dv; ++i)
        extra.at(i, 0) = std::uniform_int_distribution<int>(-2, 2)(rng);
      SubRep rad = radical(r);
      const bool inside =
          columns_contained(extra, rad.bases[static_cast<std::size_t>(v)]);
      SubRep enlarged = rad;
      enlarged.bases[static_cast<std::size_t>(v)] =
          hstack(rad.bases[static_cast<std::size_t>(v)], extra);
      if (rank(enlarged.bases[static_cast<std::size_t>(v)]) !=
          enlarged.bases[static_cast<std::size_t>(v)].cols)
        continue;
      require(is_small_subrep(r, enlarged) == inside,
              "one-vector enlargement smallness mismatch");
    }
  }

  // every indecomposable is conical on every arm reaching it
  const struct {
    Quiver q;
    std::vector<std::vector<std::string>> arms;
  } conical_cases[] = {
      {support::a_n(5, 10), {{"1", "2", "3", "4", "5"}, {"5", "4", "3", "2", "1"}}},
      {support::d_n(6, 5), {{"1", "2", "3", "4"}, {"5", "4"}, {"6", "4"}}},
      {support::e_n(6, 3), {{"1", "2", "3"}, {"5", "4", "3"}, {"6", "3"}}},
      {support::e_n(7, 31), {{"1", "2", "3"}, {"6", "5", "4", "3"}, {"7", "3"}}},
  };
  for (const auto& c : conical_cases)
    for (const MatrixRep& r : enumerate_indec_reps(c.q))
      for (const auto& arm : c.arms) {
        if (r.dims[static_cast<std::size_t>(r.quiver.index(arm.back()))] == 0)
          continue;
        require(is_conical_on_arm(r, arm),
                "indecomposable is not conical on an arm");
      }

  // parse/emit round trip on random quivers
  const std::vector<std::vector<int>> labels{
      {1, 1, 1}, {2, 1, 2, 1}, {1, 2, 1, 2}, {3, 1, 2, 2, 1}};
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
    require(parse(emit(q)) == q, "parse/emit round trip failed");
  }
}

}  // namespace

int main() {
  criterion(1, "golden reflection chains", criterion1);
  criterion(2, "rank-2 reproduction", criterion2);
  criterion(3, "dimension-sequence census", criterion3);
  criterion(4, "root counts and oracle equality", criterion4);
  criterion(5, "diagram decision vs brute force on every orientation",
            criterion5);
  criterion(6, "forbidden and permitted types", criterion6);
  criterion(7, "radical-square-zero decisions", criterion7);
  criterion(8, "invariant suites", criterion8);
  if (failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria failed\n";
  return 1;
}
