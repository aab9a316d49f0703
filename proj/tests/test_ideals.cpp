#include <catch_amalgamated.hpp>

#include "linstrand/ideal.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace linstrand;

namespace {

SquarefreeIdeal ideal_of(const Clutter& c) { return SquarefreeIdeal::edge_ideal(c); }

}  // namespace

TEST_CASE("Alexander dual is an involution") {
  for (const auto& name : testing::fixture_names()) {
    const SquarefreeIdeal i = ideal_of(testing::fixture(name));
    INFO(name);
    const SquarefreeIdeal dual = alexander_dual(i);
    CHECK(oracle::sorted(dual.generators()) == oracle::minimal_covers(i.generators(), i.num_vertices()));
    CHECK(oracle::sorted(alexander_dual(dual).generators()) == oracle::sorted(i.generators()));
  }
  CHECK_THROWS_AS(alexander_dual(SquarefreeIdeal(VertexTable::unpartitioned({"x"}), {})), InvalidInput);
}

TEST_CASE("final example dual matches the listed generators") {
  const Clutter c = testing::fixture("final_example");
  const SquarefreeIdeal dual = alexander_dual(ideal_of(c));
  std::vector<std::string> got;
  for (VertexSet g : dual.generators()) got.push_back(c.table().format(g));
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"a1a2", "a2b1c1d1", "a2b2c2d2", "b1b2", "c1c2", "d1d2"});
}

TEST_CASE("membership and degrees") {
  const SquarefreeIdeal i = ideal_of(testing::fixture("complete_2_2"));
  CHECK(i.min_degree() == 2);
  CHECK(i.generated_in_single_degree());
  CHECK(i.contains(VertexSet::of({0, 2, 3})));
  CHECK_FALSE(i.contains(VertexSet::of({0, 1})));
}

TEST_CASE("the parts form an admissible sequence") {
  for (const auto& name : testing::fixture_names()) {
    const Clutter c = testing::fixture(name);
    INFO(name);
    CHECK(check_admissible(ideal_of(c), {c.table().part_sets()}));
  }
}

TEST_CASE("inadmissible sequences are diagnosed") {
  const Clutter c = testing::fixture("complete_2_2");
  const SquarefreeIdeal i = ideal_of(c);
  const auto overlapping = check_admissible(i, {{VertexSet::of({0, 1}), VertexSet::of({1, 2})}});
  CHECK_FALSE(overlapping);
  CHECK_THAT(overlapping.diagnostic, Catch::Matchers::ContainsSubstring("not disjoint"));

  const auto short_seq = check_admissible(i, {{VertexSet::of({0, 1})}});
  CHECK_THAT(short_seq.diagnostic, Catch::Matchers::ContainsSubstring("differs"));

  const auto not_cover = check_admissible(i, {{VertexSet::of({0}), VertexSet::of({2, 3})}});
  CHECK_THAT(not_cover.diagnostic, Catch::Matchers::ContainsSubstring("misses generator"));

  CHECK_THROWS_AS(reduce_to_w(i, {{VertexSet::of({0})}}), InvalidInput);
}

TEST_CASE("colon by the parts gives the linked cover ideal") {
  for (const auto& name : testing::fixture_names()) {
    const Clutter c = testing::fixture(name);
    INFO(name);
    const auto parts = c.table().part_sets();
    const auto covers = minimal_vertex_covers(c);
    // A complete clutter links to the zero ideal, whose colon is the unit ideal.
    const SquarefreeIdeal link = linkage_ideal(c);
    const auto linked = link.is_zero() ? std::vector<VertexSet>{VertexSet{}} : alexander_dual(link).generators();
    CHECK(oracle::sorted(colon_by_exhaustion(parts, covers, c.vertices())) == oracle::sorted(linked));
    CHECK(oracle::colon(parts, covers) == oracle::sorted(linked));
  }
}

TEST_CASE("colon of a Ferrers graph") {
  // Edges a1b1 a1b2 a2b1; the complement is the single edge a2b2, whose
  // cover ideal is (a2, b2).
  const Clutter c = ferrers_clutter({2, 1});
  const auto got = colon_by_exhaustion(c.table().part_sets(), minimal_vertex_covers(c), c.vertices());
  CHECK(oracle::sorted(got) == oracle::sorted({VertexSet::of({1}), VertexSet::of({3})}));
}

TEST_CASE("colon reports the unit ideal as the empty generator") {
  const auto parts = std::vector<VertexSet>{VertexSet::of({0, 1})};
  const auto got = colon_by_exhaustion(parts, {VertexSet::of({0, 1})}, VertexSet::of({0, 1}));
  CHECK(got == std::vector<VertexSet>{VertexSet{}});
}

TEST_CASE("admissible sequences are found for unpartitioned ideals") {
  const Clutter path = testing::fixture("unpartitioned_path");
  const SquarefreeIdeal i(path.table(), path.edges());
  const auto seq = find_admissible_sequence(i);
  REQUIRE(seq);
  CHECK(check_admissible(i, *seq));
  const Clutter reduced = reduce_to_w(i, *seq);
  CHECK(reduced.num_parts() == 2);
  CHECK(reduced.edges().size() == 3);

  // A triangle has no two disjoint vertex covers.
  const auto tri = parse_instance_text(R"({"edges": [["x", "y"], ["y", "z"], ["x", "z"]]})");
  CHECK_FALSE(find_admissible_sequence(SquarefreeIdeal(tri.table(), tri.edges())));
}

TEST_CASE("reduction keeps only degree-d generators") {
  // x1x2, x3x4 and the higher-degree x1x4x5: W = {x1, x3} ∪ {x2, x4}.
  const auto c = parse_instance_text(R"({"edges": [["x1", "x2"], ["x3", "x4"], ["x1", "x4", "x5"]]})");
  const SquarefreeIdeal i(c.table(), c.edges());
  const AdmissibleSequence seq{{VertexSet::of({0, 2}), VertexSet::of({1, 3})}};
  REQUIRE(check_admissible(i, seq));
  const Clutter reduced = reduce_to_w(i, seq);
  CHECK(reduced.num_vertices() == 4);
  CHECK(reduced.edges().size() == 2);
}
