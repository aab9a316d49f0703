#include <catch_amalgamated.hpp>

#include "linstrand/hochster.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace linstrand;

namespace {

std::map<std::pair<int, VertexSet>, std::size_t> nonzero(const BettiTable& t) {
  std::map<std::pair<int, VertexSet>, std::size_t> out;
  for (const auto& [k, v] : t.multigraded_entries())
    if (v) out[k] = v;
  return out;
}

}  // namespace

TEST_CASE("Hochster table matches the upper Koszul oracle") {
  for (const auto& name : testing::fixture_names()) {
    const Clutter c = testing::fixture(name);
    if (c.num_vertices() > 8) continue;
    const SquarefreeIdeal i = SquarefreeIdeal::edge_ideal(c);
    for (std::int64_t p : {0, 2}) {
      const Field f = p ? Field::prime(2) : Field::rationals();
      INFO(name << " p=" << p);
      CHECK(nonzero(betti_table(i, f)) == oracle::betti(i.generators(), i.num_vertices(), p));
    }
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Clutter c = random_clutter({3, 2, 2}, 0.4, seed);
    if (c.edges().empty()) continue;
    const SquarefreeIdeal i = SquarefreeIdeal::edge_ideal(c);
    INFO("seed " << seed);
    CHECK(nonzero(betti_table(i, Field::rationals())) == oracle::betti(i.generators(), 7, 0));
  }
}

TEST_CASE("final example Betti diagram") {
  const BettiTable t = betti_table(SquarefreeIdeal::edge_ideal(testing::fixture("final_example")), Field::rationals());
  CHECK(t.graded(0, 4) == 14);
  CHECK(t.graded(1, 5) == 24);
  CHECK(t.graded(2, 6) == 12);
  CHECK(t.graded(3, 7) == 1);
  CHECK(t.graded(0, 5) == 0);
  CHECK(t.graded(1, 6) == 0);
  CHECK(t.graded(2, 7) == 1);
  CHECK(t.graded(3, 8) == 1);
  CHECK(t.projective_dimension() == 3);
}

TEST_CASE("non-linear triangle Betti diagram") {
  const BettiTable t =
      betti_table(SquarefreeIdeal::edge_ideal(testing::fixture("nonlinear_triangle")), Field::rationals());
  CHECK(t.graded_entries() == std::map<std::pair<int, int>, std::size_t>{{{0, 3}, 3}, {{1, 5}, 3}, {{2, 6}, 1}});
}

TEST_CASE("linked ideals from the examples") {
  const Field q = Field::rationals();
  // R(-3)^2 <- R(-6)
  const BettiTable e1 = betti_table(linkage_ideal(testing::fixture("example1")), q);
  CHECK(e1.graded_entries() == std::map<std::pair<int, int>, std::size_t>{{{0, 3}, 2}, {{1, 6}, 1}});

  const BettiTable e2 = betti_table(linkage_ideal(testing::fixture("example2")), q);
  CHECK(e2.graded_entries() == std::map<std::pair<int, int>, std::size_t>{
                                   {{0, 4}, 10}, {{1, 5}, 14}, {{1, 7}, 1}, {{2, 6}, 6}, {{2, 8}, 1}, {{3, 7}, 1}});

  const BettiTable e3 = betti_table(linkage_ideal(testing::fixture("example3")), q);
  CHECK(e3.graded_entries() == std::map<std::pair<int, int>, std::size_t>{{{0, 2}, 7},
                                                                          {{1, 3}, 6},
                                                                          {{1, 4}, 9},
                                                                          {{2, 5}, 12},
                                                                          {{2, 6}, 3},
                                                                          {{3, 6}, 2},
                                                                          {{3, 7}, 6},
                                                                          {{4, 8}, 2}});
}

TEST_CASE("multigraded support lies in the lcm lattice") {
  for (const auto& name : testing::fixture_names()) {
    const Clutter c = testing::fixture(name);
    const BettiTable t = betti_table(SquarefreeIdeal::edge_ideal(c), Field::rationals());
    for (const auto& [key, v] : t.multigraded_entries()) {
      VertexSet lcm;
      for (VertexSet e : c.edges())
        if (e.subset_of(key.second)) lcm = lcm | e;
      INFO(name);
      CHECK(lcm == key.second);
    }
  }
}

TEST_CASE("degree cap truncates the enumeration") {
  const SquarefreeIdeal i = SquarefreeIdeal::edge_ideal(testing::fixture("final_example"));
  const BettiTable capped = betti_table(i, Field::rationals(), 5);
  CHECK(capped.graded(0, 4) == 14);
  CHECK(capped.graded(1, 5) == 24);
  CHECK(capped.graded(2, 6) == 0);
}

TEST_CASE("enumeration guard") {
  std::vector<std::string> names;
  for (int k = 0; k < 25; ++k) names.push_back("x" + std::to_string(k));
  const SquarefreeIdeal big(VertexTable::unpartitioned(names), {VertexSet::of({0, 1})});
  CHECK_THROWS_AS(betti_table(big, Field::rationals()), GuardError);
  CHECK_THROWS_AS(betti_table(SquarefreeIdeal::edge_ideal(testing::fixture("example1")), Field::rationals(), {}, 5),
                  GuardError);
}

TEST_CASE("linearity from the Betti table") {
  const Field q = Field::rationals();
  CHECK(is_linear_by_betti(SquarefreeIdeal::edge_ideal(testing::fixture("complete_2_2")), q));
  CHECK(is_linear_by_betti(SquarefreeIdeal::edge_ideal(testing::fixture("ferrers_3_2_1")), q));
  CHECK_FALSE(is_linear_by_betti(SquarefreeIdeal::edge_ideal(testing::fixture("nonlinear_triangle")), q));
  CHECK_FALSE(is_linear_by_betti(SquarefreeIdeal::edge_ideal(testing::fixture("final_example")), q));
  CHECK(is_linear_by_betti(SquarefreeIdeal(VertexTable::unpartitioned({"x"}), {}), q));
  const auto mixed = parse_instance_text(R"({"edges": [["x", "y"], ["z"]]})");
  CHECK_FALSE(is_linear_by_betti(SquarefreeIdeal(mixed.table(), mixed.edges()), q));
}
