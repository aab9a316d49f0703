#include <catch_amalgamated.hpp>

#include "linstrand/hochster.hpp"
#include "linstrand/linearity.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace linstrand;

namespace {

bool linear_by_oracle(const Clutter& c) {
  if (c.edges().empty()) return true;
  const int d = static_cast<int>(c.num_parts());
  for (const auto& [key, v] : oracle::graded(oracle::betti(c.edges(), c.num_vertices(), 0)))
    if (v && key.second != key.first + d) return false;
  return true;
}

}  // namespace

TEST_CASE("subset enumeration is lexicographic") {
  std::vector<std::vector<std::size_t>> seen;
  detail::for_each_subset_of_size(4, 2, [&](const std::vector<std::size_t>& s) {
    seen.push_back(s);
    return false;
  });
  CHECK(seen == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("fixture verdicts") {
  CHECK(is_linear(testing::fixture("complete_2_2")).linear);
  CHECK(is_linear(testing::fixture("ferrers_3_2_1")).linear);
  CHECK(is_linear(testing::fixture("maximal_ideal_3")).linear);
  CHECK_FALSE(is_linear(testing::fixture("nonlinear_triangle")).linear);
  CHECK_FALSE(is_linear(testing::fixture("final_example")).linear);
  CHECK_FALSE(is_linear(testing::fixture("example3")).linear);
}

TEST_CASE("the non-linear triangle has no induced pair of disjoint edges") {
  const Clutter c = testing::fixture("nonlinear_triangle");
  for (std::size_t a = 0; a < c.edges().size(); ++a)
    for (std::size_t b = a + 1; b < c.edges().size(); ++b) CHECK(c.edges()[a].intersects(c.edges()[b]));
  const LinearityVerdict v = is_linear(c);
  REQUIRE(v.certificate);
  CHECK(replay_certificate(c, *v.certificate));
  CHECK(v.certificate->projected_edges.size() == 2);
  CHECK_FALSE(v.certificate->projected_edges[0].intersects(v.certificate->projected_edges[1]));
}

TEST_CASE("certificates replay and tampered ones do not") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Clutter c = random_clutter({2, 2, 2}, 0.5, seed);
    const LinearityVerdict v = is_linear(c);
    if (!v.certificate) continue;
    INFO("seed " << seed);
    CHECK(replay_certificate(c, *v.certificate));
    LinearityCertificate other = *v.certificate;
    other.side = other.side == ProjectionSide::clutter ? ProjectionSide::complement : ProjectionSide::clutter;
    const auto projected = detail::projected_pair_edges(c, other.first_edge | other.second_edge, other.parts,
                                                        other.side);
    CHECK(replay_certificate(c, other) == (projected == other.projected_edges && detail::is_two_disjoint_edges(projected)));
    LinearityCertificate moved = *v.certificate;
    moved.projected_edges.pop_back();
    CHECK_FALSE(replay_certificate(c, moved));
  }
}

TEST_CASE("projection test agrees with the Betti oracle") {
  for (const Clutter& c : testing::all_subclutters({2, 2}, true)) CHECK(is_linear(c).linear == linear_by_oracle(c));
  for (const Clutter& c : testing::all_subclutters({2, 3})) CHECK(is_linear(c).linear == linear_by_oracle(c));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Clutter c = random_clutter({2, 2, 2}, 0.5, 1000 + seed);
    INFO("seed " << seed);
    CHECK(is_linear(c).linear == linear_by_oracle(c));
  }
}

TEST_CASE("bipartite verdicts match the Ferrers shape") {
  // Bipartite graphs with linear resolution are exactly the Ferrers graphs
  // up to relabelling; a 2x2 matching is not.
  const auto matching = parse_instance_text(R"({"parts": [["a1", "a2"], ["b1", "b2"]],
                                                "edges": [["a1", "b1"], ["a2", "b2"]]})");
  CHECK_FALSE(is_linear(matching).linear);
  for (const auto& rows : std::vector<std::vector<std::size_t>>{{1}, {2, 1}, {3, 3, 1}, {4, 2, 2, 1}})
    CHECK(is_linear(ferrers_clutter(rows)).linear);
}

TEST_CASE("linearity is preserved by complements and projections") {
  for (const Clutter& c : testing::all_subclutters({2, 2, 2})) {
    CHECK(complement_linearity_agrees(c));
    if (!is_linear(c).linear) continue;
    for (const auto& parts : std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}})
      CHECK(is_linear(ranked_projection(c, parts)).linear);
  }
}

TEST_CASE("degenerate cases count as linear") {
  CHECK(is_linear(Clutter(complete_clutter({2, 2}).table(), {})).linear);
  CHECK(is_linear(testing::fixture("maximal_ideal_3")).linear);
  CHECK_THROWS_AS(is_linear(testing::fixture("unpartitioned_path")), InvalidInput);
}
