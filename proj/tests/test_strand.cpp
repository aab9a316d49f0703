#include <catch_amalgamated.hpp>

#include "linstrand/hochster.hpp"
#include "linstrand/strand.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace linstrand;

TEST_CASE("complete bipartite strand") {
  const StrandComplex s = first_linear_strand(testing::fixture("complete_2_2"));
  CHECK(s.ranks() == std::vector<std::size_t>{4, 4, 1});
  CHECK(s.d() == 2);
  CHECK(s.n() == 4);
  CHECK(s.skeleton_complex().squares_to_zero());
}

TEST_CASE("level sets are the independent transversal supersets") {
  for (const auto& name : testing::fixture_names()) {
    const Clutter c = testing::fixture(name);
    const StrandComplex s = first_linear_strand(c);
    const auto comp = d_partite_complement(c).edges();
    const auto parts = c.table().part_sets();
    std::map<std::size_t, std::vector<VertexSet>> want;
    for (VertexSet a : oracle::independent_sets(comp, c.num_vertices())) {
      bool meets = true;
      for (VertexSet p : parts) meets = meets && a.intersects(p);
      if (meets) want[a.size() - c.num_parts()].push_back(a);
    }
    INFO(name);
    REQUIRE(s.num_levels() == want.size());
    for (std::size_t i = 0; i < s.num_levels(); ++i) CHECK(oracle::sorted(s.level(i)) == want[i]);
    CHECK(s.level(0) == c.edges());
  }
}

TEST_CASE("strand ranks equal the linear-strand Betti numbers") {
  for (const auto& name : testing::fixture_names()) {
    const Clutter c = testing::fixture(name);
    const StrandComplex s = first_linear_strand(c);
    const auto betti = oracle::graded(oracle::betti(c.edges(), c.num_vertices(), 0));
    const int d = static_cast<int>(c.num_parts());
    INFO(name);
    for (int i = 0; i < static_cast<int>(s.num_levels()) + 2; ++i) {
      auto it = betti.find({i, i + d});
      CHECK(s.rank(static_cast<std::size_t>(i)) == (it == betti.end() ? 0 : it->second));
    }
  }
}

TEST_CASE("skeleton squares to zero and is supported on the pair") {
  for (const auto& name : testing::fixture_names()) {
    const Clutter c = testing::fixture(name);
    const StrandComplex s = first_linear_strand(c);
    INFO(name);
    CHECK(s.skeleton_complex().squares_to_zero());
    const SupportReport r = verify_support(s, build_x_y(c));
    CHECK(r.supported());
  }
}

TEST_CASE("corrupted sign is located") {
  const Clutter c = testing::fixture("example1");
  const StrandComplex s = first_linear_strand(c);
  std::vector<std::vector<VertexSet>> levels;
  std::vector<std::vector<StrandEntry>> maps;
  for (std::size_t i = 0; i < s.num_levels(); ++i) {
    levels.push_back(s.level(i));
    maps.push_back(i == 0 ? std::vector<StrandEntry>{} : s.differential(i));
  }
  REQUIRE(maps.size() > 1);
  maps[1][0].sign = -maps[1][0].sign;
  const StrandComplex bad(c.table(), s.d(), levels, maps);
  const SupportReport r = verify_support(bad, build_x_y(c));
  CHECK_FALSE(r.supported());
  REQUIRE(r.mismatches.size() == 1);
  CHECK_THAT(r.mismatches[0], Catch::Matchers::ContainsSubstring("level 1 entry"));
  CHECK_THAT(r.mismatches[0], Catch::Matchers::ContainsSubstring(c.table().format(levels[0][maps[1][0].target])));
}

TEST_CASE("malformed strand data is rejected") {
  const Clutter c = testing::fixture("complete_2_2");
  const StrandComplex s = first_linear_strand(c);
  std::vector<std::vector<VertexSet>> levels{s.level(0), s.level(1)};
  auto entries = s.differential(1);
  entries[0].multiplier = (s.level(1)[entries[0].source] - VertexSet::of({entries[0].multiplier})).min();
  CHECK_THROWS_AS(StrandComplex(c.table(), 2, levels, {{}, entries}), InvalidInput);
  CHECK_THROWS_AS(StrandComplex(c.table(), 2, levels, {{}}), InvalidInput);
  CHECK_THROWS_AS(StrandComplex(c.table(), 3, levels, {{}, s.differential(1)}), InvalidInput);
}

TEST_CASE("cover form differs by a diagonal sign change") {
  for (const auto& name : testing::fixture_names()) {
    const Clutter c = testing::fixture(name);
    const StrandComplex s = first_linear_strand(c);
    const auto eps = [](VertexSet a) {
      std::int64_t total = 0;
      for (VertexId v : a) total += v;
      return total % 2 ? -1 : 1;
    };
    for (std::size_t i = 1; i < s.num_levels(); ++i) {
      const Matrix skel = s.skeleton(i);
      const Matrix cover = s.cover_form_skeleton(i);
      INFO(name << " level " << i);
      // Either orientation of ε; check that one global sign fits.
      bool same = true;
      bool flipped = true;
      for (const auto& e : skel.entries()) {
        const std::int64_t conj = eps(s.level(i - 1)[e.row]) * e.value * eps(s.level(i)[e.col]);
        same = same && conj == cover.at(e.row, e.col);
        flipped = flipped && -conj == cover.at(e.row, e.col);
      }
      CHECK(skel.entries().size() == cover.entries().size());
      CHECK((same || flipped));
    }
  }
}

TEST_CASE("strand homology in squarefree multidegrees") {
  const Clutter c = testing::fixture("final_example");
  const StrandComplex s = first_linear_strand(c);
  const Field q = Field::rationals();
  const auto nonzero = [](std::map<int, std::size_t> h) {
    std::erase_if(h, [](const auto& kv) { return kv.second == 0; });
    return h;
  };
  const auto full = nonzero(strand_homology_at(s, c.vertices(), q));
  CHECK(full.size() == 1);
  CHECK(full.count(0) == 1);
  const auto drop = nonzero(strand_homology_at(s, c.vertices().without(*c.table().find("a2")), q));
  CHECK(drop.size() == 2);
  CHECK(drop.count(0) == 1);
  CHECK(drop.count(1) == 1);
  CHECK_THROWS_AS(strand_homology_at(s, VertexSet::of({40}), q), InvalidInput);
}

TEST_CASE("maximal ideal gives the Koszul complex") {
  const StrandComplex s = first_linear_strand(testing::fixture("maximal_ideal_3"));
  CHECK(s.ranks() == std::vector<std::size_t>{3, 3, 1});
  const auto h = strand_homology_at(s, s.table().all(), Field::rationals());
  for (const auto& [k, v] : h) CHECK(v == (k == 0 ? 1U : 0U));
}

TEST_CASE("unpartitioned ideals go through an admissible sequence") {
  const Clutter path = testing::fixture("unpartitioned_path");
  const SquarefreeIdeal i(path.table(), path.edges());
  const auto seq = find_admissible_sequence(i);
  REQUIRE(seq);
  const StrandComplex s = first_linear_strand(i, *seq);
  CHECK(s.ranks() == std::vector<std::size_t>{3, 2});
  CHECK_THROWS_AS(first_linear_strand(path), InvalidInput);
}
