#pragma once

#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include "linstrand/clutter.hpp"
#include "linstrand/instance_io.hpp"

namespace testing {

inline linstrand::Clutter fixture(const std::string& stem) {
  return linstrand::read_instance_file(std::string(LINSTRAND_FIXTURES) + "/" + stem + ".json");
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "example1",     "example2",       "example3",         "final_example",   "three_points",
      "nonlinear_triangle", "maximal_ideal_3", "complete_2_2", "ferrers_3_2_1"};
  return names;
}

// Every edge subset of the complete clutter on the given part sizes.
inline std::vector<linstrand::Clutter> all_subclutters(const std::vector<std::size_t>& sizes,
                                                       bool include_empty = false) {
  const linstrand::Clutter complete = linstrand::complete_clutter(sizes);
  const auto& edges = complete.edges();
  std::vector<linstrand::Clutter> out;
  for (std::uint64_t mask = include_empty ? 0 : 1; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<linstrand::VertexSet> chosen;
    for (std::size_t k = 0; k < edges.size(); ++k)
      if ((mask >> k) & 1U) chosen.push_back(edges[k]);
    out.emplace_back(complete.table(), std::move(chosen));
  }
  return out;
}

}  // namespace testing

template <>
struct Catch::StringMaker<linstrand::VertexSet> {
  static std::string convert(linstrand::VertexSet s) {
    std::string out = "{";
    for (auto v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
  }
};
