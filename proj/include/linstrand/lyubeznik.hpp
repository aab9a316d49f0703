#pragma once

#include <cstddef>
#include <vector>

#include "linstrand/clutter.hpp"
#include "linstrand/hochster.hpp"
#include "linstrand/ideal.hpp"
#include "linstrand/linalg.hpp"
#include "linstrand/simplicial.hpp"

namespace linstrand {

// λ_{p, n-d}(R / I(C)^A) for p = 0, ..., n - d: the last column of the
// Lyubeznik table of the cover ideal.
struct LyubeznikColumn {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<std::size_t> values;

  std::size_t at(std::size_t p) const { return p < values.size() ? values[p] : 0; }
  std::size_t last_index() const { return n - d; }

  friend bool operator==(const LyubeznikColumn&, const LyubeznikColumn&) = default;
};

// λ_{p,n-d} = dim H^{n-p-1}((X(I), Y(I)); k). Over a field the cohomology
// dimensions equal the homology dimensions of the relative chain complex.
inline LyubeznikColumn lyubeznik_last_column(const Clutter& c, const Field& field) {
  const SimplicialPair pair = build_x_y(c);
  const auto homology = homology_dims(relative_chain_complex(pair), field);
  LyubeznikColumn column{c.num_vertices(), c.num_parts(), {}};
  for (std::size_t p = 0; p <= column.n - column.d; ++p) {
    const int degree = static_cast<int>(column.n - p) - 1;
    auto it = homology.find(degree);
    column.values.push_back(it == homology.end() ? 0 : it->second);
  }
  return column;
}

struct BettiCrossCheck {
  struct Row {
    std::size_t p;
    std::size_t lyubeznik;
    std::size_t betti;  // β_{p-1, V}(I(C^c)), zero for p = 0

    bool agrees() const { return lyubeznik == betti; }
  };

  std::vector<Row> rows;

  bool all_agree() const {
    for (const Row& r : rows) {
      if (!r.agrees()) return false;
    }
    return true;
  }
};

// For p < n - d compares λ_{p,n-d} with the multigraded Betti number of
// I(C^c) in the all-ones multidegree, taken from the Hochster oracle.
inline BettiCrossCheck cross_check_betti(const Clutter& c, const Field& field) {
  const LyubeznikColumn column = lyubeznik_last_column(c, field);
  const BettiTable betti = betti_table(linkage_ideal(c), field);
  BettiCrossCheck report;
  for (std::size_t p = 0; p < column.n - column.d; ++p) {
    const std::size_t b = p == 0 ? 0 : betti.multigraded(static_cast<int>(p) - 1, c.vertices());
    report.rows.push_back({p, column.at(p), b});
  }
  return report;
}

}  // namespace linstrand
