#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "linstrand/clutter.hpp"
#include "linstrand/hochster.hpp"
#include "linstrand/ideal.hpp"
#include "linstrand/linalg.hpp"
#include "linstrand/linearity.hpp"
#include "linstrand/lyubeznik.hpp"
#include "linstrand/simplicial.hpp"
#include "linstrand/strand.hpp"

namespace linstrand {

struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

namespace detail {

inline bool reduced_sphere(const SimplicialComplex& y, int dim, const Field& field) {
  for (const auto& [k, h] : homology_dims(reduced_chain_complex(y), field)) {
    if (h != (k == dim ? 1U : 0U)) return false;
  }
  return true;
}

}  // namespace detail

// Reduced homology of the complex generated by V \ V_i is that of a
// (d-2)-sphere (rank 1 in degree -1 when d = 1).
inline bool y_is_sphere(const Clutter& c, const Field& field) {
  return detail::reduced_sphere(build_x_y(c).y(), static_cast<int>(c.num_parts()) - 2, field);
}

// (a : I(C)^A) = I(C^c)^A and (a : I(C^c)^A) = I(C)^A, by exhaustion.
inline bool linkage_holds(const Clutter& c) {
  const Clutter complement = d_partite_complement(c);
  const auto parts = c.table().part_sets();
  const auto covers = minimal_vertex_covers(c);
  const auto complement_covers = minimal_vertex_covers(complement);
  return colon_by_exhaustion(parts, covers, c.vertices()) == complement_covers &&
         colon_by_exhaustion(parts, complement_covers, c.vertices()) == covers;
}

// Every cross-check the library can run on one d-partite instance.
inline VerificationReport verify_instance(const Clutter& c, const Field& field) {
  require_partition(c, "verify");
  VerificationReport report;
  const auto add = [&](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const StrandComplex strand = first_linear_strand(c);
  const SimplicialPair pair = build_x_y(c);
  const std::size_t d = c.num_parts();

  add("boundary_squared_zero",
      strand.skeleton_complex().squares_to_zero() && relative_chain_complex(pair).squares_to_zero() &&
          reduced_chain_complex(pair.x()).squares_to_zero() &&
          reduced_chain_complex(pair.y()).squares_to_zero());

  const SupportReport support = verify_support(strand, pair);
  add("support", support.supported(), support.supported() ? "" : support.mismatches.front());

  const BettiTable betti = betti_table(SquarefreeIdeal::edge_ideal(c), field);
  bool ranks_ok = true;
  std::string rank_detail;
  const int top = std::max(betti.projective_dimension(), static_cast<int>(strand.num_levels()) - 1);
  for (int i = 0; i <= top; ++i) {
    const std::size_t oracle = betti.graded(i, i + static_cast<int>(d));
    if (oracle != strand.rank(static_cast<std::size_t>(i))) {
      ranks_ok = false;
      rank_detail = "level " + std::to_string(i) + ": strand rank " +
                    std::to_string(strand.rank(static_cast<std::size_t>(i))) + ", oracle " +
                    std::to_string(oracle);
      break;
    }
  }
  for (std::size_t i = 0; ranks_ok && i < strand.num_levels(); ++i) {
    for (VertexSet a : strand.level(i)) {
      if (betti.multigraded(static_cast<int>(i), a) != 1) {
        ranks_ok = false;
        rank_detail = "multigraded Betti number at " + c.table().format(a) + " is not 1";
        break;
      }
    }
  }
  add("rank_vs_oracle", ranks_ok, rank_detail);

  add("y_sphere", detail::reduced_sphere(pair.y(), static_cast<int>(d) - 2, field));
  add("linkage", linkage_holds(c));
  add("complement_linearity", complement_linearity_agrees(c));
  add("linearity_vs_betti",
      is_linear(c).linear == is_linear_by_betti(SquarefreeIdeal::edge_ideal(c), field));
  add("lyubeznik_vs_betti", cross_check_betti(c, field).all_agree());
  return report;
}

}  // namespace linstrand
