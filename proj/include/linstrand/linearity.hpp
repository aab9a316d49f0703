#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "linstrand/clutter.hpp"
#include "linstrand/vertex_set.hpp"

namespace linstrand {

enum class ProjectionSide { clutter, complement };

inline const char* to_string(ProjectionSide side) {
  return side == ProjectionSide::clutter ? "clutter" : "complement";
}

// Two edges e, e' of the complete d-partite clutter, a part subset J and a
// side such that the rank-|J| projection of C|_{e∪e'} (or of its complement)
// onto the parts J is exactly two disjoint edges. Sets use the ids of the
// original clutter.
struct LinearityCertificate {
  VertexSet first_edge;
  VertexSet second_edge;
  std::vector<std::size_t> parts;
  ProjectionSide side = ProjectionSide::clutter;
  std::vector<VertexSet> projected_edges;

  friend bool operator==(const LinearityCertificate&, const LinearityCertificate&) = default;
};

struct LinearityVerdict {
  bool linear = true;
  std::optional<LinearityCertificate> certificate;
};

namespace detail {

inline void for_each_subset_of_size(std::size_t n, std::size_t k,
                                    const auto& visit) {
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    if (visit(pick)) return;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Projected edges of C|_E (or of its complement) onto parts J, as sets in
// the ids of the original clutter.
inline std::vector<VertexSet> projected_pair_edges(const Clutter& c, VertexSet e_union,
                                                   const std::vector<std::size_t>& parts,
                                                   ProjectionSide side) {
  const Clutter induced = restriction(c, e_union);
  const Clutter source = side == ProjectionSide::clutter ? induced : d_partite_complement(induced);
  const Clutter projected = ranked_projection(source, parts);
  VertexSet w;
  for (std::size_t j : parts) w = w | induced.table().part_set(j);
  std::vector<VertexSet> out;
  for (VertexSet edge : projected.edges()) out.push_back(expand(expand(edge, w), e_union));
  return out;
}

inline bool is_two_disjoint_edges(const std::vector<VertexSet>& edges) {
  return edges.size() == 2 && !edges[0].intersects(edges[1]);
}

}  // namespace detail

// I(C) has a linear resolution iff for no 2 <= d' <= d and no two edges e, e'
// of the complete clutter C(V_1, ..., V_d) does C|_{e∪e'} or its d-partite
// complement have a rank-d' projection consisting of two disjoint edges.
// Scan order: pairs of complete edges lexicographically, then d', then J,
// then the clutter side before the complement side.
inline LinearityVerdict is_linear(const Clutter& c) {
  require_partition(c, "is_linear");
  const std::size_t d = c.num_parts();
  if (d == 1 || c.edges().empty()) return {true, std::nullopt};

  const auto parts = c.table().part_sets();
  const auto complete = complete_edges(parts);
  for (std::size_t a = 0; a < complete.size(); ++a) {
    for (std::size_t b = a + 1; b < complete.size(); ++b) {
      const VertexSet e_union = complete[a] | complete[b];
      std::size_t differing = 0;
      for (VertexSet p : parts) differing += (e_union & p).size() == 2 ? 1 : 0;
      if (differing < 2) continue;  // every projection keeps a shared vertex

      std::optional<LinearityCertificate> found;
      for (std::size_t rank = 2; rank <= d && !found; ++rank) {
        detail::for_each_subset_of_size(d, rank, [&](const std::vector<std::size_t>& picked) {
          for (ProjectionSide side : {ProjectionSide::clutter, ProjectionSide::complement}) {
            auto edges = detail::projected_pair_edges(c, e_union, picked, side);
            if (detail::is_two_disjoint_edges(edges)) {
              found = LinearityCertificate{complete[a], complete[b], picked, side, std::move(edges)};
              return true;
            }
          }
          return false;
        });
      }
      if (found) return {false, std::move(found)};
    }
  }
  return {true, std::nullopt};
}

// Re-runs the projection named by the certificate.
inline bool replay_certificate(const Clutter& c, const LinearityCertificate& cert) {
  const auto edges =
      detail::projected_pair_edges(c, cert.first_edge | cert.second_edge, cert.parts, cert.side);
  return detail::is_two_disjoint_edges(edges) && edges == cert.projected_edges;
}

inline bool complement_linearity_agrees(const Clutter& c) {
  return is_linear(c).linear == is_linear(d_partite_complement(c)).linear;
}

}  // namespace linstrand
