#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linstrand/clutter.hpp"
#include "linstrand/error.hpp"
#include "linstrand/linalg.hpp"
#include "linstrand/vertex_set.hpp"

namespace linstrand {

namespace detail {

using FaceLists = std::vector<std::vector<VertexSet>>;  // index = dim + 1

inline const std::vector<VertexSet>& faces_at(const FaceLists& faces, int dim) {
  static const std::vector<VertexSet> none;
  const int slot = dim + 1;
  if (slot < 0 || slot >= static_cast<int>(faces.size())) return none;
  return faces[static_cast<std::size_t>(slot)];
}

// Oriented boundary over degrees lowest..highest, with face F mapped to
// sum_v (-1)^{pos(v,F)} (F \ v). Terms whose target is not listed in the
// lower degree are dropped, which is exactly the relative boundary.
inline ChainComplex oriented_complex(const FaceLists& faces, int lowest, int highest) {
  if (highest < lowest) return ChainComplex(lowest, {0}, {});
  std::vector<std::size_t> dims;
  std::vector<Matrix> maps;
  for (int k = lowest; k <= highest; ++k) dims.push_back(faces_at(faces, k).size());
  for (int k = lowest + 1; k <= highest; ++k) {
    const auto& src = faces_at(faces, k);
    const auto& tgt = faces_at(faces, k - 1);
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < tgt.size(); ++i) index.emplace(tgt[i].bits(), i);
    std::vector<Matrix::Entry> entries;
    for (std::size_t j = 0; j < src.size(); ++j) {
      std::int64_t sign = 1;
      for (VertexId v : src[j]) {
        auto it = index.find(src[j].without(v).bits());
        if (it != index.end()) entries.push_back({it->second, j, sign});
        sign = -sign;
      }
    }
    maps.emplace_back(tgt.size(), src.size(), std::move(entries));
  }
  return ChainComplex(lowest, std::move(dims), std::move(maps));
}

inline void sort_faces(FaceLists& faces) {
  for (auto& level : faces) std::sort(level.begin(), level.end(), lex_less);
}

}  // namespace detail

// A simplicial complex on a vertex table, generated by its facets. Faces are
// enumerated eagerly and kept per dimension in lexicographic ≺-order.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // An empty facet list gives the void complex; {∅} gives the complex whose
  // only face is the empty face.
  SimplicialComplex(VertexTable table, std::vector<VertexSet> facets)
      : table_(std::move(table)) {
    require_enumerable(table_.size(), "simplicial complex");
    for (VertexSet f : facets) {
      if (!f.subset_of(table_.all())) throw InvalidInput("simplicial complex: facet out of range");
    }
    // Keep only the maximal generators.
    std::sort(facets.begin(), facets.end(),
              [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
    for (VertexSet f : facets) {
      bool covered = std::any_of(facets_.begin(), facets_.end(),
                                 [&](VertexSet g) { return f.subset_of(g); });
      if (!covered) facets_.push_back(f);
    }
    detail::sort_lex(facets_);

    std::set<std::uint64_t> seen;
    for (VertexSet f : facets_) {
      const std::uint64_t top = f.bits();
      for (std::uint64_t sub = top;; sub = (sub - 1) & top) {
        seen.insert(sub);
        if (sub == 0) break;
      }
    }
    std::size_t top_size = 0;
    for (VertexSet f : facets_) top_size = std::max(top_size, f.size());
    if (!facets_.empty()) faces_.resize(top_size + 1);
    for (std::uint64_t bits : seen) {
      VertexSet s(bits);
      faces_[s.size()].push_back(s);
    }
    detail::sort_faces(faces_);
  }

  static SimplicialComplex void_complex(VertexTable table) {
    return SimplicialComplex(std::move(table), {});
  }

  static SimplicialComplex simplex(VertexTable table) {
    VertexSet all = table.all();
    return SimplicialComplex(std::move(table), {all});
  }

  const VertexTable& table() const { return table_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }

  // -1 for {∅}; -2 for the void complex.
  int dimension() const { return static_cast<int>(faces_.size()) - 2; }

  const std::vector<VertexSet>& faces_of_dim(int k) const {
    return detail::faces_at(faces_, k);
  }

  std::size_t num_faces() const {
    std::size_t total = 0;
    for (const auto& level : faces_) total += level.size();
    return total;
  }

  bool contains(VertexSet face) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](VertexSet f) { return face.subset_of(f); });
  }

  bool is_subcomplex_of(const SimplicialComplex& other) const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](VertexSet f) { return other.contains(f); });
  }

  // Faces contained in w (same vertex table).
  SimplicialComplex restricted_to(VertexSet w) const {
    std::vector<VertexSet> gens;
    for (VertexSet f : facets_) gens.push_back(f & w);
    return SimplicialComplex(table_, std::move(gens));
  }

  const detail::FaceLists& face_lists() const { return faces_; }

 private:
  VertexTable table_;
  std::vector<VertexSet> facets_;
  detail::FaceLists faces_;
};

// Independence complex: the sets that contain no edge. Its facets are the
// complements of the minimal vertex covers.
inline SimplicialComplex independent_sets(const Clutter& c) {
  require_enumerable(c.num_vertices(), "independent_sets");
  std::vector<VertexSet> facets;
  for (VertexSet cover : minimal_vertex_covers(c)) facets.push_back(c.vertices() - cover);
  return SimplicialComplex(c.table(), std::move(facets));
}

// Relative complex (X, Y): the faces of X that are not faces of Y.
class SimplicialPair {
 public:
  SimplicialPair(SimplicialComplex x, SimplicialComplex y) : x_(std::move(x)), y_(std::move(y)) {
    if (!(x_.table() == y_.table())) throw InvalidInput("simplicial pair: vertex tables differ");
    if (!y_.is_subcomplex_of(x_)) throw InvalidInput("simplicial pair: Y is not a subcomplex of X");
    faces_.resize(x_.face_lists().size());
    for (int k = -1; k <= x_.dimension(); ++k) {
      for (VertexSet f : x_.faces_of_dim(k)) {
        if (!y_.contains(f)) faces_[static_cast<std::size_t>(k + 1)].push_back(f);
      }
    }
  }

  const SimplicialComplex& x() const { return x_; }
  const SimplicialComplex& y() const { return y_; }

  const std::vector<VertexSet>& faces_of_dim(int k) const {
    return detail::faces_at(faces_, k);
  }

  bool has_empty_face() const { return !faces_of_dim(-1).empty(); }

  // Face counts for dimensions 0..dim X.
  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> out;
    for (int k = 0; k <= x_.dimension(); ++k) out.push_back(faces_of_dim(k).size());
    return out;
  }

  const detail::FaceLists& face_lists() const { return faces_; }

 private:
  SimplicialComplex x_;
  SimplicialComplex y_;
  detail::FaceLists faces_;
};

// Unreduced chain complex, degrees 0..dim.
inline ChainComplex chain_complex(const SimplicialComplex& x) {
  return detail::oriented_complex(x.face_lists(), 0, std::max(x.dimension(), 0));
}

// Augmented chain complex, degrees -1..dim. The void complex gives the zero
// complex; {∅} gives a single basis element in degree -1.
inline ChainComplex reduced_chain_complex(const SimplicialComplex& x) {
  return detail::oriented_complex(x.face_lists(), -1, std::max(x.dimension(), -1));
}

// Relative chain complex of the pair, degrees -1..dim X.
inline ChainComplex relative_chain_complex(const SimplicialPair& p) {
  return detail::oriented_complex(p.face_lists(), -1, std::max(p.x().dimension(), -1));
}

inline std::vector<std::size_t> f_vector(const SimplicialPair& p) { return p.f_vector(); }

// X = independence complex of the d-partite complement, Y = the complex
// generated by V \ V_i. Faces of the pair are the sets independent in the
// complement that meet every part.
inline SimplicialPair build_x_y(const Clutter& c) {
  require_partition(c, "build_x_y");
  const Clutter complement = d_partite_complement(c);
  SimplicialComplex x = independent_sets(complement);
  std::vector<VertexSet> y_facets;
  for (VertexSet part : c.table().part_sets()) y_facets.push_back(c.vertices() - part);
  SimplicialComplex y(c.table(), std::move(y_facets));
  return SimplicialPair(std::move(x), std::move(y));
}

}  // namespace linstrand
