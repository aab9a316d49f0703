#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "linstrand/error.hpp"
#include "linstrand/vertex_set.hpp"

namespace linstrand {

struct Vertex {
  std::string name;
  std::optional<std::size_t> part;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Named vertices in a fixed total order, optionally split into parts
// 0..d-1. Every sign in the library is taken relative to this order.
class VertexTable {
 public:
  VertexTable() = default;

  explicit VertexTable(std::vector<Vertex> vertices)
      : vertices_(std::move(vertices)) {
    if (vertices_.size() > kMaxVertices) {
      throw GuardError("vertex table: at most 64 vertices are supported");
    }
    std::set<std::string> seen;
    std::size_t with_part = 0;
    std::size_t max_part = 0;
    for (const Vertex& v : vertices_) {
      if (v.name.empty()) throw InvalidInput("vertex table: empty vertex name");
      if (!seen.insert(v.name).second) {
        throw InvalidInput("vertex table: duplicate vertex name '" + v.name +
                           "'");
      }
      if (v.part) {
        ++with_part;
        max_part = std::max(max_part, *v.part);
      }
    }
    if (with_part != 0 && with_part != vertices_.size()) {
      throw InvalidInput("vertex table: either every vertex has a part or none");
    }
    if (with_part != 0) {
      num_parts_ = max_part + 1;
      std::vector<bool> used(num_parts_, false);
      for (const Vertex& v : vertices_) used[*v.part] = true;
      if (std::find(used.begin(), used.end(), false) != used.end()) {
        throw InvalidInput("vertex table: part indices must be contiguous");
      }
    }
  }

  static VertexTable unpartitioned(const std::vector<std::string>& names) {
    std::vector<Vertex> vs;
    vs.reserve(names.size());
    for (const auto& n : names) vs.push_back({n, std::nullopt});
    return VertexTable(std::move(vs));
  }

  // Parts in the given order, vertices within a part in the given order.
  static VertexTable partitioned(
      const std::vector<std::vector<std::string>>& parts) {
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].empty()) throw InvalidInput("vertex table: empty part");
      for (const auto& n : parts[i]) vs.push_back({n, i});
    }
    return VertexTable(std::move(vs));
  }

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::string& name(VertexId v) const { return vertices_.at(v).name; }
  std::optional<std::size_t> part(VertexId v) const {
    return vertices_.at(v).part;
  }

  bool has_partition() const { return num_parts_ != 0; }
  std::size_t num_parts() const { return num_parts_; }

  VertexSet all() const { return VertexSet::first_n(vertices_.size()); }

  VertexSet part_set(std::size_t i) const {
    VertexSet s;
    for (VertexId v = 0; v < vertices_.size(); ++v) {
      if (vertices_[v].part == i) s = s.with(v);
    }
    return s;
  }

  std::vector<VertexSet> part_sets() const {
    std::vector<VertexSet> out(num_parts_);
    for (VertexId v = 0; v < vertices_.size(); ++v) {
      if (vertices_[v].part) out[*vertices_[v].part] = out[*vertices_[v].part].with(v);
    }
    return out;
  }

  std::optional<VertexId> find(const std::string& name) const {
    for (VertexId v = 0; v < vertices_.size(); ++v) {
      if (vertices_[v].name == name) return v;
    }
    return std::nullopt;
  }

  // Vertices of `keep` in the same relative order. Parts that lose all their
  // vertices are dropped and the survivors renumbered in order.
  VertexTable subtable(VertexSet keep) const {
    std::map<std::size_t, std::size_t> renumber;
    for (VertexId v : keep) {
      if (vertices_.at(v).part) renumber.emplace(*vertices_[v].part, 0);
    }
    std::size_t next = 0;
    for (auto& [old, fresh] : renumber) fresh = next++;
    std::vector<Vertex> vs;
    for (VertexId v : keep) {
      Vertex copy = vertices_[v];
      if (copy.part) copy.part = renumber.at(*copy.part);
      vs.push_back(std::move(copy));
    }
    return VertexTable(std::move(vs));
  }

  VertexTable without_partition() const {
    std::vector<Vertex> vs = vertices_;
    for (auto& v : vs) v.part.reset();
    return VertexTable(std::move(vs));
  }

  // Concatenated names, e.g. "a1b2c1".
  std::string format(VertexSet s) const {
    std::string out;
    for (VertexId v : s) out += name(v);
    return s.empty() ? "1" : out;
  }

  std::vector<std::string> names(VertexSet s) const {
    std::vector<std::string> out;
    for (VertexId v : s) out.push_back(name(v));
    return out;
  }

  friend bool operator==(const VertexTable&, const VertexTable&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::size_t num_parts_ = 0;
};

namespace detail {

inline void sort_lex(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
}

// Keeps the inclusion-minimal members, deduplicated.
inline std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(),
            [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
  std::vector<VertexSet> out;
  for (VertexSet s : sets) {
    bool dominated = false;
    for (VertexSet t : out) {
      if (t.subset_of(s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  sort_lex(out);
  return out;
}

inline bool is_antichain(const std::vector<VertexSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i != j && sets[i].subset_of(sets[j])) return false;
    }
  }
  return true;
}

}  // namespace detail

// A hypergraph whose edges form an antichain. When the vertex table carries
// a partition the clutter is d-partite d-uniform: every edge is a transversal
// of the parts.
class Clutter {
 public:
  Clutter() = default;

  Clutter(VertexTable table, std::vector<VertexSet> edges)
      : table_(std::move(table)), edges_(std::move(edges)) {
    const VertexSet all = table_.all();
    for (VertexSet e : edges_) {
      if (e.empty()) throw InvalidInput("clutter: empty edge");
      if (!e.subset_of(all)) throw InvalidInput("clutter: edge out of range");
    }
    if (!detail::is_antichain(edges_)) {
      throw InvalidInput("clutter: edge set is not an antichain");
    }
    if (table_.has_partition()) {
      const auto parts = table_.part_sets();
      for (VertexSet e : edges_) {
        for (VertexSet p : parts) {
          if ((e & p).size() != 1) {
            throw InvalidInput("clutter: edge " + table_.format(e) +
                               " is not a transversal of the partition");
          }
        }
      }
    }
    detail::sort_lex(edges_);
  }

  // Drops duplicates and non-minimal sets before constructing.
  static Clutter normalized(VertexTable table, std::vector<VertexSet> sets) {
    std::erase_if(sets, [](VertexSet s) { return s.empty(); });
    return Clutter(std::move(table), detail::minimal_sets(std::move(sets)));
  }

  const VertexTable& table() const { return table_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  std::size_t num_vertices() const { return table_.size(); }
  VertexSet vertices() const { return table_.all(); }

  bool has_partition() const { return table_.has_partition(); }
  std::size_t num_parts() const { return table_.num_parts(); }

  bool contains_edge(VertexSet e) const {
    return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
  }

  // A set is independent when it contains no edge.
  bool is_independent(VertexSet s) const {
    for (VertexSet e : edges_) {
      if (e.subset_of(s)) return false;
    }
    return true;
  }

  friend bool operator==(const Clutter&, const Clutter&) = default;

 private:
  VertexTable table_;
  std::vector<VertexSet> edges_;
};

inline void require_partition(const Clutter& c, const char* what) {
  if (!c.has_partition()) {
    throw InvalidInput(std::string(what) +
                       ": requires a d-partite clutter with declared parts");
  }
}

// Inclusion-minimal transversals, by Berge's iterative product with
// minimality pruning after every edge.
inline std::vector<VertexSet> minimal_vertex_covers(const Clutter& c) {
  std::vector<VertexSet> covers{VertexSet{}};
  for (VertexSet e : c.edges()) {
    std::vector<VertexSet> next;
    for (VertexSet t : covers) {
      if (t.intersects(e)) {
        next.push_back(t);
      } else {
        for (VertexId v : e) next.push_back(t.with(v));
      }
    }
    covers = detail::minimal_sets(std::move(next));
  }
  detail::sort_lex(covers);
  return covers;
}

// All transversals v_1...v_d with v_i in part i.
inline std::vector<VertexSet> complete_edges(const std::vector<VertexSet>& parts) {
  std::vector<VertexSet> out{VertexSet{}};
  for (VertexSet p : parts) {
    std::vector<VertexSet> next;
    for (VertexSet prefix : out) {
      for (VertexId v : p) next.push_back(prefix.with(v));
    }
    out = std::move(next);
  }
  if (parts.empty()) out.clear();
  detail::sort_lex(out);
  return out;
}

inline Clutter d_partite_complement(const Clutter& c) {
  require_partition(c, "d_partite_complement");
  std::vector<VertexSet> edges;
  for (VertexSet e : complete_edges(c.table().part_sets())) {
    if (!c.contains_edge(e)) edges.push_back(e);
  }
  return Clutter(c.table(), std::move(edges));
}

// The induced clutter on w, re-indexed over the vertices of w.
inline Clutter restriction(const Clutter& c, VertexSet w) {
  if (!w.subset_of(c.vertices())) {
    throw InvalidInput("restriction: subset is outside the vertex range");
  }
  std::vector<VertexSet> edges;
  for (VertexSet e : c.edges()) {
    if (e.subset_of(w)) edges.push_back(compress(e, w));
  }
  return Clutter(c.table().subtable(w), std::move(edges));
}

// Projection onto the union of the listed parts, re-indexed over that union.
// The projected sets are reduced to an antichain.
inline Clutter ranked_projection(const Clutter& c,
                                 const std::vector<std::size_t>& parts) {
  require_partition(c, "ranked_projection");
  if (parts.empty()) throw InvalidInput("ranked_projection: empty part set");
  VertexSet w;
  for (std::size_t j : parts) {
    if (j >= c.num_parts()) throw InvalidInput("ranked_projection: bad part index");
    w = w | c.table().part_set(j);
  }
  std::vector<VertexSet> sets;
  for (VertexSet e : c.edges()) {
    if (e.intersects(w)) sets.push_back(compress(e & w, w));
  }
  return Clutter::normalized(c.table().subtable(w), std::move(sets));
}

namespace detail {

inline std::string part_prefix(std::size_t part, std::size_t num_parts) {
  if (num_parts <= 26) return std::string(1, static_cast<char>('a' + part));
  return "v" + std::to_string(part + 1) + "_";
}

inline VertexTable lettered_table(const std::vector<std::size_t>& sizes) {
  std::vector<std::vector<std::string>> parts;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) throw InvalidInput("generate: part sizes must be positive");
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= sizes[i]; ++k) {
      names.push_back(part_prefix(i, sizes.size()) + std::to_string(k));
    }
    parts.push_back(std::move(names));
  }
  return VertexTable::partitioned(parts);
}

}  // namespace detail

// Each point contributes one edge; coordinate i's distinct labels become the
// vertices of part i, named a1, a2, ... in order of first appearance.
inline Clutter from_point_configuration(
    const std::vector<std::vector<std::string>>& points) {
  if (points.empty()) throw InvalidInput("points: empty configuration");
  const std::size_t d = points.front().size();
  if (d == 0) throw InvalidInput("points: zero-dimensional point");
  std::vector<std::vector<std::string>> labels(d);
  for (const auto& p : points) {
    if (p.size() != d) throw InvalidInput("points: ragged coordinate tuples");
    for (std::size_t i = 0; i < d; ++i) {
      if (std::find(labels[i].begin(), labels[i].end(), p[i]) == labels[i].end()) {
        labels[i].push_back(p[i]);
      }
    }
  }
  std::vector<std::size_t> sizes;
  for (const auto& l : labels) sizes.push_back(l.size());
  VertexTable table = detail::lettered_table(sizes);

  std::vector<std::size_t> offset(d, 0);
  for (std::size_t i = 1; i < d; ++i) offset[i] = offset[i - 1] + sizes[i - 1];

  std::vector<VertexSet> edges;
  for (const auto& p : points) {
    VertexSet e;
    for (std::size_t i = 0; i < d; ++i) {
      auto k = std::find(labels[i].begin(), labels[i].end(), p[i]) - labels[i].begin();
      e = e.with(static_cast<VertexId>(offset[i] + static_cast<std::size_t>(k)));
    }
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  return Clutter(std::move(table), std::move(edges));
}

inline Clutter complete_clutter(const std::vector<std::size_t>& sizes) {
  if (sizes.empty()) throw InvalidInput("generate: at least one part required");
  VertexTable table = detail::lettered_table(sizes);
  auto edges = complete_edges(table.part_sets());
  return Clutter(std::move(table), std::move(edges));
}

// Bipartite: a_i ~ b_j iff j <= rows[i].
inline Clutter ferrers_clutter(const std::vector<std::size_t>& rows) {
  if (rows.empty()) throw InvalidInput("ferrers: empty shape");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] == 0) throw InvalidInput("ferrers: row lengths must be positive");
    if (i > 0 && rows[i] > rows[i - 1]) {
      throw InvalidInput("ferrers: row lengths must be weakly decreasing");
    }
  }
  VertexTable table = detail::lettered_table({rows.size(), rows.front()});
  std::vector<VertexSet> edges;
  const auto m = static_cast<VertexId>(rows.size());
  for (VertexId i = 0; i < m; ++i) {
    for (VertexId j = 0; j < rows[i]; ++j) edges.push_back(VertexSet::of({i, m + j}));
  }
  return Clutter(std::move(table), std::move(edges));
}

// Keeps each transversal independently with the given probability. The
// draw sequence depends only on the seed and the sizes.
inline Clutter random_clutter(const std::vector<std::size_t>& sizes,
                              double probability, std::uint64_t seed) {
  if (!(probability >= 0.0 && probability <= 1.0)) {
    throw InvalidInput("generate: probability must lie in [0, 1]");
  }
  Clutter complete = complete_clutter(sizes);
  std::mt19937_64 rng(seed);
  std::vector<VertexSet> edges;
  for (VertexSet e : complete.edges()) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < probability) edges.push_back(e);
  }
  return Clutter(complete.table(), std::move(edges));
}

}  // namespace linstrand
