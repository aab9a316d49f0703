#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linstrand/clutter.hpp"
#include "linstrand/error.hpp"
#include "linstrand/vertex_set.hpp"

namespace linstrand {

// A squarefree monomial ideal, stored as the supports of its minimal
// generators. No generators means the zero ideal.
class SquarefreeIdeal {
 public:
  SquarefreeIdeal() = default;

  SquarefreeIdeal(VertexTable table, std::vector<VertexSet> generators)
      : table_(std::move(table)), generators_(std::move(generators)) {
    for (VertexSet g : generators_) {
      if (g.empty()) throw InvalidInput("ideal: the unit monomial is not a valid generator");
      if (!g.subset_of(table_.all())) throw InvalidInput("ideal: generator out of range");
    }
    if (!detail::is_antichain(generators_)) {
      throw InvalidInput("ideal: generators are not minimal");
    }
    detail::sort_lex(generators_);
  }

  // Edge ideal I(C).
  static SquarefreeIdeal edge_ideal(const Clutter& c) {
    return SquarefreeIdeal(c.table(), c.edges());
  }

  const VertexTable& table() const { return table_; }
  const std::vector<VertexSet>& generators() const { return generators_; }
  std::size_t num_vertices() const { return table_.size(); }
  bool is_zero() const { return generators_.empty(); }

  // d(I), the smallest generator degree. Zero for the zero ideal.
  std::size_t min_degree() const {
    std::size_t d = 0;
    for (VertexSet g : generators_) d = (d == 0) ? g.size() : std::min(d, g.size());
    return d;
  }

  bool generated_in_single_degree() const {
    return std::all_of(generators_.begin(), generators_.end(),
                       [&](VertexSet g) { return g.size() == min_degree(); });
  }

  // The clutter whose edges are the generator supports (partition dropped).
  Clutter clutter() const { return Clutter(table_.without_partition(), generators_); }

  // Squarefree membership of the monomial m_s.
  bool contains(VertexSet s) const {
    return std::any_of(generators_.begin(), generators_.end(),
                       [&](VertexSet g) { return g.subset_of(s); });
  }

  friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

 private:
  VertexTable table_;
  std::vector<VertexSet> generators_;
};

// Supports of a_1, ..., a_d. The regular-sequence ideal is (m_{S_1}, ..., m_{S_d}).
struct AdmissibleSequence {
  std::vector<VertexSet> supports;

  VertexSet support_union() const {
    VertexSet w;
    for (VertexSet s : supports) w = w | s;
    return w;
  }

  friend bool operator==(const AdmissibleSequence&, const AdmissibleSequence&) = default;
};

struct AdmissibilityCheck {
  bool admissible = false;
  std::string diagnostic;

  explicit operator bool() const { return admissible; }
};

inline SquarefreeIdeal alexander_dual(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero()) throw InvalidInput("alexander_dual: the zero ideal has no dual generators");
  return SquarefreeIdeal(ideal.table(), minimal_vertex_covers(ideal.clutter()));
}

inline AdmissibilityCheck check_admissible(const SquarefreeIdeal& ideal,
                                           const AdmissibleSequence& seq) {
  const auto fail = [](std::string why) { return AdmissibilityCheck{false, std::move(why)}; };
  if (ideal.is_zero()) return fail("the ideal is zero");
  for (VertexSet s : seq.supports) {
    if (s.empty()) return fail("a support is empty");
    if (!s.subset_of(ideal.table().all())) return fail("a support lies outside the vertex range");
  }
  for (std::size_t i = 0; i < seq.supports.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.supports.size(); ++j) {
      if (seq.supports[i].intersects(seq.supports[j])) {
        return fail("supports " + std::to_string(i) + " and " + std::to_string(j) +
                    " are not disjoint");
      }
    }
  }
  if (seq.supports.size() != ideal.min_degree()) {
    return fail("sequence length " + std::to_string(seq.supports.size()) +
                " differs from the minimal generator degree " +
                std::to_string(ideal.min_degree()));
  }
  for (std::size_t i = 0; i < seq.supports.size(); ++i) {
    for (VertexSet g : ideal.generators()) {
      if (!g.intersects(seq.supports[i])) {
        return fail("support " + std::to_string(i) + " misses generator " +
                    ideal.table().format(g) + ", so it is not in the Alexander dual");
      }
    }
  }
  return {true, ""};
}

// The d-partite clutter C|_W, W the union of the supports, partitioned by the
// supports in sequence order. Only the degree-d generators survive.
inline Clutter reduce_to_w(const SquarefreeIdeal& ideal, const AdmissibleSequence& seq) {
  if (auto check = check_admissible(ideal, seq); !check) {
    throw InvalidInput("reduce_to_w: not admissible: " + check.diagnostic);
  }
  const VertexSet w = seq.support_union();
  const std::size_t d = seq.supports.size();
  std::vector<Vertex> vertices;
  for (VertexId v : w) {
    std::size_t part = 0;
    while (!seq.supports[part].contains(v)) ++part;
    vertices.push_back({ideal.table().name(v), part});
  }
  std::vector<VertexSet> edges;
  for (VertexSet g : ideal.generators()) {
    if (g.size() != d) continue;
    for (VertexSet s : seq.supports) {
      if ((g & s).size() != 1) {
        throw ConsistencyError("reduce_to_w: degree-d generator " + ideal.table().format(g) +
                               " is not a transversal of the supports");
      }
    }
    edges.push_back(compress(g, w));
  }
  return Clutter(VertexTable(std::move(vertices)), std::move(edges));
}

// I(C^c): the ideal linked to I(C)^A through the parts, whose Alexander dual
// is (a : I(C)^A).
inline SquarefreeIdeal linkage_ideal(const Clutter& c) {
  return SquarefreeIdeal::edge_ideal(d_partite_complement(c));
}

// Minimal generators of the colon ideal (a : J) by exhaustion over the
// squarefree monomials of `universe`. m_s is in the colon iff for every
// generator g some support S_i lies in s ∪ g. The unit ideal is reported as
// the single generator ∅.
inline std::vector<VertexSet> colon_by_exhaustion(const std::vector<VertexSet>& sequence,
                                                  const std::vector<VertexSet>& ideal_generators,
                                                  VertexSet universe) {
  require_enumerable(universe.size(), "colon_by_exhaustion");
  std::vector<VertexSet> members;
  const std::uint64_t top = universe.bits();
  for (std::uint64_t sub = top;; sub = (sub - 1) & top) {
    const VertexSet s(sub);
    const bool in_colon = std::all_of(ideal_generators.begin(), ideal_generators.end(), [&](VertexSet g) {
      return std::any_of(sequence.begin(), sequence.end(),
                         [&](VertexSet a) { return a.subset_of(s | g); });
    });
    if (in_colon) members.push_back(s);
    if (sub == 0) break;
  }
  return detail::minimal_sets(std::move(members));
}

// Exhaustive search for d = d(I) pairwise disjoint minimal vertex covers,
// first in lexicographic order. Limited to small vertex counts.
inline std::optional<AdmissibleSequence> find_admissible_sequence(const SquarefreeIdeal& ideal,
                                                                  std::size_t limit = 12) {
  require_enumerable(ideal.num_vertices(), "find_admissible_sequence", limit);
  if (ideal.is_zero()) return std::nullopt;
  const std::size_t d = ideal.min_degree();
  const std::vector<VertexSet> covers = minimal_vertex_covers(ideal.clutter());
  std::vector<VertexSet> chosen;
  std::function<bool(std::size_t, VertexSet)> search = [&](std::size_t from, VertexSet used) {
    if (chosen.size() == d) return true;
    for (std::size_t k = from; k < covers.size(); ++k) {
      if (covers[k].intersects(used)) continue;
      chosen.push_back(covers[k]);
      if (search(k + 1, used | covers[k])) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(0, VertexSet{})) return std::nullopt;
  AdmissibleSequence seq{chosen};
  // Order parts by their smallest vertex so the partition follows ≺.
  std::sort(seq.supports.begin(), seq.supports.end(),
            [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
  return seq;
}

}  // namespace linstrand
