#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linstrand/clutter.hpp"
#include "linstrand/error.hpp"
#include "linstrand/ideal.hpp"
#include "linstrand/linalg.hpp"
#include "linstrand/simplicial.hpp"
#include "linstrand/vertex_set.hpp"

namespace linstrand {

// One nonzero entry of the strand differential F_i -> F_{i-1}:
// e_source ↦ sign · multiplier · e_target, with target = source \ {multiplier}.
struct StrandEntry {
  std::size_t target;
  std::size_t source;
  int sign;
  VertexId multiplier;

  friend bool operator==(const StrandEntry&, const StrandEntry&) = default;
};

// The first linear strand as a multigraded complex of free modules. Level i
// has one generator S(-A) for each basis set A (|A| = i + d); the
// differentials carry a ±1 scalar and a variable. The skeleton forgets the
// variables.
class StrandComplex {
 public:
  StrandComplex(VertexTable table, std::size_t d, std::vector<std::vector<VertexSet>> levels,
                std::vector<std::vector<StrandEntry>> differentials)
      : table_(std::move(table)),
        d_(d),
        levels_(std::move(levels)),
        differentials_(std::move(differentials)) {
    if (differentials_.size() != levels_.size()) {
      throw InvalidInput("strand: one differential slot per level is required");
    }
    if (!levels_.empty() && !differentials_[0].empty()) {
      throw InvalidInput("strand: level 0 has no outgoing differential");
    }
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      for (VertexSet a : levels_[i]) {
        if (a.size() != i + d_) throw InvalidInput("strand: basis set of the wrong size");
      }
      for (const StrandEntry& e : differentials_[i]) {
        if (e.source >= levels_[i].size() || e.target >= levels_[i - 1].size()) {
          throw InvalidInput("strand: differential entry out of range");
        }
        if (e.sign != 1 && e.sign != -1) throw InvalidInput("strand: scalar must be ±1");
        const VertexSet src = levels_[i][e.source];
        if (!src.contains(e.multiplier) || levels_[i - 1][e.target] != src.without(e.multiplier)) {
          throw InvalidInput("strand: multiplier does not match source and target");
        }
      }
    }
  }

  const VertexTable& table() const { return table_; }
  std::size_t d() const { return d_; }
  std::size_t n() const { return table_.size(); }
  std::size_t num_levels() const { return levels_.size(); }

  const std::vector<VertexSet>& level(std::size_t i) const { return levels_.at(i); }
  std::size_t rank(std::size_t i) const { return i < levels_.size() ? levels_[i].size() : 0; }

  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> out;
    for (const auto& l : levels_) out.push_back(l.size());
    return out;
  }

  // Entries of F_i -> F_{i-1}, i >= 1.
  const std::vector<StrandEntry>& differential(std::size_t i) const { return differentials_.at(i); }

  Matrix skeleton(std::size_t i) const {
    std::vector<Matrix::Entry> es;
    for (const StrandEntry& e : differentials_.at(i)) es.push_back({e.target, e.source, e.sign});
    return Matrix(rank(i - 1), rank(i), std::move(es));
  }

  ChainComplex skeleton_complex() const {
    if (levels_.empty()) return ChainComplex(0, {0}, {});
    std::vector<Matrix> maps;
    for (std::size_t i = 1; i < levels_.size(); ++i) maps.push_back(skeleton(i));
    return ChainComplex(0, ranks(), std::move(maps));
  }

  // The same differential written over vertex covers D = V \ A with sign
  // (-1)^{#{w in D : w ≺ v}}. It differs from the skeleton by the diagonal
  // change of basis e_A ↦ (-1)^{Σ_{u∈A} id(u)} e_A.
  Matrix cover_form_skeleton(std::size_t i) const {
    std::vector<Matrix::Entry> es;
    for (const StrandEntry& e : differentials_.at(i)) {
      const VertexSet cover = table_.all() - levels_[i][e.source];
      const int sign = (cover.position(e.multiplier) % 2 == 0) ? 1 : -1;
      es.push_back({e.target, e.source, sign});
    }
    return Matrix(rank(i - 1), rank(i), std::move(es));
  }

 private:
  VertexTable table_;
  std::size_t d_;
  std::vector<std::vector<VertexSet>> levels_;
  std::vector<std::vector<StrandEntry>> differentials_;
};

// Level i: sets A, |A| = i + d, independent in C^c and meeting every part.
// e_A ↦ Σ (-1)^{pos(v,A)} v e_{A\v} over the v whose removal keeps every
// part met.
inline StrandComplex first_linear_strand(const Clutter& c) {
  require_partition(c, "first_linear_strand");
  const std::size_t n = c.num_vertices();
  require_enumerable(n, "first_linear_strand");
  const std::size_t d = c.num_parts();
  const auto parts = c.table().part_sets();
  const Clutter complement = d_partite_complement(c);

  const auto meets_every_part = [&](VertexSet s) {
    for (VertexSet p : parts) {
      if (!s.intersects(p)) return false;
    }
    return true;
  };

  std::vector<std::vector<VertexSet>> levels;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const VertexSet a(bits);
    if (a.size() < d || !meets_every_part(a) || !complement.is_independent(a)) continue;
    const std::size_t i = a.size() - d;
    if (levels.size() <= i) levels.resize(i + 1);
    levels[i].push_back(a);
  }
  for (auto& l : levels) std::sort(l.begin(), l.end(), lex_less);

  if (levels.empty() ? !c.edges().empty() : levels[0] != c.edges()) {
    throw ConsistencyError("first_linear_strand: level 0 does not match the edge set");
  }

  std::vector<std::vector<StrandEntry>> differentials(levels.size());
  for (std::size_t i = 1; i < levels.size(); ++i) {
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t k = 0; k < levels[i - 1].size(); ++k) index.emplace(levels[i - 1][k].bits(), k);
    for (std::size_t j = 0; j < levels[i].size(); ++j) {
      const VertexSet a = levels[i][j];
      int sign = 1;
      for (VertexId v : a) {
        auto it = index.find(a.without(v).bits());
        if (it != index.end()) differentials[i].push_back({it->second, j, sign, v});
        sign = -sign;
      }
    }
  }
  return StrandComplex(c.table(), d, std::move(levels), std::move(differentials));
}

// For a general ideal: reduce to C|_W first, so n = |W|.
inline StrandComplex first_linear_strand(const SquarefreeIdeal& ideal, const AdmissibleSequence& seq) {
  return first_linear_strand(reduce_to_w(ideal, seq));
}

struct SupportReport {
  std::vector<std::string> mismatches;

  bool supported() const { return mismatches.empty(); }
  explicit operator bool() const { return supported(); }
};

// Checks that level i equals the (i+d-1)-faces of the pair, in order, and
// that every skeleton matrix equals the relative boundary entrywise.
inline SupportReport verify_support(const StrandComplex& s, const SimplicialPair& p) {
  SupportReport report;
  if (!(s.table() == p.x().table())) {
    report.mismatches.push_back("vertex tables differ");
    return report;
  }
  const int shift = static_cast<int>(s.d()) - 1;
  for (int k = -1; k <= std::max(p.x().dimension(), shift + static_cast<int>(s.num_levels())); ++k) {
    const int i = k - shift;
    const auto& faces = p.faces_of_dim(k);
    const bool in_range = i >= 0 && i < static_cast<int>(s.num_levels());
    if (!in_range) {
      if (!faces.empty()) {
        report.mismatches.push_back("pair has " + std::to_string(faces.size()) + " faces of dimension " +
                                    std::to_string(k) + " outside the strand");
      }
      continue;
    }
    if (faces != s.level(static_cast<std::size_t>(i))) {
      report.mismatches.push_back("level " + std::to_string(i) + " basis differs from the " +
                                  std::to_string(k) + "-faces of the pair");
    }
  }
  if (!report.mismatches.empty()) return report;

  const ChainComplex relative = relative_chain_complex(p);
  for (std::size_t i = 1; i < s.num_levels(); ++i) {
    const Matrix strand_map = s.skeleton(i);
    const Matrix boundary = relative.boundary(static_cast<int>(i) + shift);
    if (strand_map == boundary) continue;
    for (std::size_t r = 0; r < strand_map.rows(); ++r) {
      for (std::size_t col = 0; col < strand_map.cols(); ++col) {
        if (strand_map.at(r, col) != boundary.at(r, col)) {
          report.mismatches.push_back("level " + std::to_string(i) + " entry (" +
                                      s.table().format(s.level(i - 1)[r]) + ", " +
                                      s.table().format(s.level(i)[col]) + "): strand " +
                                      std::to_string(strand_map.at(r, col)) + ", boundary " +
                                      std::to_string(boundary.at(r, col)));
        }
      }
    }
  }
  return report;
}

// Homology of the strand in the squarefree multidegree b: keep the basis sets
// contained in b and the entries between them.
inline std::map<int, std::size_t> strand_homology_at(const StrandComplex& s, VertexSet b, const Field& field) {
  if (!b.subset_of(s.table().all())) throw InvalidInput("strand_homology_at: multidegree outside W");
  std::map<int, std::size_t> out;
  if (s.num_levels() == 0) return out;

  std::vector<std::vector<std::size_t>> kept(s.num_levels());
  std::vector<std::vector<std::size_t>> slot(s.num_levels());
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < s.num_levels(); ++i) {
    slot[i].assign(s.rank(i), static_cast<std::size_t>(-1));
    for (std::size_t k = 0; k < s.rank(i); ++k) {
      if (s.level(i)[k].subset_of(b)) {
        slot[i][k] = kept[i].size();
        kept[i].push_back(k);
      }
    }
    dims.push_back(kept[i].size());
  }
  std::vector<Matrix> maps;
  for (std::size_t i = 1; i < s.num_levels(); ++i) {
    std::vector<Matrix::Entry> es;
    for (const StrandEntry& e : s.differential(i)) {
      const std::size_t src = slot[i][e.source];
      const std::size_t tgt = slot[i - 1][e.target];
      if (src != static_cast<std::size_t>(-1) && tgt != static_cast<std::size_t>(-1)) {
        es.push_back({tgt, src, e.sign});
      }
    }
    maps.emplace_back(dims[i - 1], dims[i], std::move(es));
  }
  return homology_dims(ChainComplex(0, std::move(dims), std::move(maps)), field);
}

}  // namespace linstrand
