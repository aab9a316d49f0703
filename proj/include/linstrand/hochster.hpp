#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "linstrand/ideal.hpp"
#include "linstrand/linalg.hpp"
#include "linstrand/simplicial.hpp"
#include "linstrand/vertex_set.hpp"

namespace linstrand {

// Multigraded and graded Betti numbers of an ideal (homological degree 0 is
// the generators). Only nonzero entries are stored.
class BettiTable {
 public:
  BettiTable() = default;

  explicit BettiTable(std::map<std::pair<int, VertexSet>, std::size_t> multigraded)
      : multigraded_(std::move(multigraded)) {
    for (const auto& [key, value] : multigraded_) {
      graded_[{key.first, static_cast<int>(key.second.size())}] += value;
    }
  }

  std::size_t multigraded(int i, VertexSet sigma) const {
    auto it = multigraded_.find({i, sigma});
    return it == multigraded_.end() ? 0 : it->second;
  }

  std::size_t graded(int i, int j) const {
    auto it = graded_.find({i, j});
    return it == graded_.end() ? 0 : it->second;
  }

  const std::map<std::pair<int, VertexSet>, std::size_t>& multigraded_entries() const {
    return multigraded_;
  }
  const std::map<std::pair<int, int>, std::size_t>& graded_entries() const { return graded_; }

  // -1 when every entry vanishes.
  int projective_dimension() const {
    int top = -1;
    for (const auto& [key, value] : graded_) top = std::max(top, key.first);
    return top;
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, VertexSet>, std::size_t> multigraded_;
  std::map<std::pair<int, int>, std::size_t> graded_;
};

// Hochster's formula, β_{i,σ}(I) = dim H̃_{|σ|-i-2}(Δ(I)|_σ), evaluated over
// every σ ⊆ V (or every σ with |σ| <= degree_cap). Δ(I) is the independence
// complex of the generator clutter. The zero ideal yields an empty table.
inline BettiTable betti_table(const SquarefreeIdeal& ideal, const Field& field,
                              std::optional<std::size_t> degree_cap = std::nullopt,
                              std::size_t limit = kEnumerationGuard) {
  const std::size_t n = ideal.num_vertices();
  require_enumerable(n, "betti_table", limit);
  std::map<std::pair<int, VertexSet>, std::size_t> entries;
  if (ideal.is_zero()) return BettiTable(std::move(entries));

  const std::size_t total = std::size_t{1} << n;
  std::vector<bool> independent(total);
  for (std::size_t s = 0; s < total; ++s) independent[s] = !ideal.contains(VertexSet(s));

  for (std::size_t sigma_bits = 1; sigma_bits < total; ++sigma_bits) {
    const VertexSet sigma(sigma_bits);
    if (degree_cap && sigma.size() > *degree_cap) continue;
    // An independent σ restricts Δ to a full simplex, which is acyclic.
    if (independent[sigma_bits]) continue;

    detail::FaceLists faces(sigma.size() + 1);
    for (std::uint64_t sub = sigma_bits;; sub = (sub - 1) & sigma_bits) {
      if (independent[sub]) faces[VertexSet(sub).size()].push_back(VertexSet(sub));
      if (sub == 0) break;
    }
    detail::sort_faces(faces);
    while (!faces.empty() && faces.back().empty()) faces.pop_back();
    const int top = static_cast<int>(faces.size()) - 2;
    const auto homology = homology_dims(detail::oriented_complex(faces, -1, top), field);
    for (const auto& [k, h] : homology) {
      const int i = static_cast<int>(sigma.size()) - k - 2;
      if (h != 0 && i >= 0) entries[{i, sigma}] = h;
    }
  }
  return BettiTable(std::move(entries));
}

// d-linear: generated in one degree d and β_{i,j} = 0 whenever j != i + d.
// The zero ideal counts as linear.
inline bool is_linear_by_betti(const SquarefreeIdeal& ideal, const Field& field) {
  if (ideal.is_zero()) return true;
  if (!ideal.generated_in_single_degree()) return false;
  const int d = static_cast<int>(ideal.min_degree());
  const BettiTable table = betti_table(ideal, field);
  for (const auto& [key, value] : table.graded_entries()) {
    if (value != 0 && key.second != key.first + d) return false;
  }
  return true;
}

}  // namespace linstrand
