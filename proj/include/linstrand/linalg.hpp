#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linstrand/error.hpp"

namespace linstrand {

// Coefficient field: the rationals or GF(p).
class Field {
 public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }

  static Field prime(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31)) {
      throw InvalidInput("field: prime must satisfy 2 <= p < 2^31");
    }
    for (std::uint64_t q = 2; q * q <= p; ++q) {
      if (p % q == 0) throw InvalidInput("field: " + std::to_string(p) + " is not prime");
    }
    return Field(Kind::prime, p);
  }

  // "q" or "fp:<p>"
  static Field parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("fp:", 0) == 0) {
      const std::string digits = text.substr(3);
      if (digits.empty() ||
          !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
          digits.size() > 12) {
        throw InvalidInput("field: cannot parse '" + text + "'");
      }
      return prime(std::stoull(digits));
    }
    throw InvalidInput("field: expected 'q' or 'fp:<prime>', got '" + text + "'");
  }

  Kind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }

  std::string to_string() const {
    return kind_ == Kind::rationals ? "q" : "fp:" + std::to_string(p_);
  }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

// Sparse integer matrix. Every matrix in this library has integral entries
// (mostly ±1); ranks are taken after mapping them into a Field.
class Matrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    std::int64_t value;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    std::erase_if(entries_, [](const Entry& e) { return e.value == 0; });
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
      return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (entries_[k].row >= rows_ || entries_[k].col >= cols_) {
        throw InvalidInput("matrix: entry index out of range");
      }
      if (k > 0 && entries_[k].row == entries_[k - 1].row &&
          entries_[k].col == entries_[k - 1].col) {
        throw InvalidInput("matrix: duplicate entry position");
      }
    }
  }

  static Matrix identity(std::size_t n) {
    std::vector<Entry> es;
    for (std::size_t i = 0; i < n; ++i) es.push_back({i, i, 1});
    return Matrix(n, n, std::move(es));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  std::int64_t at(std::size_t r, std::size_t c) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{r, c},
                               [](const Entry& e, const std::pair<std::size_t, std::size_t>& key) {
                                 return std::tie(e.row, e.col) < std::tie(key.first, key.second);
                               });
    return (it != entries_.end() && it->row == r && it->col == c) ? it->value : 0;
  }

  Matrix transpose() const {
    std::vector<Entry> es;
    es.reserve(entries_.size());
    for (const Entry& e : entries_) es.push_back({e.col, e.row, e.value});
    return Matrix(cols_, rows_, std::move(es));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix: shape mismatch in product");
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> acc;
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> b_rows(b.rows_);
    for (const Entry& e : b.entries_) b_rows[e.row].emplace_back(e.col, e.value);
    for (const Entry& e : a.entries_) {
      for (auto [col, v] : b_rows[e.col]) acc[{e.row, col}] += e.value * v;
    }
    std::vector<Entry> es;
    for (auto [pos, v] : acc) {
      if (v != 0) es.push_back({pos.first, pos.second, v});
    }
    return Matrix(a.rows_, b.cols_, std::move(es));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> entries_;
};

namespace detail {

struct RationalOps {
  using value_type = boost::multiprecision::cpp_rational;
  value_type from_int(std::int64_t v) const { return value_type(v); }
  static bool is_zero(const value_type& v) { return v == 0; }
  value_type sub_mul(const value_type& a, const value_type& f, const value_type& b) const {
    return a - f * b;
  }
  value_type div(const value_type& a, const value_type& b) const { return a / b; }
};

struct PrimeOps {
  using value_type = std::uint64_t;
  std::uint64_t p;

  value_type from_int(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p);
    return static_cast<value_type>(((v % m) + m) % m);
  }
  static bool is_zero(value_type v) { return v == 0; }
  value_type sub_mul(value_type a, value_type f, value_type b) const {
    return (a + p - (f * b) % p) % p;
  }
  value_type inverse(value_type a) const {
    value_type result = 1;
    value_type base = a;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1U) result = result * base % p;
      base = base * base % p;
    }
    return result;
  }
  value_type div(value_type a, value_type b) const { return a * inverse(b) % p; }
};

// Sparse Gaussian elimination. Each step takes the nonzero minimizing the
// Markowitz count (r-1)(c-1) over the active submatrix.
template <class Ops>
std::size_t sparse_rank(const Matrix& m, const Ops& ops) {
  using T = typename Ops::value_type;
  using Row = std::vector<std::pair<std::size_t, T>>;

  std::vector<Row> rows(m.rows());
  for (const auto& e : m.entries()) {
    T v = ops.from_int(e.value);
    if (!Ops::is_zero(v)) rows[e.row].emplace_back(e.col, std::move(v));
  }
  std::vector<std::size_t> active;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].empty()) active.push_back(r);
  }

  std::size_t rank = 0;
  std::vector<std::size_t> col_count(m.cols(), 0);
  while (!active.empty()) {
    std::fill(col_count.begin(), col_count.end(), 0);
    for (std::size_t r : active) {
      for (const auto& [c, v] : rows[r]) ++col_count[c];
    }
    std::size_t best_slot = 0;
    std::size_t best_col = 0;
    std::size_t best_cost = static_cast<std::size_t>(-1);
    for (std::size_t slot = 0; slot < active.size() && best_cost != 0; ++slot) {
      const Row& row = rows[active[slot]];
      for (const auto& [c, v] : row) {
        const std::size_t cost = (row.size() - 1) * (col_count[c] - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_slot = slot;
          best_col = c;
          if (cost == 0) break;
        }
      }
    }

    const std::size_t pivot_row = active[best_slot];
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_slot));
    ++rank;
    const Row& pivot = rows[pivot_row];
    const T pivot_value =
        std::find_if(pivot.begin(), pivot.end(), [&](const auto& x) { return x.first == best_col; })->second;

    std::vector<std::size_t> still_active;
    for (std::size_t r : active) {
      Row& row = rows[r];
      auto hit = std::find_if(row.begin(), row.end(), [&](const auto& x) { return x.first == best_col; });
      if (hit != row.end()) {
        const T factor = ops.div(hit->second, pivot_value);
        Row merged;
        merged.reserve(row.size() + pivot.size());
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < row.size() || j < pivot.size()) {
          if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            merged.push_back(std::move(row[i++]));
          } else if (i == row.size() || pivot[j].first < row[i].first) {
            T v = ops.sub_mul(ops.from_int(0), factor, pivot[j].second);
            if (!Ops::is_zero(v)) merged.emplace_back(pivot[j].first, std::move(v));
            ++j;
          } else {
            T v = ops.sub_mul(row[i].second, factor, pivot[j].second);
            if (!Ops::is_zero(v)) merged.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
          }
        }
        row = std::move(merged);
      }
      if (!row.empty()) still_active.push_back(r);
    }
    active = std::move(still_active);
  }
  return rank;
}

}  // namespace detail

inline std::size_t rank(const Matrix& m, const Field& f) {
  if (m.is_zero()) return 0;
  if (f.kind() == Field::Kind::rationals) return detail::sparse_rank(m, detail::RationalOps{});
  return detail::sparse_rank(m, detail::PrimeOps{f.characteristic()});
}

// Finite chain complex ... -> C_k -> C_{k-1} -> ... over degrees
// lowest..highest. boundary(k) is the dim(k-1) x dim(k) matrix of C_k -> C_{k-1}.
class ChainComplex {
 public:
  ChainComplex() = default;

  ChainComplex(int lowest_degree, std::vector<std::size_t> dims,
               std::vector<Matrix> boundaries)
      : lowest_(lowest_degree), dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
    if (dims_.empty() ? !boundaries_.empty() : boundaries_.size() + 1 != dims_.size()) {
      throw InvalidInput("chain complex: need one boundary map per adjacent pair of degrees");
    }
    for (std::size_t k = 0; k < boundaries_.size(); ++k) {
      if (boundaries_[k].rows() != dims_[k] || boundaries_[k].cols() != dims_[k + 1]) {
        throw InvalidInput("chain complex: boundary shape does not match basis sizes");
      }
    }
  }

  int lowest_degree() const { return lowest_; }
  int highest_degree() const { return lowest_ + static_cast<int>(dims_.size()) - 1; }
  bool empty() const { return dims_.empty(); }

  std::size_t dim(int k) const {
    if (k < lowest_ || k > highest_degree()) return 0;
    return dims_[static_cast<std::size_t>(k - lowest_)];
  }

  // C_k -> C_{k-1}; a zero map of the right shape outside the stored range.
  Matrix boundary(int k) const {
    if (k <= lowest_ || k > highest_degree()) return Matrix(dim(k - 1), dim(k));
    return boundaries_[static_cast<std::size_t>(k - lowest_ - 1)];
  }

  bool squares_to_zero() const {
    for (int k = lowest_ + 2; k <= highest_degree(); ++k) {
      if (!(boundary(k - 1) * boundary(k)).is_zero()) return false;
    }
    return true;
  }

 private:
  int lowest_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> boundaries_;
};

// dim H_k = dim C_k - rank ∂_k - rank ∂_{k+1}, for every stored degree.
inline std::map<int, std::size_t> homology_dims(const ChainComplex& c, const Field& f) {
  std::map<int, std::size_t> out;
  if (c.empty()) return out;
  std::map<int, std::size_t> ranks;
  for (int k = c.lowest_degree(); k <= c.highest_degree() + 1; ++k) {
    ranks[k] = rank(c.boundary(k), f);
  }
  for (int k = c.lowest_degree(); k <= c.highest_degree(); ++k) {
    const auto used = static_cast<std::int64_t>(ranks[k] + ranks[k + 1]);
    const auto h = static_cast<std::int64_t>(c.dim(k)) - used;
    if (h < 0) {
      throw ConsistencyError("homology: negative dimension in degree " + std::to_string(k));
    }
    out[k] = static_cast<std::size_t>(h);
  }
  return out;
}

// Cohomology of the dual cochain complex, computed from the transposed
// coboundaries rather than reusing homology ranks.
inline std::map<int, std::size_t> cohomology_dims(const ChainComplex& c, const Field& f) {
  std::map<int, std::size_t> out;
  if (c.empty()) return out;
  std::map<int, std::size_t> coranks;  // rank of δ^k : C^k -> C^{k+1}
  for (int k = c.lowest_degree() - 1; k <= c.highest_degree(); ++k) {
    coranks[k] = rank(c.boundary(k + 1).transpose(), f);
  }
  for (int k = c.lowest_degree(); k <= c.highest_degree(); ++k) {
    const auto h = static_cast<std::int64_t>(c.dim(k)) -
                   static_cast<std::int64_t>(coranks[k] + coranks[k - 1]);
    if (h < 0) {
      throw ConsistencyError("cohomology: negative dimension in degree " + std::to_string(k));
    }
    out[k] = static_cast<std::size_t>(h);
  }
  return out;
}

}  // namespace linstrand
