#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "liectrl/rational.hpp"

namespace liectrl {

/// Sparse exact linear algebra over column indices: row echelon reduction and
/// nullspace extraction for homogeneous systems with rational coefficients.
class SparseRationalSystem {
 public:
  using Row = std::map<std::uint64_t, Rational>;

  /// Reduces the row against the current echelon set and stores it when
  /// independent. Keeps the set in fully reduced form (no row contains the
  /// pivot of another).
  void add_row(Row row) {
    reduce(row);
    if (row.empty()) return;
    const auto& [pivot, lead] = *row.begin();
    if (lead != 1) {
      const Rational inv = Rational(1) / lead;
      for (auto& [c, v] : row) v *= inv;
    }
    for (auto& [p, r] : rows_) {
      auto it = r.find(pivot);
      if (it != r.end()) add_scaled(r, row, -it->second);
    }
    rows_.emplace(pivot, std::move(row));
  }

  std::size_t rank() const { return rows_.size(); }

  const std::map<std::uint64_t, Row>& rows() const { return rows_; }

  bool is_pivot(std::uint64_t col) const { return rows_.contains(col); }

  /// Basis of the solution space over the given column universe, one vector
  /// per free column in ascending order. Each vector sets its free column to
  /// one and solves exactly for the pivot columns.
  std::vector<Row> nullspace(const std::vector<std::uint64_t>& columns) const {
    std::vector<Row> out;
    for (std::uint64_t free : columns) {
      if (is_pivot(free)) continue;
      Row v;
      v.emplace(free, Rational(1));
      for (const auto& [pivot, r] : rows_) {
        auto it = r.find(free);
        if (it != r.end()) v.emplace(pivot, -it->second);
      }
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  static void add_scaled(Row& target, const Row& src, const Rational& s) {
    for (const auto& [c, v] : src) {
      auto [it, inserted] = target.try_emplace(c, Rational(v * s));
      if (!inserted) {
        it->second += v * s;
        if (it->second == 0) target.erase(it);
      }
    }
  }

  void reduce(Row& row) const {
    std::uint64_t at = 0;
    while (true) {
      auto it = row.lower_bound(at);
      if (it == row.end()) break;
      const std::uint64_t col = it->first;
      auto p = rows_.find(col);
      if (p == rows_.end()) {
        at = col + 1;
        continue;
      }
      add_scaled(row, p->second, -it->second);
      at = col + 1;
    }
  }

  // pivot column -> row; a row's pivot is its smallest column
  std::map<std::uint64_t, Row> rows_;
};

}  // namespace liectrl
