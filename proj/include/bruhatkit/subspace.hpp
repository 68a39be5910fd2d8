#pragma once

#include <vector>

#include "bruhatkit/errors.hpp"
#include "bruhatkit/scalar.hpp"

namespace bruhatkit {

using Vector = std::vector<Scalar>;

namespace detail {

// In-place reduced row echelon form; returns the pivot columns.  Zero rows
// are removed.  Over a field the RREF basis is canonical, so subspace
// equality is row-list equality.
inline std::vector<int> rref(std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  const int cols = static_cast<int>(rows[0].size());
  std::vector<int> pivots;
  int rank = 0;
  for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if (!rows[i][col].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const Scalar inv = rows[rank][col].inverse();
    for (int j = col; j < cols; ++j) rows[rank][j] = rows[rank][j] * inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][col].is_zero()) continue;
      const Scalar f = rows[i][col];
      for (int j = col; j < cols; ++j) rows[i][j] = rows[i][j] - f * rows[rank][j];
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank, Vector());
  return pivots;
}

}  // namespace detail

// A linear subspace of F^D, stored as a canonical (RREF) generator list.
class Subspace {
 public:
  static Subspace zero(const Ring& ring, int ambient) { return Subspace(ring, ambient, {}); }

  static Subspace full(const Ring& ring, int ambient) {
    std::vector<Vector> rows;
    for (int i = 0; i < ambient; ++i) {
      Vector e(ambient, Scalar::zero(ring));
      e[i] = Scalar::one(ring);
      rows.push_back(std::move(e));
    }
    return Subspace(ring, ambient, std::move(rows));
  }

  static Subspace span(const Ring& ring, int ambient, std::vector<Vector> generators) {
    return Subspace(ring, ambient, std::move(generators));
  }

  const Ring& ring() const { return ring_; }
  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vector>& basis() const { return rows_; }

  bool contains(const Vector& v) const {
    if (static_cast<int>(v.size()) != ambient_) {
      throw Error("DimensionMismatch", "vector length differs from ambient dimension");
    }
    Vector r = v;
    for (const auto& row : rows_) {
      int lead = leading_index(row);
      if (!r[lead].is_zero()) {
        const Scalar f = r[lead];  // basis rows have leading entry 1
        for (int j = 0; j < ambient_; ++j) r[j] = r[j] - f * row[j];
      }
    }
    for (const auto& s : r) {
      if (!s.is_zero()) return false;
    }
    return true;
  }

  bool contains(const Subspace& other) const {
    for (const auto& row : other.rows_) {
      if (!contains(row)) return false;
    }
    return true;
  }

  bool operator==(const Subspace& other) const {
    return ring_ == other.ring_ && ambient_ == other.ambient_ && rows_ == other.rows_;
  }
  bool operator!=(const Subspace& other) const { return !(*this == other); }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    a.check_compatible(b);
    std::vector<Vector> rows = a.rows_;
    rows.insert(rows.end(), b.rows_.begin(), b.rows_.end());
    return Subspace(a.ring_, a.ambient_, std::move(rows));
  }

  // Zassenhaus: row reduce [u | u; w | 0]; the rows whose left half became
  // zero carry a basis of the intersection in their right half.
  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    a.check_compatible(b);
    const int d = a.ambient_;
    const Scalar z = Scalar::zero(a.ring_);
    std::vector<Vector> block;
    for (const auto& u : a.rows_) {
      Vector row(u);
      row.insert(row.end(), u.begin(), u.end());
      block.push_back(std::move(row));
    }
    for (const auto& w : b.rows_) {
      Vector row(w);
      row.insert(row.end(), d, z);
      block.push_back(std::move(row));
    }
    detail::rref(block);
    std::vector<Vector> inter;
    for (const auto& row : block) {
      bool left_zero = true;
      for (int j = 0; j < d && left_zero; ++j) left_zero = row[j].is_zero();
      if (left_zero) inter.emplace_back(row.begin() + d, row.end());
    }
    return Subspace(a.ring_, d, std::move(inter));
  }

  // Basis vectors of `outer` extending a basis of `inner` (inner must be
  // contained in outer); their span is a complement of inner in outer.
  friend std::vector<Vector> extend_basis(const Subspace& inner, const Subspace& outer) {
    inner.check_compatible(outer);
    if (!outer.contains(inner)) {
      throw Error("DimensionMismatch", "inner subspace is not contained in outer");
    }
    std::vector<Vector> work = inner.rows_;
    std::vector<Vector> extension;
    for (const auto& candidate : outer.rows_) {
      std::vector<Vector> probe = work;
      probe.push_back(candidate);
      detail::rref(probe);
      if (static_cast<int>(probe.size()) > static_cast<int>(work.size())) {
        work = std::move(probe);
        extension.push_back(candidate);
      }
    }
    return extension;
  }

 private:
  Subspace(const Ring& ring, int ambient, std::vector<Vector> rows)
      : ring_(ring), ambient_(ambient), rows_(std::move(rows)) {
    if (!ring_.is_field()) throw Error("NotAField", "subspaces need a field, got " + ring_.name());
    if (ambient_ < 0) throw Error("DimensionMismatch", "ambient dimension must be >= 0");
    for (const auto& row : rows_) {
      if (static_cast<int>(row.size()) != ambient_) {
        throw Error("DimensionMismatch", "generator length differs from ambient dimension");
      }
      for (const auto& s : row) {
        if (s.ring() != ring_) throw Error("RingMismatch", "generator entries in a different ring");
      }
    }
    detail::rref(rows_);
  }

  int leading_index(const Vector& row) const {
    for (int j = 0; j < ambient_; ++j) {
      if (!row[j].is_zero()) return j;
    }
    throw Error("InternalContradiction", "zero row in a reduced basis");
  }

  void check_compatible(const Subspace& other) const {
    if (ring_ != other.ring_) throw Error("RingMismatch", "subspaces over different rings");
    if (ambient_ != other.ambient_) {
      throw Error("DimensionMismatch", "subspaces of different ambient dimension");
    }
  }

  Ring ring_;
  int ambient_;
  std::vector<Vector> rows_;
};

}  // namespace bruhatkit
