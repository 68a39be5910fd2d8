#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "bruhatkit/errors.hpp"
#include "bruhatkit/permutation.hpp"
#include "bruhatkit/scalar.hpp"

namespace bruhatkit {

// N x N matrix over an exact ring, equal to the identity outside a finite
// leading window.  This class is closed under products and (triangular)
// inverses and contains every finitely supported permutation matrix, which
// is all the column-finite algebra the algorithms here need.  Trailing
// identity rows/columns are trimmed so equality is canonical.
class ColMatrix {
 public:
  static ColMatrix identity(const Ring& ring) { return ColMatrix(ring, {}); }

  ColMatrix(const Ring& ring, std::vector<std::vector<Scalar>> block)
      : ring_(ring), block_(std::move(block)) {
    const std::size_t n = block_.size();
    for (const auto& row : block_) {
      if (row.size() != n) throw Error("DimensionMismatch", "window block must be square");
      for (const auto& s : row) {
        if (s.ring() != ring_) throw Error("RingMismatch", "entry ring differs from matrix ring");
      }
    }
    trim();
  }

  const Ring& ring() const { return ring_; }
  int window() const { return static_cast<int>(block_.size()); }

  // 1-based; Kronecker delta outside the window.
  Scalar entry(int i, int j) const {
    if (i < 1 || j < 1) throw Error("InvalidPair", "matrix positions are 1-based");
    if (i <= window() && j <= window()) return block_[i - 1][j - 1];
    return i == j ? Scalar::one(ring_) : Scalar::zero(ring_);
  }

  // Window block extended with identity to size n >= window().
  std::vector<std::vector<Scalar>> dense(int n) const {
    std::vector<std::vector<Scalar>> out(n, std::vector<Scalar>(n, Scalar::zero(ring_)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) out[i][j] = entry(i + 1, j + 1);
    }
    return out;
  }

  bool operator==(const ColMatrix& other) const {
    if (ring_ != other.ring_ || window() != other.window()) return false;
    return block_ == other.block_;
  }
  bool operator!=(const ColMatrix& other) const { return !(*this == other); }

 private:
  void trim() {
    while (!block_.empty()) {
      const std::size_t n = block_.size();
      bool trivial = true;
      for (std::size_t k = 0; k < n && trivial; ++k) {
        trivial = (block_[n - 1][k] == kron(n - 1, k)) && (block_[k][n - 1] == kron(k, n - 1));
      }
      if (!trivial) break;
      block_.pop_back();
      for (auto& row : block_) row.pop_back();
    }
  }

  Scalar kron(std::size_t i, std::size_t j) const {
    return i == j ? Scalar::one(ring_) : Scalar::zero(ring_);
  }

  Ring ring_;
  std::vector<std::vector<Scalar>> block_;
};

// (xy)_{i,j} = sum_n x_{i,n} y_{n,j}; the sum truncates at the joint window
// because both factors have identity tails.
inline ColMatrix multiply(const ColMatrix& x, const ColMatrix& y) {
  if (x.ring() != y.ring()) throw Error("RingMismatch", x.ring().name() + " vs " + y.ring().name());
  const int w = std::max(x.window(), y.window());
  auto a = x.dense(w);
  auto b = y.dense(w);
  std::vector<std::vector<Scalar>> out(w, std::vector<Scalar>(w, Scalar::zero(x.ring())));
  for (int i = 0; i < w; ++i) {
    for (int k = 0; k < w; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < w; ++j) {
        if (b[k][j].is_zero()) continue;
        out[i][j] = out[i][j] + a[i][k] * b[k][j];
      }
    }
  }
  return ColMatrix(x.ring(), std::move(out));
}

inline bool is_upper_triangular(const ColMatrix& g) {
  for (int i = 2; i <= g.window(); ++i) {
    for (int j = 1; j < i; ++j) {
      if (!g.entry(i, j).is_zero()) return false;
    }
  }
  return true;
}

inline bool has_unit_diagonal(const ColMatrix& g) {
  for (int i = 1; i <= g.window(); ++i) {
    if (!g.entry(i, i).is_unit()) return false;
  }
  return true;
}

// Inverse of an upper triangular matrix with unit diagonal, via both of the
// explicit recursions: the right inverse filled column by column,
//   c_{j,n} = -b_{j,j}^{-1} (b_{j,j+1} c_{j+1,n} + ... + b_{j,n} c_{n,n}),
// and the left inverse filled row by row,
//   a_{n,j} = -b_{j,j}^{-1} (a_{n,n} b_{n,j} + ... + a_{n,j-1} b_{j-1,j}).
// The two results must coincide (a = c); a disagreement is a hard failure.
inline ColMatrix triangular_inverse(const ColMatrix& b) {
  if (!is_upper_triangular(b)) {
    throw Error("NotInvertible", "matrix is not upper triangular");
  }
  const int w = b.window();
  for (int i = 1; i <= w; ++i) {
    if (!b.entry(i, i).is_unit()) {
      throw Error("NotInvertible", "diagonal entry at index " + std::to_string(i) +
                                       " (" + b.entry(i, i).str() + ") is not a unit");
    }
  }
  const Scalar zero = Scalar::zero(b.ring());

  std::vector<std::vector<Scalar>> c(w, std::vector<Scalar>(w, zero));
  for (int n = 1; n <= w; ++n) {
    c[n - 1][n - 1] = b.entry(n, n).inverse();
    for (int j = n - 1; j >= 1; --j) {
      Scalar acc = zero;
      for (int k = j + 1; k <= n; ++k) acc = acc + b.entry(j, k) * c[k - 1][n - 1];
      c[j - 1][n - 1] = -(b.entry(j, j).inverse() * acc);
    }
  }

  std::vector<std::vector<Scalar>> a(w, std::vector<Scalar>(w, zero));
  for (int n = 1; n <= w; ++n) {
    a[n - 1][n - 1] = b.entry(n, n).inverse();
    for (int j = n + 1; j <= w; ++j) {
      Scalar acc = zero;
      for (int k = n; k <= j - 1; ++k) acc = acc + a[n - 1][k - 1] * b.entry(k, j);
      a[n - 1][j - 1] = -(b.entry(j, j).inverse() * acc);
    }
  }

  if (a != c) {
    throw Error("InternalContradiction", "left and right triangular inverses disagree");
  }
  return ColMatrix(b.ring(), std::move(c));
}

// L_{q,p}(x): identity plus x in the (q, p) entry.
inline ColMatrix elementary_L(const Ring& ring, int q, int p, const Scalar& x) {
  if (q < 1 || p < 1 || q == p) throw Error("InvalidPair", "need distinct 1-based indices");
  if (x.ring() != ring) throw Error("RingMismatch", "entry ring differs from matrix ring");
  const int w = std::max(q, p);
  ColMatrix id = ColMatrix::identity(ring);
  auto block = id.dense(w);
  block[q - 1][p - 1] = x;
  return ColMatrix(ring, std::move(block));
}

// D_i(r): identity with the unit r in the (i, i) entry.
inline ColMatrix elementary_D(const Ring& ring, int i, const Scalar& r) {
  if (i < 1) throw Error("InvalidPair", "need a 1-based index");
  if (r.ring() != ring) throw Error("RingMismatch", "entry ring differs from matrix ring");
  if (!r.is_unit()) throw Error("NotAUnit", "diagonal scale " + r.str() + " is not a unit");
  auto block = ColMatrix::identity(ring).dense(i);
  block[i - 1][i - 1] = r;
  return ColMatrix(ring, std::move(block));
}

// Permutation matrix: entry(i, j) = [i == sigma(j)], i.e. e_j -> e_{sigma(j)}.
inline ColMatrix permutation_matrix(const Ring& ring, const Permutation& sigma) {
  if (!sigma.is_finitely_supported()) {
    throw Error("InvalidPatch", "permutation matrices need finite support");
  }
  const int w = sigma.max_support();
  std::vector<std::vector<Scalar>> block(w, std::vector<Scalar>(w, Scalar::zero(ring)));
  for (int j = 1; j <= w; ++j) block[sigma(j) - 1][j - 1] = Scalar::one(ring);
  return ColMatrix(ring, std::move(block));
}

namespace detail {

// Fraction-free (Bareiss) elimination; the exact rank of an integer matrix.
inline int bareiss_rank(std::vector<std::vector<BigInt>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int rank = 0;
  BigInt prev = 1;
  while (rank < rows && rank < cols) {
    int pi = -1, pj = -1;
    for (int i = rank; i < rows && pi < 0; ++i) {
      for (int j = rank; j < cols; ++j) {
        if (m[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi < 0) break;
    std::swap(m[rank], m[pi]);
    if (pj != rank) {
      for (int i = 0; i < rows; ++i) std::swap(m[i][rank], m[i][pj]);
    }
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = rank + 1; j < cols; ++j) {
        m[i][j] = (m[rank][rank] * m[i][j] - m[i][rank] * m[rank][j]) / prev;
      }
      m[i][rank] = 0;
    }
    prev = m[rank][rank];
    ++rank;
  }
  return rank;
}

inline int gauss_rank(std::vector<std::vector<Scalar>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (!m[i][col].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const Scalar inv = m[rank][col].inverse();
    for (int i = rank + 1; i < rows; ++i) {
      if (m[i][col].is_zero()) continue;
      const Scalar f = m[i][col] * inv;
      for (int j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline int rank_of(const Ring& ring, const std::vector<std::vector<Scalar>>& m) {
  if (!ring.is_field()) throw Error("NotAField", "rank needs a field, got " + ring.name());
  if (ring.kind() == RingKind::rationals) {
    // clear denominators row by row (rank-invariant), then eliminate
    // fraction-free
    std::vector<std::vector<BigInt>> z;
    z.reserve(m.size());
    for (const auto& row : m) {
      BigInt l = 1;
      for (const auto& s : row) {
        l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(s.rational_value()));
      }
      std::vector<BigInt> zrow;
      zrow.reserve(row.size());
      for (const auto& s : row) {
        const BigRational& v = s.rational_value();
        zrow.push_back(boost::multiprecision::numerator(v) *
                       (l / boost::multiprecision::denominator(v)));
      }
      z.push_back(std::move(zrow));
    }
    return bareiss_rank(std::move(z));
  }
  return gauss_rank(m);
}

}  // namespace detail

// Exact rank of the submatrix with the given 1-based rows and columns.
inline int submatrix_rank(const ColMatrix& g, const std::vector<int>& rows,
                          const std::vector<int>& cols) {
  if (!g.ring().is_field()) throw Error("NotAField", "rank needs a field");
  std::vector<std::vector<Scalar>> m;
  m.reserve(rows.size());
  for (int i : rows) {
    std::vector<Scalar> row;
    row.reserve(cols.size());
    for (int j : cols) row.push_back(g.entry(i, j));
    m.push_back(std::move(row));
  }
  return detail::rank_of(g.ring(), m);
}

// Rank over the cofinal row set [row_from, infinity).  Rows beyond
// max(window, max col) are identity-tail rows whose restriction to the given
// columns vanishes, so the computation truncates there.
inline int submatrix_rank_from(const ColMatrix& g, int row_from, const std::vector<int>& cols) {
  if (row_from < 1) throw Error("InvalidPair", "rows are 1-based");
  int max_col = 0;
  for (int j : cols) max_col = std::max(max_col, j);
  const int row_to = std::max(g.window(), max_col);
  std::vector<int> rows;
  for (int i = row_from; i <= row_to; ++i) rows.push_back(i);
  return submatrix_rank(g, rows, cols);
}

// General inverse over a field (Gauss-Jordan on the window block).
inline ColMatrix inverse(const ColMatrix& g) {
  if (!g.ring().is_field()) throw Error("NotAField", "general inverse needs a field");
  const int w = g.window();
  auto m = g.dense(w);
  auto inv = ColMatrix::identity(g.ring()).dense(w);
  for (int col = 0; col < w; ++col) {
    int pivot = -1;
    for (int i = col; i < w; ++i) {
      if (!m[i][col].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw Error("NotInvertible", "window block is singular");
    std::swap(m[col], m[pivot]);
    std::swap(inv[col], inv[pivot]);
    const Scalar d = m[col][col].inverse();
    for (int j = 0; j < w; ++j) {
      m[col][j] = m[col][j] * d;
      inv[col][j] = inv[col][j] * d;
    }
    for (int i = 0; i < w; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      const Scalar f = m[i][col];
      for (int j = 0; j < w; ++j) {
        m[i][j] = m[i][j] - f * m[col][j];
        inv[i][j] = inv[i][j] - f * inv[col][j];
      }
    }
  }
  return ColMatrix(g.ring(), std::move(inv));
}

inline bool is_invertible(const ColMatrix& g) {
  const int w = g.window();
  if (w == 0) return true;
  if (g.ring().is_field()) {
    std::vector<int> all(w);
    for (int i = 0; i < w; ++i) all[i] = i + 1;
    return submatrix_rank(g, all, all) == w;
  }
  // over Z: invertible iff the window determinant is a unit
  std::vector<std::vector<BigInt>> z(w, std::vector<BigInt>(w));
  for (int i = 0; i < w; ++i) {
    for (int j = 0; j < w; ++j) {
      const BigRational& v = g.entry(i + 1, j + 1).rational_value();
      z[i][j] = boost::multiprecision::numerator(v);
    }
  }
  BigInt det = 1, prev = 1;
  for (int k = 0; k < w; ++k) {
    int pivot = -1;
    for (int i = k; i < w; ++i) {
      if (z[i][k] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return false;
    if (pivot != k) {
      std::swap(z[k], z[pivot]);
      det = -det;
    }
    for (int i = k + 1; i < w; ++i) {
      for (int j = k + 1; j < w; ++j) {
        z[i][j] = (z[k][k] * z[i][j] - z[i][k] * z[k][j]) / prev;
      }
      z[i][k] = 0;
    }
    prev = z[k][k];
  }
  det = det * z[w - 1][w - 1];
  return det == 1 || det == -1;
}

}  // namespace bruhatkit
