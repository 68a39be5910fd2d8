#pragma once

#include <utility>
#include <vector>

#include "bruhatkit/colmatrix.hpp"
#include "bruhatkit/errors.hpp"
#include "bruhatkit/permutation.hpp"
#include "bruhatkit/scalar.hpp"

namespace bruhatkit {

// g = b * sigma * c with b, c invertible upper triangular.  Only sigma is
// canonical (it labels the double coset); b and c are whatever the pivoting
// scheme produced, checked by re-multiplication.
struct BruhatFactorization {
  ColMatrix b;
  Permutation sigma;
  ColMatrix c;
};

namespace detail {

inline void require_invertible_over_field(const ColMatrix& g) {
  if (!g.ring().is_field()) {
    throw Error("NotAField", "Bruhat factorization needs a field, got " + g.ring().name());
  }
  if (!is_invertible(g)) throw Error("NotInvertible", "window block is singular");
}

}  // namespace detail

// The double-coset label of g: the permutation sigma whose lower-left rank
// table matches g's, i.e. rank(g_{[p,inf),[1,q]}) = r_{>=p,q}(sigma) for all
// p, q.  sigma(q) is read off the rank-jump pattern:
//   [sigma(q) = p] = R(p,q) - R(p+1,q) - R(p,q-1) + R(p+1,q-1).
inline Permutation coset_label(const ColMatrix& g) {
  detail::require_invertible_over_field(g);
  const int w = g.window();
  if (w == 0) return Permutation::identity();

  std::vector<int> cols;
  std::vector<std::vector<int>> r(w + 2, std::vector<int>(w + 1, 0));
  for (int q = 1; q <= w; ++q) {
    cols.push_back(q);
    for (int p = 1; p <= w; ++p) r[p][q] = submatrix_rank_from(g, p, cols);
  }

  std::vector<int> images(w + 1, 0);
  for (int q = 1; q <= w; ++q) {
    int image = 0;
    for (int p = 1; p <= w; ++p) {
      const int jump = r[p][q] - r[p + 1][q] - r[p][q - 1] + r[p + 1][q - 1];
      if (jump == 1) {
        image = p;
        break;
      }
    }
    if (image == 0) throw Error("InternalContradiction", "rank table has no jump in a column");
    images[q] = image;
  }
  return Permutation::from_one_line(std::vector<int>(images.begin() + 1, images.end()));
}

// Factor g = b * sigma * c.  sigma comes from the rank table; c is peeled by
// column elimination (adding earlier columns to later ones keeps c upper
// triangular) until each column j has its lowest nonzero entry at row
// sigma(j); what remains is b * sigma.
inline BruhatFactorization bruhat_decompose(const ColMatrix& g) {
  const Permutation sigma = coset_label(g);  // also checks field + invertibility
  const Ring& ring = g.ring();
  const int w = g.window();

  auto h = g.dense(w);
  auto cinv = ColMatrix::identity(ring).dense(w);  // accumulates the column ops: h = g * cinv
  std::vector<int> pivot_col_of_row(w + 1, 0);     // row sigma(j) -> column j, once placed

  for (int j = 1; j <= w; ++j) {
    const int target = sigma(j);
    while (true) {
      int lowest = 0;
      for (int i = w; i >= 1; --i) {
        if (!h[i - 1][j - 1].is_zero()) {
          lowest = i;
          break;
        }
      }
      if (lowest == target) break;
      if (lowest < target || pivot_col_of_row[lowest] == 0) {
        throw Error("InternalContradiction", "column elimination disagrees with the coset label");
      }
      const int k = pivot_col_of_row[lowest];
      const Scalar f = h[lowest - 1][j - 1] / h[lowest - 1][k - 1];
      for (int i = 1; i <= w; ++i) {
        h[i - 1][j - 1] = h[i - 1][j - 1] - f * h[i - 1][k - 1];
        cinv[i - 1][j - 1] = cinv[i - 1][j - 1] - f * cinv[i - 1][k - 1];
      }
    }
    pivot_col_of_row[target] = j;
  }

  // b = h * sigma^{-1}: column sigma(j) of b is column j of h.
  std::vector<std::vector<Scalar>> bblock(w, std::vector<Scalar>(w, Scalar::zero(ring)));
  for (int j = 1; j <= w; ++j) {
    for (int i = 1; i <= w; ++i) bblock[i - 1][sigma(j) - 1] = h[i - 1][j - 1];
  }
  ColMatrix b(ring, std::move(bblock));
  ColMatrix c = triangular_inverse(ColMatrix(ring, std::move(cinv)));

  const ColMatrix product = multiply(b, multiply(permutation_matrix(ring, sigma), c));
  if (product != g) {
    throw Error("InternalContradiction", "factorization product check failed");
  }
  return BruhatFactorization{std::move(b), sigma, std::move(c)};
}

// The elementary degeneration of the closure proof: for sigma = tau * (p,q)
// with tau(p) > tau(q) and a unit r,
//   L_{s(p),s(q)}(r) D_{s(p)}(-r) D_{s(q)}(r^{-1}) . sigma L_{q,p}(r) . L_{p,q}(-r^{-1}) = tau,
// so with b and c the inverses of the outer factors, sigma L_{q,p}(r) = b tau c.
inline std::pair<ColMatrix, ColMatrix> degenerate_to_cell(const Permutation& tau, int p, int q,
                                                          const Scalar& r) {
  if (p < 1 || p >= q) throw Error("InvalidPair", "need 1 <= p < q");
  if (tau(p) <= tau(q)) {
    throw Error("NotADescent", "tau(p) <= tau(q): (p,q) is not a descent of tau");
  }
  if (!r.is_unit()) throw Error("NotAUnit", r.str() + " is not a unit");
  const Ring& ring = r.ring();

  const Permutation sigma = tau.times_transposition(p, q);
  const int sp = sigma(p);  // = tau(q) < tau(p) = sigma(q)
  const int sq = sigma(q);

  const ColMatrix left = multiply(
      elementary_L(ring, sp, sq, r),
      multiply(elementary_D(ring, sp, -r), elementary_D(ring, sq, r.inverse())));
  const ColMatrix b = triangular_inverse(left);
  const ColMatrix c = triangular_inverse(elementary_L(ring, p, q, -(r.inverse())));

  const ColMatrix lhs = multiply(permutation_matrix(ring, sigma), elementary_L(ring, q, p, r));
  const ColMatrix rhs = multiply(b, multiply(permutation_matrix(ring, tau), c));
  if (lhs != rhs) {
    throw Error("InternalContradiction", "degeneration identity check failed");
  }
  return {b, c};
}

}  // namespace bruhatkit
