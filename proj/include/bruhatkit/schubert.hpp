#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "bruhatkit/colmatrix.hpp"
#include "bruhatkit/decompose.hpp"
#include "bruhatkit/errors.hpp"
#include "bruhatkit/permutation.hpp"

namespace bruhatkit {

// Membership in the closed subfunctor Y_sigma: every lower-left block of g
// (rows >= p, columns <= q) has rank at most r_{>=p,q}(sigma), equivalently
// all minors of size > r_{>=p,q}(sigma) in that block vanish.  The
// quantification over all p, q reduces to p, q <= W + 1 with
// W = max(window(g), max Supp(sigma)): beyond W both sides gain only
// identity-tail rows and columns, which move the two ranks in lockstep.
// (The reduction is cross-checked against the 2W bound in the test suite.)
inline bool y_sigma_contains(const Permutation& sigma, const ColMatrix& g) {
  if (!sigma.is_finitely_supported()) {
    throw Error("InvalidPatch", "Y_sigma needs a finitely supported permutation");
  }
  if (!g.ring().is_field()) {
    throw Error("NotAField", "minor-rank conditions need a field, got " + g.ring().name());
  }
  if (!is_invertible(g)) throw Error("NotInvertible", "window block is singular");

  const int w = std::max(g.window(), sigma.max_support()) + 1;
  std::vector<int> cols;
  for (int q = 1; q <= w; ++q) {
    cols.push_back(q);
    for (int p = 1; p <= w; ++p) {
      if (submatrix_rank_from(g, p, cols) > rank_sw(sigma, p, q)) return false;
    }
  }
  return true;
}

// Resolve which cell of the closure of B sigma B the matrix g sits in:
// returns tau = coset_label(g) when g lies in Y_sigma, nullopt otherwise.
// Ehresmann's relation makes the two verdicts equivalent to tau <= sigma;
// a disagreement would falsify the closure proposition and is reported as a
// hard failure rather than a value.
inline std::optional<Permutation> closure_cover_check(const Permutation& sigma,
                                                      const ColMatrix& g) {
  const Permutation tau = coset_label(g);
  const bool inside = y_sigma_contains(sigma, g);
  const bool below = bruhat_leq(tau, sigma);
  if (inside != below) {
    throw Error("InternalContradiction",
                "Y_sigma membership and the Bruhat comparison disagree for tau = " + tau.str());
  }
  if (!inside) return std::nullopt;
  return tau;
}

}  // namespace bruhatkit
