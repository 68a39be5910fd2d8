#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bruhatkit/colmatrix.hpp"
#include "bruhatkit/decompose.hpp"
#include "bruhatkit/errors.hpp"
#include "bruhatkit/flag.hpp"
#include "bruhatkit/permutation.hpp"
#include "bruhatkit/schubert.hpp"

// Brute-force ground truth for the rest of the library.  Everything here is
// deliberately literal: full-table order comparisons with no reduction
// shortcuts, exhaustive group enumeration, and a private mod-p elimination
// routine so the cross-checks share no linear-algebra kernel with the main
// modules.
namespace bruhatkit::oracle {

using IMat = std::vector<std::vector<int>>;

inline std::vector<Permutation> enumerate_sn(int n) {
  if (n < 1 || n > 7) throw Error("TooLarge", "enumerate_sn supports 1 <= n <= 7");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// Literal region-criterion evaluation over the full table i, j <= n.
inline bool bruhat_leq_bruteforce(const Permutation& sigma, const Permutation& tau, int n) {
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int rs = 0, rt = 0;
      for (int m = 1; m <= j; ++m) {
        if (sigma(m) <= i) ++rs;
        if (tau(m) <= i) ++rt;
      }
      if (rs < rt) return false;
    }
  }
  return true;
}

// ---- private mod-p matrix helpers -----------------------------------------

inline IMat imat_identity(int n) {
  IMat m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IMat imat_mul(const IMat& a, const IMat& b, int p) {
  const int n = static_cast<int>(a.size());
  IMat out(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) out[i][j] = (out[i][j] + a[i][k] * b[k][j]) % p;
    }
  }
  return out;
}

inline int imat_rank(IMat m, int p) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (m[i][col] % p != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    int inv = 1;  // pivot^{p-2} mod p
    for (int e = 0; e < p - 2; ++e) inv = (inv * m[rank][col]) % p;
    for (int j = 0; j < cols; ++j) m[rank][j] = (m[rank][j] * inv) % p;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      const int f = m[i][col];
      for (int j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline std::string imat_key(const IMat& m) {
  std::string key;
  for (const auto& row : m) {
    for (int v : row) key += std::to_string(v) + ",";
    key += ";";
  }
  return key;
}

inline ColMatrix to_colmatrix(const IMat& m, int p) {
  const Ring ring = Ring::prime_field(p);
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Scalar>> block(n, std::vector<Scalar>(n, Scalar::zero(ring)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) block[i][j] = Scalar::of(ring, m[i][j]);
  }
  return ColMatrix(ring, std::move(block));
}

inline IMat permutation_imat(const Permutation& sigma, int n) {
  IMat m(n, std::vector<int>(n, 0));
  for (int j = 1; j <= n; ++j) m[sigma(j) - 1][j - 1] = 1;
  return m;
}

// ---- exhaustive group enumeration ------------------------------------------

inline std::vector<IMat> enumerate_all_matrices(int n, int p) {
  double total = 1;
  for (int i = 0; i < n * n; ++i) total *= p;
  if (total > 1e7) throw Error("TooLarge", "p^(n^2) exceeds the enumeration bound");
  std::vector<IMat> out;
  IMat m(n, std::vector<int>(n, 0));
  while (true) {
    out.push_back(m);
    int idx = 0;
    while (idx < n * n) {
      int& cell = m[idx / n][idx % n];
      if (++cell < p) break;
      cell = 0;
      ++idx;
    }
    if (idx == n * n) break;
  }
  return out;
}

inline std::vector<IMat> enumerate_gl(int n, int p) {
  std::vector<IMat> out;
  for (auto& m : enumerate_all_matrices(n, p)) {
    if (imat_rank(m, p) == n) out.push_back(std::move(m));
  }
  return out;
}

// All invertible upper triangular window-n matrices over F_p.
inline std::vector<IMat> enumerate_triangular(int n, int p) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) slots.emplace_back(i, j);
  }
  std::vector<IMat> out;
  std::vector<int> odo(slots.size(), 0);
  while (true) {
    IMat m(n, std::vector<int>(n, 0));
    bool units = true;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      m[slots[s].first][slots[s].second] = odo[s];
      if (slots[s].first == slots[s].second && odo[s] == 0) units = false;
    }
    if (units) out.push_back(std::move(m));
    std::size_t idx = 0;
    while (idx < odo.size() && ++odo[idx] == p) odo[idx++] = 0;
    if (idx == odo.size()) break;
  }
  return out;
}

// Literal expansion of the double coset { b sigma c : b, c in B(F_p) },
// returned as a set of matrix keys.
inline std::set<std::string> double_coset(const Permutation& sigma, int n, int p,
                                          const std::vector<IMat>& triangulars) {
  const IMat sm = permutation_imat(sigma, n);
  std::set<std::string> out;
  for (const auto& b : triangulars) {
    const IMat bs = imat_mul(b, sm, p);
    for (const auto& c : triangulars) out.insert(imat_key(imat_mul(bs, c, p)));
  }
  return out;
}

// Canonical key of the flag spanned by the first 1..n column prefixes of g:
// the mod-p reduced echelon form of each prefix, concatenated.
inline std::string flag_key(const IMat& g, int p) {
  const int n = static_cast<int>(g.size());
  std::string key;
  for (int cols = 1; cols <= n; ++cols) {
    IMat span(cols, std::vector<int>(n, 0));
    for (int j = 0; j < cols; ++j) {
      for (int i = 0; i < n; ++i) span[j][i] = g[i][j];
    }
    // reduce rows to canonical echelon form
    int rank = 0;
    for (int col = 0; col < n && rank < cols; ++col) {
      int pivot = -1;
      for (int i = rank; i < cols; ++i) {
        if (span[i][col] != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) continue;
      std::swap(span[rank], span[pivot]);
      int inv = 1;
      for (int e = 0; e < p - 2; ++e) inv = (inv * span[rank][col]) % p;
      for (int j = 0; j < n; ++j) span[rank][j] = (span[rank][j] * inv) % p;
      for (int i = 0; i < cols; ++i) {
        if (i == rank || span[i][col] == 0) continue;
        const int f = span[i][col];
        for (int j = 0; j < n; ++j) span[i][j] = ((span[i][j] - f * span[rank][j]) % p + p) % p;
      }
      ++rank;
    }
    key += imat_key(span) + "|";
  }
  return key;
}

// ---- suite runners ----------------------------------------------------------

struct OracleReport {
  std::string suite;
  long long cases = 0;
  long long mismatches = 0;
  std::string first_counterexample;

  bool ok() const { return mismatches == 0; }

  void record(bool match, const std::string& description) {
    ++cases;
    if (!match) {
      if (mismatches == 0) first_counterexample = description;
      ++mismatches;
    }
  }
};

// bruhat_leq vs the literal full-table oracle vs the tableau criterion,
// on every ordered pair of S_n.
inline OracleReport run_bruhat_suite(int n) {
  OracleReport report{"bruhat"};
  const auto perms = enumerate_sn(n);
  for (const auto& s : perms) {
    for (const auto& t : perms) {
      const bool fast = bruhat_leq(s, t);
      const bool brute = bruhat_leq_bruteforce(s, t, n);
      const bool tableau = bruhat_leq_tableau(s, t, n);
      report.record(fast == brute && fast == tableau,
                    "pair " + s.str() + " <= " + t.str());
    }
  }
  return report;
}

// Every element of GL_n(F_p) factors with a verified product, and the
// coset_label fibers are exactly the brute-force double cosets.
inline OracleReport run_decomp_suite(int n, int p) {
  OracleReport report{"decomp"};
  const auto gl = enumerate_gl(n, p);
  const auto triangulars = enumerate_triangular(n, p);
  const auto perms = enumerate_sn(n);

  std::map<std::string, std::set<std::string>> fibers;  // sigma -> matrix keys
  for (const auto& m : gl) {
    const ColMatrix g = to_colmatrix(m, p);
    bool ok = true;
    std::string label;
    try {
      const BruhatFactorization fact = bruhat_decompose(g);  // product re-checked inside
      ok = is_upper_triangular(fact.b) && is_upper_triangular(fact.c) &&
           has_unit_diagonal(fact.b) && has_unit_diagonal(fact.c);
      label = fact.sigma.str();
    } catch (const Error&) {
      ok = false;
    }
    report.record(ok, "decomposition of " + imat_key(m));
    if (ok) fibers[label].insert(imat_key(m));
  }

  long long covered = 0;
  for (const auto& sigma : perms) {
    const auto expansion = double_coset(sigma, n, p, triangulars);
    covered += static_cast<long long>(expansion.size());
    auto it = fibers.find(sigma.str());
    const bool match = it != fibers.end() ? it->second == expansion : expansion.empty();
    report.record(match, "double coset of " + sigma.str());
  }
  report.record(covered == static_cast<long long>(gl.size()),
                "double cosets partition GL_" + std::to_string(n));
  return report;
}

// Ehresmann at desk scale: Y_sigma membership agrees with the Bruhat
// comparison of coset labels, exhaustively over GL_n(F_p) x S_n.
inline OracleReport run_closure_suite(int n, int p) {
  OracleReport report{"closure"};
  const auto gl = enumerate_gl(n, p);
  const auto perms = enumerate_sn(n);
  for (const auto& m : gl) {
    const ColMatrix g = to_colmatrix(m, p);
    const Permutation tau = coset_label(g);
    for (const auto& sigma : perms) {
      const bool inside = y_sigma_contains(sigma, g);
      const bool below = bruhat_leq(tau, sigma);
      report.record(inside == below,
                    "g = " + imat_key(m) + ", sigma = " + sigma.str());
    }
  }
  return report;
}

// Flag-side Bruhat: relative_position(sigma E, E) = sigma, and the fibers of
// relative_position(., E) over all flags are the brute-force B-orbits.
inline OracleReport run_flags_suite(int n, int p) {
  OracleReport report{"flags"};
  const Ring ring = Ring::prime_field(p);
  const Flag standard = Flag::standard(ring, n);
  const auto perms = enumerate_sn(n);

  for (const auto& sigma : perms) {
    Flag moved = apply(permutation_matrix(ring, sigma), standard);
    if (moved.dimension() != n) moved = Flag::from_matrix(moved.matrix(), n);
    report.record(relative_position(moved, standard) == sigma,
                  "relative position of " + sigma.str() + "E");
  }

  const auto gl = enumerate_gl(n, p);
  const auto triangulars = enumerate_triangular(n, p);
  std::map<std::string, IMat> flags;  // canonical flag key -> witness matrix
  for (const auto& m : gl) flags.emplace(flag_key(m, p), m);

  std::map<std::string, std::set<std::string>> fibers;
  for (const auto& [key, witness] : flags) {
    const Flag f = Flag::from_matrix(to_colmatrix(witness, p), n);
    const Permutation w = relative_position(f, standard);
    fibers[w.str()].insert(key);
    report.record(relative_position(standard, f) == w.inverse(),
                  "inverse relative position at flag " + key);
  }

  for (const auto& sigma : perms) {
    std::set<std::string> orbit;
    const IMat sm = permutation_imat(sigma, n);
    for (const auto& b : triangulars) orbit.insert(flag_key(imat_mul(b, sm, p), p));
    auto it = fibers.find(sigma.str());
    const bool match = it != fibers.end() && it->second == orbit;
    report.record(match, "B-orbit of " + sigma.str() + "E");
  }
  return report;
}

}  // namespace bruhatkit::oracle
