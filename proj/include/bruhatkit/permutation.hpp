#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bruhatkit/errors.hpp"

namespace bruhatkit {

// Tail rule of a permutation of N = {1, 2, ...}: the bijection applied
// outside the finite patch.  "paper_rho" is the builtin infinite-support
// rule: odd n -> n+2, even m != 2 -> m-2, 2 -> 1.  Its inverse is a builtin
// too so that inversion stays inside the representable class.  Any two
// distinct rules here disagree at every position, which keeps equality and
// first-difference scans finite.
enum class TailRule { identity, paper_rho, paper_rho_inverse };

inline std::string tail_rule_name(TailRule t) {
  switch (t) {
    case TailRule::identity: return "identity";
    case TailRule::paper_rho: return "paper-rho";
    case TailRule::paper_rho_inverse: return "paper-rho-inverse";
  }
  return "?";
}

inline TailRule inverse_rule(TailRule t) {
  switch (t) {
    case TailRule::identity: return TailRule::identity;
    case TailRule::paper_rho: return TailRule::paper_rho_inverse;
    case TailRule::paper_rho_inverse: return TailRule::paper_rho;
  }
  return TailRule::identity;
}

inline int rho_forward(int n) {
  if (n % 2 == 1) return n + 2;
  if (n == 2) return 1;
  return n - 2;
}

inline int rho_backward(int n) {
  if (n == 1) return 2;
  if (n % 2 == 1) return n - 2;
  return n + 2;
}

// A computable permutation of N: a finite patch written over a tail rule.
// The patch is kept normalized (entries agreeing with the tail are dropped),
// and construction checks that the combined map is a bijection: the patch
// values must be exactly the tail values it displaces.
class Permutation {
 public:
  Permutation() : tail_(TailRule::identity) {}

  static Permutation identity() { return Permutation(); }

  static Permutation paper_rho() {
    Permutation s;
    s.tail_ = TailRule::paper_rho;
    return s;
  }

  static Permutation from_patch(const std::map<int, int>& patch, TailRule tail) {
    Permutation s;
    s.tail_ = tail;
    s.patch_ = patch;
    s.normalize_and_validate();
    return s;
  }

  // One-line shorthand [v1, ..., vk]: patch n -> v_n on [1, k], identity tail.
  static Permutation from_one_line(const std::vector<int>& images) {
    std::map<int, int> patch;
    for (std::size_t n = 0; n < images.size(); ++n) {
      patch[static_cast<int>(n) + 1] = images[n];
    }
    return from_patch(patch, TailRule::identity);
  }

  int apply(int n) const {
    auto it = patch_.find(n);
    if (it != patch_.end()) return it->second;
    return tail_apply(n);
  }

  int operator()(int n) const { return apply(n); }

  Permutation inverse() const {
    Permutation s;
    s.tail_ = inverse_rule(tail_);
    for (const auto& [n, v] : patch_) s.patch_[v] = n;
    s.normalize_and_validate();
    return s;
  }

  // tau * (p, q): the values at positions p and q swapped.
  Permutation times_transposition(int p, int q) const {
    if (p < 1 || q < 1 || p == q) throw Error("InvalidPair", "need distinct positions >= 1");
    std::map<int, int> patch = patch_;
    patch[p] = apply(q);
    patch[q] = apply(p);
    Permutation s;
    s.tail_ = tail_;
    s.patch_ = std::move(patch);
    s.normalize_and_validate();
    return s;
  }

  // a.compose(b) = a after b.  Identity tails only.
  Permutation compose(const Permutation& other) const {
    if (tail_ != TailRule::identity || other.tail_ != TailRule::identity) {
      throw Error("UndecidableWithoutBound", "composition of non-identity tails is not supported");
    }
    int m = std::max(max_patch_position(), other.max_patch_position());
    std::vector<int> images;
    images.reserve(m);
    for (int n = 1; n <= m; ++n) images.push_back(apply(other.apply(n)));
    return from_one_line(images);
  }

  TailRule tail() const { return tail_; }
  const std::map<int, int>& patch() const { return patch_; }
  bool is_finitely_supported() const { return tail_ == TailRule::identity; }

  // Supp(sigma) = { n : sigma(n) != n }; finite exactly for identity tails.
  std::vector<int> support() const {
    if (!is_finitely_supported()) {
      throw Error("UndecidableWithoutBound", "support of a non-identity tail is infinite");
    }
    std::vector<int> out;
    for (const auto& [n, v] : patch_) out.push_back(n);
    return out;
  }

  int max_support() const {
    auto s = support();
    return s.empty() ? 0 : *std::max_element(s.begin(), s.end());
  }

  int max_patch_position() const {
    return patch_.empty() ? 0 : patch_.rbegin()->first;
  }

  std::vector<int> one_line(int n) const {
    std::vector<int> out;
    out.reserve(n);
    for (int i = 1; i <= n; ++i) out.push_back(apply(i));
    return out;
  }

  bool operator==(const Permutation& other) const {
    if (tail_ != other.tail_) return false;  // distinct builtin tails never agree cofinitely
    return patch_ == other.patch_;
  }
  bool operator!=(const Permutation& other) const { return !(*this == other); }
  bool operator<(const Permutation& other) const {  // arbitrary total order for containers
    if (tail_ != other.tail_) return tail_ < other.tail_;
    return patch_ < other.patch_;
  }

  std::string str() const {
    std::string out = "[";
    int m = std::max(1, max_patch_position());
    for (int n = 1; n <= m; ++n) {
      if (n > 1) out += ",";
      out += std::to_string(apply(n));
    }
    out += "]";
    if (tail_ != TailRule::identity) out += "+" + tail_rule_name(tail_);
    return out;
  }

 private:
  int tail_apply(int n) const {
    switch (tail_) {
      case TailRule::identity: return n;
      case TailRule::paper_rho: return rho_forward(n);
      case TailRule::paper_rho_inverse: return rho_backward(n);
    }
    return n;
  }

  void normalize_and_validate() {
    for (const auto& [n, v] : patch_) {
      if (n < 1 || v < 1) throw Error("InvalidPatch", "positions and values must be >= 1");
    }
    for (auto it = patch_.begin(); it != patch_.end();) {
      if (it->second == tail_apply(it->first)) {
        it = patch_.erase(it);
      } else {
        ++it;
      }
    }
    // bijectivity: patch values distinct and equal, as a set, to the
    // displaced tail values
    std::set<int> values, displaced;
    for (const auto& [n, v] : patch_) {
      if (!values.insert(v).second) {
        throw Error("InvalidPatch", "patch value " + std::to_string(v) + " repeated");
      }
      displaced.insert(tail_apply(n));
    }
    if (values != displaced) {
      throw Error("InvalidPatch", "patch does not permute the displaced tail values");
    }
  }

  std::map<int, int> patch_;
  TailRule tail_;
};

// --------------------------------------------------------------------------
// Rank functions and the infinite Bruhat order
// --------------------------------------------------------------------------

// r_{p,q}(sigma) = |{ n <= q : sigma(n) <= p }| (ones in the NW p x q corner).
inline int rank_nw(const Permutation& sigma, int p, int q) {
  if (p < 0 || q < 0) throw Error("InvalidPair", "rank positions must be >= 0");
  int count = 0;
  for (int n = 1; n <= q; ++n) {
    if (sigma(n) <= p) ++count;
  }
  return count;
}

// r_{>=p,q}(sigma) = |{ n <= q : sigma(n) >= p }| (ones in the lower-left
// block with upper-right corner (p, q)).
inline int rank_sw(const Permutation& sigma, int p, int q) {
  if (p < 1 || q < 0) throw Error("InvalidPair", "rank positions must be >= 1");
  int count = 0;
  for (int n = 1; n <= q; ++n) {
    if (sigma(n) >= p) ++count;
  }
  return count;
}

struct BoundedComparison {
  bool leq;
  bool exact;  // false when leq == true was only verified up to `bound`
  int bound;
};

namespace detail {

// Region criterion over i, j in [1, bound]: sigma <= tau iff the NW rank
// matrix of sigma dominates that of tau.  Running column sums give each row
// of the rank matrix in O(bound) once the images are cached.
inline bool region_leq_upto(const Permutation& sigma, const Permutation& tau, int bound) {
  std::vector<int> sv(bound + 1), tv(bound + 1);
  for (int n = 1; n <= bound; ++n) {
    sv[n] = sigma(n);
    tv[n] = tau(n);
  }
  for (int i = 1; i <= bound; ++i) {
    int rs = 0, rt = 0;
    for (int n = 1; n <= bound; ++n) {
      if (sv[n] <= i) ++rs;
      if (tv[n] <= i) ++rt;
      if (rs < rt) return false;
    }
  }
  return true;
}

}  // namespace detail

// Exact Bruhat comparison for identity-tail permutations.  The quantifier
// over all i, j reduces to i, j <= max support: beyond it both permutations
// fix every position, so the rank inequalities repeat already-checked cases.
// (The reduction is validated against wider bounds in the test suite.)
inline bool bruhat_leq(const Permutation& sigma, const Permutation& tau) {
  if (!sigma.is_finitely_supported() || !tau.is_finitely_supported()) {
    throw Error("UndecidableWithoutBound",
                "comparison with a non-identity tail needs an explicit bound");
  }
  int bound = std::max({1, sigma.max_support(), tau.max_support()});
  return detail::region_leq_upto(sigma, tau, bound);
}

// Bounded comparison for arbitrary tails.  A failed rank inequality at any
// (i, j) <= bound is a genuine counterexample, so `leq == false` is exact;
// `leq == true` is only "verified up to bound" unless both tails are identity.
inline BoundedComparison bruhat_leq_bounded(const Permutation& sigma, const Permutation& tau,
                                            int bound) {
  if (bound < 1) throw Error("InvalidPair", "bound must be >= 1");
  if (sigma.is_finitely_supported() && tau.is_finitely_supported()) {
    return BoundedComparison{bruhat_leq(sigma, tau), true, bound};
  }
  bool leq = detail::region_leq_upto(sigma, tau, bound);
  return BoundedComparison{leq, !leq, bound};
}

// Tableau criterion truncated at `depth`: sorted prefixes {sigma(1..n)} must
// be entrywise <= {tau(1..n)} for every n <= depth.
inline bool bruhat_leq_tableau(const Permutation& sigma, const Permutation& tau, int depth) {
  if (depth < 1) throw Error("InvalidPair", "depth must be >= 1");
  std::vector<int> s, t;
  for (int n = 1; n <= depth; ++n) {
    s.push_back(sigma(n));
    t.push_back(tau(n));
    std::vector<int> ss = s, tt = t;
    std::sort(ss.begin(), ss.end());
    std::sort(tt.begin(), tt.end());
    for (int i = 0; i < n; ++i) {
      if (ss[i] > tt[i]) return false;
    }
  }
  return true;
}

// d(sigma, tau) = min { n : sigma(n) != tau(n) }.  Decidable for equal tail
// rules, and for the identity/paper-rho pair (those tails disagree at every
// position, so the scan is bounded by the patches).
inline int first_difference(const Permutation& sigma, const Permutation& tau) {
  if (sigma == tau) throw Error("EqualPermutations", "permutations are equal");
  int scan_to = std::max(sigma.max_patch_position(), tau.max_patch_position());
  if (sigma.tail() == tau.tail()) {
    for (int n = 1; n <= scan_to; ++n) {
      if (sigma(n) != tau(n)) return n;
    }
    throw Error("EqualPermutations", "permutations are equal");
  }
  for (int n = 1; n <= scan_to + 1; ++n) {
    if (sigma(n) != tau(n)) return n;
  }
  throw Error("InternalContradiction", "distinct tails must differ within the patch bound");
}

// Compact-open convergence on a supplied prefix: least 1-based N such that
// every later element of the prefix agrees with sigma on positions <= m.
// nullopt means "not yet" within this prefix.
inline std::optional<std::size_t> converges_prefix(const std::vector<Permutation>& seq,
                                                   const Permutation& sigma, int m) {
  if (m < 1) throw Error("InvalidPair", "prefix length must be >= 1");
  std::optional<std::size_t> candidate;
  for (std::size_t idx = seq.size(); idx-- > 0;) {
    bool agrees = true;
    for (int l = 1; l <= m && agrees; ++l) {
      agrees = seq[idx](l) == sigma(l);
    }
    if (!agrees) break;
    candidate = idx + 1;
  }
  return candidate;
}

}  // namespace bruhatkit
