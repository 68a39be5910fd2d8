#pragma once

#include <vector>

#include "bruhatkit/errors.hpp"
#include "bruhatkit/permutation.hpp"

namespace bruhatkit {

// One going-down move: result = tau * (p, q) with sigma <= result < tau.
struct DescentStep {
  int p;
  int q;
  Permutation result;
};

struct DescentChain {
  Permutation start;
  std::vector<DescentStep> steps;
  bool terminated;     // final result equals the target sigma
  bool bound_limited;  // some comparison was only verified up to a bound
};

// tau * (p, q) < tau  iff  tau(p) > tau(q).
inline bool descent_test(const Permutation& tau, int p, int q) {
  if (p >= q || p < 1) throw Error("InvalidPair", "need 1 <= p < q");
  return tau(p) > tau(q);
}

namespace detail {

// Default verification bound for tails: every position a chain step can
// touch, plus the caller-supplied slack.
inline int involved_bound(const Permutation& sigma, const Permutation& tau, int extra) {
  int m = std::max(1, std::max(sigma.max_patch_position(), tau.max_patch_position()));
  for (const auto& [n, v] : sigma.patch()) m = std::max(m, v);
  for (const auto& [n, v] : tau.patch()) m = std::max(m, v);
  return m + std::max(0, extra);
}

struct CheckedLess {
  bool holds;
  bool exact;
};

inline CheckedLess strictly_less(const Permutation& sigma, const Permutation& tau, int bound) {
  if (sigma == tau) return {false, true};
  BoundedComparison cmp = bruhat_leq_bounded(sigma, tau, bound);
  return {cmp.leq, cmp.exact};
}

}  // namespace detail

// The going-down lemma: for sigma < tau and p = d(sigma, tau), the
// transposition t = (p, q) with q = min { n > p : sigma(p) <= tau(n) < tau(p) }
// satisfies sigma <= tau*t < tau, sigma(p) <= tau*t(p) < tau(p), and
// tau*t(m) = tau(m) for m < p.  The set is nonempty because it contains
// tau^{-1}(sigma(p)).
inline DescentStep going_down_step(const Permutation& sigma, const Permutation& tau,
                                   int verify_bound = 0) {
  int bound = detail::involved_bound(sigma, tau, verify_bound);
  auto less = detail::strictly_less(sigma, tau, bound);
  if (!less.holds) throw Error("NotComparable", "need sigma < tau");

  int p = first_difference(sigma, tau);
  if (sigma(p) >= tau(p)) {
    throw Error("InternalContradiction", "sigma < tau forces sigma(p) < tau(p) at p = d(sigma,tau)");
  }
  int r = tau.inverse()(sigma(p));
  int q = 0;
  for (int n = p + 1; n <= r; ++n) {
    if (sigma(p) <= tau(n) && tau(n) < tau(p)) {
      q = n;
      break;
    }
  }
  if (q == 0) {
    throw Error("InternalContradiction", "going-down candidate set was empty");
  }
  return DescentStep{p, q, tau.times_transposition(p, q)};
}

// Repeated going-down steps until the first-difference index strictly
// increases (or sigma itself is reached).  Each step lowers tau(p) strictly
// toward sigma(p), so the segment is finite.
inline std::vector<DescentStep> reduce_first_difference(const Permutation& sigma,
                                                        const Permutation& tau,
                                                        int verify_bound = 0) {
  int bound = detail::involved_bound(sigma, tau, verify_bound);
  auto less = detail::strictly_less(sigma, tau, bound);
  if (!less.holds) throw Error("NotComparable", "need sigma < tau");

  int p = first_difference(sigma, tau);
  std::vector<DescentStep> steps;
  Permutation current = tau;
  while (current != sigma && first_difference(sigma, current) == p) {
    DescentStep step = going_down_step(sigma, current, verify_bound);
    current = step.result;
    steps.push_back(std::move(step));
  }
  return steps;
}

// Descent chain from tau toward sigma with a total step budget.  Terminates
// exactly when sigma is reached; otherwise the partial chain's agreement
// with sigma on initial positions is strictly growing segment by segment.
inline DescentChain chain_toward(const Permutation& sigma, const Permutation& tau, int max_steps,
                                 int verify_bound = 0) {
  if (max_steps < 0) throw Error("InvalidPair", "max_steps must be >= 0");
  int bound = detail::involved_bound(sigma, tau, verify_bound);
  auto less = detail::strictly_less(sigma, tau, bound);
  if (!less.holds) throw Error("NotComparable", "need sigma < tau");

  DescentChain chain{tau, {}, false, !less.exact};
  Permutation current = tau;
  while (current != sigma && static_cast<int>(chain.steps.size()) < max_steps) {
    DescentStep step = going_down_step(sigma, current, verify_bound);
    current = step.result;
    chain.steps.push_back(std::move(step));
  }
  chain.terminated = current == sigma;
  return chain;
}

}  // namespace bruhatkit
