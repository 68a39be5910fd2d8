#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bruhatkit/descent.hpp"
#include "bruhatkit/oracle.hpp"
#include "helpers.hpp"

using namespace bruhatkit;

namespace {

const Permutation id = Permutation::identity();

// The three conclusions of the going-down lemma, checked by rank matrices.
void check_lemma_postconditions(const Permutation& sigma, const Permutation& tau,
                                const DescentStep& step) {
  const Permutation& next = step.result;
  CHECK(bruhat_leq(sigma, next));
  CHECK(bruhat_leq(next, tau));
  CHECK(next != tau);
  CHECK(sigma(step.p) <= next(step.p));
  CHECK(next(step.p) < tau(step.p));
  for (int m = 1; m < step.p; ++m) CHECK(next(m) == tau(m));
}

}  // namespace

TEST_CASE("descent test") {
  CHECK(descent_test(Permutation::from_one_line({2, 1}), 1, 2));
  CHECK_FALSE(descent_test(id, 1, 2));
  CHECK(descent_test(Permutation::paper_rho(), 1, 2));
  CHECK_THROWS_MATCHES(descent_test(id, 2, 2), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == "InvalidPair"; }));
}

TEST_CASE("descent test matches the order characterization on S_4") {
  for (const auto& tau : oracle::enumerate_sn(4)) {
    for (int p = 1; p < 4; ++p) {
      for (int q = p + 1; q <= 4; ++q) {
        const Permutation moved = tau.times_transposition(p, q);
        const bool expected = bruhat_leq(moved, tau) && moved != tau;
        CHECK(descent_test(tau, p, q) == expected);
      }
    }
  }
}

TEST_CASE("going-down step spec examples") {
  SECTION("id toward 321") {
    const DescentStep step = going_down_step(id, Permutation::from_one_line({3, 2, 1}));
    CHECK(step.p == 1);
    CHECK(step.q == 2);
    CHECK(step.result == Permutation::from_one_line({2, 3, 1}));
    CHECK(oracle::bruhat_leq_bruteforce(id, step.result, 3));
    CHECK(oracle::bruhat_leq_bruteforce(step.result, Permutation::from_one_line({3, 2, 1}), 3));
  }
  SECTION("21 toward 312") {
    const Permutation sigma = Permutation::from_one_line({2, 1});
    const Permutation tau = Permutation::from_one_line({3, 1, 2});
    const DescentStep step = going_down_step(sigma, tau);
    CHECK(step.p == 1);
    CHECK(step.q == 3);  // min{n > 1 : 2 <= tau(n) < 3}, tau(3) = 2
    CHECK(step.result == Permutation::from_one_line({2, 1, 3}));
    check_lemma_postconditions(sigma, tau, step);
  }
  SECTION("equal permutations are not comparable") {
    const Permutation s = Permutation::from_one_line({2, 1});
    CHECK_THROWS_MATCHES(going_down_step(s, s), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == "NotComparable"; }));
  }
}

TEST_CASE("lemma postconditions on random comparable pairs in S_6") {
  std::mt19937 rng(20240601);
  int checked = 0;
  while (checked < 1000) {
    const Permutation a = testgen::random_permutation(6, rng);
    const Permutation b = testgen::random_permutation(6, rng);
    if (a == b || !bruhat_leq(a, b)) continue;
    ++checked;
    const DescentStep step = going_down_step(a, b);
    check_lemma_postconditions(a, b, step);
    // first-differing-place lemma: sigma(q) < tau(q) at q = d(sigma, tau)
    const int q = first_difference(a, b);
    CHECK(a(q) < b(q));
  }
}

TEST_CASE("reduce_first_difference pushes the first difference out") {
  SECTION("id toward 321") {
    const Permutation tau = Permutation::from_one_line({3, 2, 1});
    const auto steps = reduce_first_difference(id, tau);
    REQUIRE_FALSE(steps.empty());
    const Permutation last = steps.back().result;
    CHECK(last(1) == 1);
    if (last != id) CHECK(first_difference(id, last) > first_difference(id, tau));
    CHECK(bruhat_leq(id, last));
    CHECK(bruhat_leq(last, tau));
  }
  SECTION("132 toward 321") {
    const Permutation sigma = Permutation::from_one_line({1, 3, 2});
    const Permutation tau = Permutation::from_one_line({3, 2, 1});
    const auto steps = reduce_first_difference(sigma, tau);
    REQUIRE_FALSE(steps.empty());
    CHECK(steps.back().result(1) == 1);
  }
  SECTION("equal input") {
    const Permutation s = Permutation::from_one_line({3, 1, 2});
    CHECK_THROWS_AS(reduce_first_difference(s, s), Error);
  }
}

TEST_CASE("chain_toward terminates on finite descents") {
  const Permutation top = Permutation::from_one_line({3, 2, 1});
  const DescentChain chain = chain_toward(id, top, 10);
  CHECK(chain.terminated);
  CHECK(chain.steps.size() >= 2);
  CHECK(chain.steps.back().result == id);
  CHECK_FALSE(chain.bound_limited);

  // the recorded transpositions reconstruct the walk exactly
  Permutation running = top;
  for (const auto& step : chain.steps) {
    running = running.times_transposition(step.p, step.q);
    CHECK(running == step.result);
  }
  CHECK(running == id);
}

TEST_CASE("chain_toward on every comparable pair of S_4") {
  const auto perms = oracle::enumerate_sn(4);
  for (const auto& sigma : perms) {
    for (const auto& tau : perms) {
      if (sigma == tau || !bruhat_leq(sigma, tau)) continue;
      const DescentChain chain = chain_toward(sigma, tau, 64);
      REQUIRE(chain.terminated);
      Permutation running = tau;
      for (const auto& step : chain.steps) {
        running = running.times_transposition(step.p, step.q);
        // strictly decreasing, always above sigma
        CHECK(bruhat_leq(sigma, running));
        CHECK(bruhat_leq(running, tau));
      }
      CHECK(running == sigma);
    }
  }
}

TEST_CASE("chain_toward follows the infinite descent toward rho") {
  const DescentChain chain = chain_toward(id, Permutation::paper_rho(), 50);
  CHECK_FALSE(chain.terminated);
  CHECK(chain.bound_limited);
  CHECK(chain.steps.size() == 50);
  std::vector<Permutation> seq;
  for (const auto& step : chain.steps) seq.push_back(step.result);
  for (int m = 1; m <= 10; ++m) {
    CHECK(converges_prefix(seq, id, m).has_value());
  }
}

TEST_CASE("chain_toward rejects non-comparable inputs") {
  const Permutation s = Permutation::from_one_line({2, 3, 1});
  CHECK_THROWS_MATCHES(chain_toward(s, s, 5), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == "NotComparable"; }));
  // 231 and 312 are incomparable
  CHECK_THROWS_AS(chain_toward(s, Permutation::from_one_line({3, 1, 2}), 5), Error);
}
