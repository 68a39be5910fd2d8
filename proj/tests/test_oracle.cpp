#include <catch2/catch_amalgamated.hpp>

#include "bruhatkit/oracle.hpp"

using namespace bruhatkit;

TEST_CASE("symmetric group enumeration") {
  CHECK(oracle::enumerate_sn(1) == std::vector<Permutation>{Permutation::identity()});
  CHECK(oracle::enumerate_sn(3).size() == 6);
  CHECK(oracle::enumerate_sn(5).size() == 120);
  CHECK_THROWS_MATCHES(oracle::enumerate_sn(8), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == "TooLarge"; }));
}

TEST_CASE("general linear group enumeration") {
  CHECK(oracle::enumerate_gl(2, 2).size() == 6);    // (4-1)(4-2)
  CHECK(oracle::enumerate_gl(3, 2).size() == 168);  // (8-1)(8-2)(8-4)
  CHECK(oracle::enumerate_gl(1, 5).size() == 4);    // units of F_5
  CHECK(oracle::enumerate_gl(2, 3).size() == 48);   // (9-1)(9-3)
  CHECK_THROWS_AS(oracle::enumerate_gl(4, 7), Error);
}

TEST_CASE("triangular subgroup enumeration") {
  // (p-1)^n p^{n(n-1)/2}
  CHECK(oracle::enumerate_triangular(3, 2).size() == 8);
  CHECK(oracle::enumerate_triangular(2, 3).size() == 12);
}

TEST_CASE("brute-force Bruhat order on S_3") {
  const auto s3 = oracle::enumerate_sn(3);
  for (const auto& s : s3) {
    CHECK(oracle::bruhat_leq_bruteforce(Permutation::identity(), s, 3));
  }
  const Permutation p231 = Permutation::from_one_line({2, 3, 1});
  const Permutation p312 = Permutation::from_one_line({3, 1, 2});
  CHECK_FALSE(oracle::bruhat_leq_bruteforce(p231, p312, 3));
  CHECK_FALSE(oracle::bruhat_leq_bruteforce(p312, p231, 3));
  // the three-level picture: id < {132, 213} < {231, 312} < 321
  int relations = 0;
  for (const auto& a : s3) {
    for (const auto& b : s3) {
      if (oracle::bruhat_leq_bruteforce(a, b, 3)) ++relations;
    }
  }
  CHECK(relations == 19);  // 6 + 4 + 4 + 2 + 2 + 1 relations on S_3
}

TEST_CASE("cross-validation suites pass at desk scale") {
  SECTION("bruhat on S_4") {
    const auto report = oracle::run_bruhat_suite(4);
    INFO(report.first_counterexample);
    CHECK(report.ok());
    CHECK(report.cases == 24 * 24);
  }
  SECTION("decomposition on GL_2(F_2)") {
    const auto report = oracle::run_decomp_suite(2, 2);
    INFO(report.first_counterexample);
    CHECK(report.ok());
  }
  SECTION("closure on GL_2(F_2)") {
    const auto report = oracle::run_closure_suite(2, 2);
    INFO(report.first_counterexample);
    CHECK(report.ok());
  }
  SECTION("flags over F_2, dimension 3") {
    const auto report = oracle::run_flags_suite(3, 2);
    INFO(report.first_counterexample);
    CHECK(report.ok());
  }
}
