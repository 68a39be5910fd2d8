#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bruhatkit/flag.hpp"
#include "bruhatkit/oracle.hpp"
#include "helpers.hpp"

using namespace bruhatkit;

namespace {

Flag random_flag(const Ring& ring, int d, std::mt19937& rng) {
  return Flag::from_matrix(testgen::random_invertible(ring, d, rng), d);
}

// Marginal table C^1_i = sum_j C_{(i,j)} on the chain.
GradationTable first_marginal(const GradationTable& table, int d) {
  std::map<PosetIndex, Subspace> cells;
  for (int i = 0; i <= d; ++i) {
    Subspace acc = Subspace::zero(table.at({0, 0}).ring(), table.at({0, 0}).ambient());
    for (int j = 0; j <= d; ++j) acc = sum(acc, table.at({i, j}));
    cells.emplace(PosetIndex{i, 0}, acc);
  }
  return GradationTable(Poset::chain(d), std::move(cells));
}

GradationTable second_marginal(const GradationTable& table, int d) {
  std::map<PosetIndex, Subspace> cells;
  for (int j = 0; j <= d; ++j) {
    Subspace acc = Subspace::zero(table.at({0, 0}).ring(), table.at({0, 0}).ambient());
    for (int i = 0; i <= d; ++i) acc = sum(acc, table.at({i, j}));
    cells.emplace(PosetIndex{j, 0}, acc);
  }
  return GradationTable(Poset::chain(d), std::move(cells));
}

}  // namespace

TEST_CASE("flag construction") {
  const Ring f2 = Ring::prime_field(2);
  CHECK_NOTHROW(Flag::standard(f2, 3));
  std::vector<Vector> dependent{{Scalar::one(f2), Scalar::one(f2)},
                                {Scalar::one(f2), Scalar::one(f2)}};
  CHECK_THROWS_MATCHES(Flag(f2, std::move(dependent)), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == "NotInvertible"; }));
  CHECK_THROWS_AS(Flag::standard(Ring::integers(), 2), Error);
}

TEST_CASE("relative position of the standard flag with itself") {
  for (const Ring& ring : {Ring::prime_field(2), Ring::rationals()}) {
    const Flag e = Flag::standard(ring, 4);
    CHECK(relative_position(e, e) == Permutation::identity());
  }
}

TEST_CASE("relative position of sigma E against E") {
  const Ring f2 = Ring::prime_field(2);
  const Flag e = Flag::standard(f2, 3);
  for (const auto& sigma : oracle::enumerate_sn(3)) {
    const Flag moved = apply(permutation_matrix(f2, sigma), e);
    CHECK(relative_position(moved, e) == sigma);
  }
}

TEST_CASE("relative position inverts when the flags swap") {
  std::mt19937 rng(606);
  for (const Ring& ring : {Ring::prime_field(3), Ring::rationals()}) {
    for (int trial = 0; trial < 30; ++trial) {
      const Flag f = random_flag(ring, 4, rng);
      const Flag e = random_flag(ring, 4, rng);
      CHECK(relative_position(f, e) == relative_position(e, f).inverse());
    }
  }
}

TEST_CASE("intersection gradation of E with E is diagonal") {
  const Ring q = Ring::rationals();
  const Flag e = Flag::standard(q, 3);
  const GradationTable table = intersection_gradation(e, e);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      CHECK(table.at({i, j}).dim() == (i == j ? 1 : 0));
    }
    Vector ei(3, Scalar::zero(q));
    ei[i - 1] = Scalar::one(q);
    CHECK(table.at({i, i}).contains(ei));
  }
}

TEST_CASE("intersection gradation of sigma E with E marks (i, sigma(i))") {
  SECTION("the 2x2 swap over Q") {
    const Ring q = Ring::rationals();
    const Flag e = Flag::standard(q, 2);
    const Flag moved = apply(permutation_matrix(q, Permutation::from_one_line({2, 1})), e);
    const GradationTable table = intersection_gradation(moved, e);
    CHECK(table.at({1, 2}).dim() == 1);
    CHECK(table.at({2, 1}).dim() == 1);
    CHECK(table.at({1, 1}).dim() == 0);
    CHECK(table.at({2, 2}).dim() == 0);
  }
  SECTION("all of S_3 over F_5") {
    const Ring f5 = Ring::prime_field(5);
    const Flag e = Flag::standard(f5, 3);
    for (const auto& sigma : oracle::enumerate_sn(3)) {
      const Flag moved = apply(permutation_matrix(f5, sigma), e);
      const GradationTable table = intersection_gradation(moved, e);
      for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
          CHECK(table.at({i, j}).dim() == (j == sigma(i) ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("intersection gradation is a gradation of the intersection filtration") {
  std::mt19937 rng(607);
  const Ring f3 = Ring::prime_field(3);
  for (int trial = 0; trial < 15; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const Flag f = random_flag(f3, d, rng);
    const Flag e = random_flag(f3, d, rng);
    const GradationTable table = intersection_gradation(f, e);
    const Permutation w = relative_position(f, e);

    CHECK(is_independent(table));
    const Filtration inter = Filtration::intersection(flag_filtration(f), flag_filtration(e));
    CHECK(is_almost_gradation(inter, table));
    CHECK(spans(inter, table));

    // cell dimensions mark the relative position
    for (int i = 1; i <= d; ++i) {
      for (int j = 1; j <= d; ++j) {
        CHECK(table.at({i, j}).dim() == (j == w(i) ? 1 : 0));
      }
    }

    // both marginals rebuild the flags' own filtrations
    const GradationTable c1 = first_marginal(table, d);
    const GradationTable c2 = second_marginal(table, d);
    CHECK(is_almost_gradation(flag_filtration(f), c1));
    CHECK(spans(flag_filtration(f), c1));
    CHECK(is_almost_gradation(flag_filtration(e), c2));
    CHECK(spans(flag_filtration(e), c2));
  }
}

TEST_CASE("stabilizer of the standard flag") {
  const Ring q = Ring::rationals();
  CHECK(stabilizes_standard_flag(ColMatrix::identity(q)));
  CHECK_FALSE(
      stabilizes_standard_flag(permutation_matrix(q, Permutation::from_one_line({2, 1}))));

  std::mt19937 rng(608);
  const Ring f3 = Ring::prime_field(3);
  for (int trial = 0; trial < 200; ++trial) {
    const ColMatrix g = testgen::random_invertible(f3, 3, rng);
    CHECK(stabilizes_standard_flag(g) == is_upper_triangular(g));
  }
}
