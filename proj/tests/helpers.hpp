#pragma once

#include <random>
#include <vector>

#include "bruhatkit/colmatrix.hpp"
#include "bruhatkit/filtration.hpp"
#include "bruhatkit/flag.hpp"
#include "bruhatkit/permutation.hpp"
#include "bruhatkit/scalar.hpp"
#include "bruhatkit/subspace.hpp"

// Deterministic random generators shared by the unit and acceptance suites.
namespace testgen {

using namespace bruhatkit;

inline Scalar random_scalar(const Ring& ring, std::mt19937& rng) {
  if (ring.kind() == RingKind::prime_field) {
    std::uniform_int_distribution<long long> pick(0, ring.modulus() - 1);
    return Scalar::of(ring, pick(rng));
  }
  std::uniform_int_distribution<long long> num(-5, 5);
  if (ring.kind() == RingKind::rationals) {
    std::uniform_int_distribution<long long> den(1, 5);
    return Scalar::rational(num(rng), den(rng));
  }
  return Scalar::of(ring, num(rng));
}

inline Scalar random_unit(const Ring& ring, std::mt19937& rng) {
  while (true) {
    Scalar s = random_scalar(ring, rng);
    if (s.is_unit()) return s;
  }
}

inline Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_one_line(images);
}

inline ColMatrix random_unit_triangular(const Ring& ring, int window, std::mt19937& rng) {
  std::vector<std::vector<Scalar>> block(window, std::vector<Scalar>(window, Scalar::zero(ring)));
  for (int i = 0; i < window; ++i) {
    block[i][i] = random_unit(ring, rng);
    for (int j = i + 1; j < window; ++j) block[i][j] = random_scalar(ring, rng);
  }
  return ColMatrix(ring, std::move(block));
}

inline ColMatrix random_invertible(const Ring& ring, int window, std::mt19937& rng) {
  while (true) {
    std::vector<std::vector<Scalar>> block(window, std::vector<Scalar>(window, Scalar::zero(ring)));
    for (int i = 0; i < window; ++i) {
      for (int j = 0; j < window; ++j) block[i][j] = random_scalar(ring, rng);
    }
    ColMatrix g(ring, std::move(block));
    if (g.window() == window && is_invertible(g)) return g;
  }
}

inline Vector random_vector(const Ring& ring, int dim, std::mt19937& rng) {
  Vector v;
  v.reserve(dim);
  for (int i = 0; i < dim; ++i) v.push_back(random_scalar(ring, rng));
  return v;
}

inline Vector random_element_of(const Subspace& sub, std::mt19937& rng) {
  Vector v(sub.ambient(), Scalar::zero(sub.ring()));
  for (const auto& row : sub.basis()) {
    const Scalar c = random_scalar(sub.ring(), rng);
    for (int j = 0; j < sub.ambient(); ++j) v[j] = v[j] + c * row[j];
  }
  return v;
}

// A random chain filtration of F^d: dimensions weakly increase from 0 to d
// (repeats allowed), subspaces nest by construction.
inline Filtration random_chain_filtration(const Ring& ring, int d, int steps, std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> dims{0};
  for (int s = 1; s < steps; ++s) {
    int next = dims.back();
    while (next < d && (coin(rng) || d - next > steps - 1 - s)) ++next;
    dims.push_back(next);
  }
  dims.back() = d;

  const ColMatrix basis = random_invertible(ring, d, rng);
  std::map<PosetIndex, Subspace> modules;
  for (int s = 0; s < steps; ++s) {
    std::vector<Vector> gens;
    for (int j = 1; j <= dims[s]; ++j) {
      Vector col(d, Scalar::zero(ring));
      for (int i = 1; i <= d; ++i) col[i - 1] = basis.entry(i, j);
      gens.push_back(std::move(col));
    }
    modules.emplace(PosetIndex{s, 0}, Subspace::span(ring, d, std::move(gens)));
  }
  return Filtration(Poset::chain(steps - 1), std::move(modules));
}

// A random almost gradation of any filtration: for each index, a randomly
// skewed complement of F_{<p} inside F_p.
inline GradationTable random_almost_gradation(const Filtration& f, std::mt19937& rng) {
  std::map<PosetIndex, Subspace> cells;
  for (const auto& p : f.poset().elements()) {
    const Subspace lower = f.below(p);
    const Subspace target = f.at(p);
    std::vector<Vector> extension = extend_basis(lower, target);
    for (auto& v : extension) {
      const Vector noise = random_element_of(lower, rng);
      for (int j = 0; j < target.ambient(); ++j) v[j] = v[j] + noise[j];
    }
    cells.emplace(p, Subspace::span(f.ring(), f.ambient(), std::move(extension)));
  }
  return GradationTable(f.poset(), std::move(cells));
}

}  // namespace testgen
