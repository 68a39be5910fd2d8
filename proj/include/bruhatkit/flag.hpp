#pragma once

#include <map>
#include <vector>

#include "bruhatkit/colmatrix.hpp"
#include "bruhatkit/decompose.hpp"
#include "bruhatkit/errors.hpp"
#include "bruhatkit/filtration.hpp"
#include "bruhatkit/permutation.hpp"
#include "bruhatkit/subspace.hpp"

namespace bruhatkit {

// A desk-scale flag: D basis vectors over an exact field with an implicit
// standard tail, so F_i = span(columns 1..i) for i <= D and the flag
// continues with the standard flag beyond its window.
class Flag {
 public:
  Flag(const Ring& ring, std::vector<Vector> columns) : ring_(ring), columns_(std::move(columns)) {
    if (!ring_.is_field()) throw Error("NotAField", "flags need a field, got " + ring_.name());
    const int d = static_cast<int>(columns_.size());
    for (const auto& col : columns_) {
      if (static_cast<int>(col.size()) != d) {
        throw Error("DimensionMismatch", "flag columns must have length = their count");
      }
    }
    if (!is_invertible(matrix())) {
      throw Error("NotInvertible", "flag columns are not linearly independent");
    }
  }

  static Flag standard(const Ring& ring, int dimension) {
    std::vector<Vector> cols;
    for (int j = 0; j < dimension; ++j) {
      Vector e(dimension, Scalar::zero(ring));
      e[j] = Scalar::one(ring);
      cols.push_back(std::move(e));
    }
    return Flag(ring, std::move(cols));
  }

  // The flag g E at window scale: columns of g.
  static Flag from_matrix(const ColMatrix& g, int dimension) {
    if (dimension < g.window()) {
      throw Error("DimensionMismatch", "flag dimension smaller than the matrix window");
    }
    std::vector<Vector> cols(dimension, Vector(dimension, Scalar::zero(g.ring())));
    for (int j = 1; j <= dimension; ++j) {
      for (int i = 1; i <= dimension; ++i) cols[j - 1][i - 1] = g.entry(i, j);
    }
    return Flag(g.ring(), std::move(cols));
  }

  const Ring& ring() const { return ring_; }
  int dimension() const { return static_cast<int>(columns_.size()); }

  // F_i for i in [0, D].
  Subspace step(int i) const {
    if (i < 0 || i > dimension()) throw Error("DimensionMismatch", "flag step out of range");
    std::vector<Vector> gens(columns_.begin(), columns_.begin() + i);
    return Subspace::span(ring_, dimension(), std::move(gens));
  }

  // Transition matrix whose columns are the flag's basis vectors.
  ColMatrix matrix() const {
    const int d = dimension();
    std::vector<std::vector<Scalar>> block(d, std::vector<Scalar>(d, Scalar::zero(ring_)));
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < d; ++i) block[i][j] = columns_[j][i];
    }
    return ColMatrix(ring_, std::move(block));
  }

  // Flags are equal when all their steps agree.
  bool operator==(const Flag& other) const {
    if (ring_ != other.ring_ || dimension() != other.dimension()) return false;
    for (int i = 1; i < dimension(); ++i) {
      if (step(i) != other.step(i)) return false;
    }
    return true;
  }
  bool operator!=(const Flag& other) const { return !(*this == other); }

 private:
  Ring ring_;
  std::vector<Vector> columns_;  // columns_[j] = (j+1)-th basis vector
};

inline Flag apply(const ColMatrix& g, const Flag& f) {
  if (g.ring() != f.ring()) throw Error("RingMismatch", "matrix and flag over different fields");
  const int d = std::max(f.dimension(), g.window());
  const Flag fd = d == f.dimension() ? f : Flag::from_matrix(f.matrix(), d);
  return Flag::from_matrix(multiply(g, fd.matrix()), d);
}

// The flag as a chain filtration 0 = F_0 c F_1 c ... c F_D = V.
inline Filtration flag_filtration(const Flag& f) {
  std::map<PosetIndex, Subspace> modules;
  for (int i = 0; i <= f.dimension(); ++i) modules.emplace(PosetIndex{i, 0}, f.step(i));
  return Filtration(Poset::chain(f.dimension()), std::move(modules));
}

namespace detail {

// Dimension-jump table d(i, j) = dim(F_i cap E_j); w(i) is the unique j
// where the double difference equals 1.
inline Permutation relative_position_by_jumps(const Flag& f, const Flag& e) {
  const int d = f.dimension();
  std::vector<std::vector<int>> dims(d + 1, std::vector<int>(d + 1, 0));
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) dims[i][j] = intersect(f.step(i), e.step(j)).dim();
  }
  std::vector<int> images(d, 0);
  for (int i = 1; i <= d; ++i) {
    int image = 0;
    for (int j = 1; j <= d; ++j) {
      if (dims[i][j] - dims[i - 1][j] - dims[i][j - 1] + dims[i - 1][j - 1] == 1) {
        image = j;
        break;
      }
    }
    if (image == 0) throw Error("InternalContradiction", "no dimension jump in a flag row");
    images[i - 1] = image;
  }
  return Permutation::from_one_line(images);
}

}  // namespace detail

// Relative position w_{F,E}, computed two independent ways that must agree:
// (a) the coset label of the transition matrix g with F = g E, and (b) the
// dimension-jump table of the intersections F_i cap E_j.
inline Permutation relative_position(const Flag& f, const Flag& e) {
  if (f.ring() != e.ring() || f.dimension() != e.dimension()) {
    throw Error("DimensionMismatch", "flags live in different spaces");
  }
  const ColMatrix g = multiply(inverse(e.matrix()), f.matrix());
  const Permutation by_label = coset_label(g);
  const Permutation by_jumps = detail::relative_position_by_jumps(f, e);
  if (by_label != by_jumps) {
    throw Error("InternalContradiction", "relative-position methods disagree");
  }
  return by_label;
}

// A gradation of the intersection filtration F cap E on the product chain:
// C_{(i,j)} is a complement of F_{i-1} cap E_j + F_i cap E_{j-1} inside
// F_i cap E_j, picked via echelon basis extension.  Over a field the cell at
// (i, j) is one-dimensional exactly when j = w_{F,E}(i) and zero otherwise.
inline GradationTable intersection_gradation(const Flag& f, const Flag& e) {
  if (f.ring() != e.ring() || f.dimension() != e.dimension()) {
    throw Error("DimensionMismatch", "flags live in different spaces");
  }
  const int d = f.dimension();
  const Ring& ring = f.ring();
  std::map<PosetIndex, Subspace> cells;
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      if (i == 0 || j == 0) {
        cells.emplace(PosetIndex{i, j}, Subspace::zero(ring, d));
        continue;
      }
      const Subspace target = intersect(f.step(i), e.step(j));
      const Subspace lower =
          sum(intersect(f.step(i - 1), e.step(j)), intersect(f.step(i), e.step(j - 1)));
      cells.emplace(PosetIndex{i, j},
                    Subspace::span(ring, d, extend_basis(lower, target)));
    }
  }
  return GradationTable(Poset::grid(d, d), std::move(cells));
}

// g stabilizes the standard flag iff g E_i = E_i for every i up to the
// window (beyond it g acts as the identity).  For invertible g this is
// equivalent to upper triangularity.
inline bool stabilizes_standard_flag(const ColMatrix& g) {
  if (!g.ring().is_field()) throw Error("NotAField", "flag stabilizer check needs a field");
  if (!is_invertible(g)) throw Error("NotInvertible", "window block is singular");
  const int w = g.window();
  if (w == 0) return true;
  const Flag standard = Flag::standard(g.ring(), w);
  const Flag moved = apply(g, standard);
  for (int i = 1; i <= w; ++i) {
    if (moved.step(i) != standard.step(i)) return false;
  }
  return true;
}

}  // namespace bruhatkit
