#pragma once

#include <map>
#include <string>
#include <vector>

#include "bruhatkit/errors.hpp"
#include "bruhatkit/subspace.hpp"

namespace bruhatkit {

// Index into a finite chain (j stays 0) or a product of two finite chains.
struct PosetIndex {
  int i = 0;
  int j = 0;
  auto operator<=>(const PosetIndex&) const = default;
};

// The finite index posets used here: a chain 0..top, or the product order
// on (0..top_i) x (0..top_j).
class Poset {
 public:
  static Poset chain(int top) {
    if (top < 0) throw Error("DimensionMismatch", "chain length must be >= 0");
    return Poset(top, -1);
  }

  static Poset grid(int top_i, int top_j) {
    if (top_i < 0 || top_j < 0) throw Error("DimensionMismatch", "grid sizes must be >= 0");
    return Poset(top_i, top_j);
  }

  bool is_chain() const { return top_j_ < 0; }

  // Componentwise order; a linear order on chains.
  bool leq(PosetIndex a, PosetIndex b) const {
    return is_chain() ? a.i <= b.i : (a.i <= b.i && a.j <= b.j);
  }

  bool lt(PosetIndex a, PosetIndex b) const { return leq(a, b) && a != b; }

  // All elements, in a linear extension of the order.
  std::vector<PosetIndex> elements() const {
    std::vector<PosetIndex> out;
    if (is_chain()) {
      for (int i = 0; i <= top_i_; ++i) out.push_back({i, 0});
      return out;
    }
    for (int s = 0; s <= top_i_ + top_j_; ++s) {
      for (int i = 0; i <= top_i_; ++i) {
        const int j = s - i;
        if (j >= 0 && j <= top_j_) out.push_back({i, j});
      }
    }
    return out;
  }

  PosetIndex top() const { return is_chain() ? PosetIndex{top_i_, 0} : PosetIndex{top_i_, top_j_}; }

  bool operator==(const Poset& other) const {
    return top_i_ == other.top_i_ && top_j_ == other.top_j_;
  }
  bool operator!=(const Poset& other) const { return !(*this == other); }

 private:
  Poset(int top_i, int top_j) : top_i_(top_i), top_j_(top_j) {}

  int top_i_;
  int top_j_;
};

// A poset filtration F: P -> Sub(M): some index maps to 0, some to the full
// space, and the map is order-preserving.  All three conditions are checked
// at construction.
class Filtration {
 public:
  Filtration(Poset poset, std::map<PosetIndex, Subspace> modules)
      : poset_(std::move(poset)), modules_(std::move(modules)) {
    const auto elems = poset_.elements();
    if (elems.empty()) throw Error("DimensionMismatch", "empty index poset");
    for (const auto& p : elems) {
      if (!modules_.count(p)) {
        throw Error("DimensionMismatch", "filtration is missing an index");
      }
    }
    const Subspace& first = modules_.begin()->second;
    bool has_zero = false, has_full = false;
    for (const auto& [p, sub] : modules_) {
      if (sub.ring() != first.ring() || sub.ambient() != first.ambient()) {
        throw Error("DimensionMismatch", "filtration subspaces live in different spaces");
      }
      if (sub.dim() == 0) has_zero = true;
      if (sub.dim() == sub.ambient()) has_full = true;
    }
    if (!has_zero) throw Error("InvalidFiltration", "(F1) no index maps to 0");
    if (!has_full) throw Error("InvalidFiltration", "(F2) no index maps to the full space");
    for (const auto& p : elems) {
      for (const auto& q : elems) {
        if (poset_.leq(p, q) && !at(q).contains(at(p))) {
          throw Error("InvalidFiltration", "(F3) the filtration is not order-preserving");
        }
      }
    }
  }

  const Poset& poset() const { return poset_; }
  const Ring& ring() const { return modules_.begin()->second.ring(); }
  int ambient() const { return modules_.begin()->second.ambient(); }

  const Subspace& at(PosetIndex p) const {
    auto it = modules_.find(p);
    if (it == modules_.end()) throw Error("DimensionMismatch", "index outside the poset");
    return it->second;
  }

  // F_{<p} = sum of F_q over q < p.
  Subspace below(PosetIndex p) const {
    Subspace acc = Subspace::zero(ring(), ambient());
    for (const auto& q : poset_.elements()) {
      if (poset_.lt(q, p)) acc = sum(acc, at(q));
    }
    return acc;
  }

  // Intersection of two chain filtrations on the product poset:
  // [E cap F]_{(i,j)} = E_i cap F_j.
  static Filtration intersection(const Filtration& e, const Filtration& f) {
    if (!e.poset().is_chain() || !f.poset().is_chain()) {
      throw Error("InvalidFiltration", "intersection needs two chain filtrations");
    }
    const Poset grid = Poset::grid(e.poset().top().i, f.poset().top().i);
    std::map<PosetIndex, Subspace> modules;
    for (const auto& p : grid.elements()) {
      modules.emplace(p, intersect(e.at({p.i, 0}), f.at({p.j, 0})));
    }
    return Filtration(grid, std::move(modules));
  }

 private:
  Poset poset_;
  std::map<PosetIndex, Subspace> modules_;
};

// Candidate (almost) gradation: a subspace per index, tested against a
// filtration by the predicates below.
class GradationTable {
 public:
  GradationTable(Poset poset, std::map<PosetIndex, Subspace> cells)
      : poset_(std::move(poset)), cells_(std::move(cells)) {
    for (const auto& p : poset_.elements()) {
      if (!cells_.count(p)) throw Error("DimensionMismatch", "gradation table is missing an index");
    }
  }

  const Poset& poset() const { return poset_; }

  const Subspace& at(PosetIndex p) const {
    auto it = cells_.find(p);
    if (it == cells_.end()) throw Error("DimensionMismatch", "index outside the poset");
    return it->second;
  }

 private:
  Poset poset_;
  std::map<PosetIndex, Subspace> cells_;
};

// (AG1): F_p = F_{<p} (+) C_p for every p, i.e. the sum is F_p and the
// intersection with F_{<p} is zero.
inline bool is_almost_gradation(const Filtration& f, const GradationTable& c) {
  if (f.poset() != c.poset()) throw Error("DimensionMismatch", "index posets differ");
  for (const auto& p : f.poset().elements()) {
    const Subspace& cell = c.at(p);
    if (cell.ring() != f.ring() || cell.ambient() != f.ambient()) {
      throw Error("DimensionMismatch", "gradation cells live in a different space");
    }
    const Subspace lower = f.below(p);
    if (intersect(lower, cell).dim() != 0) return false;
    if (sum(lower, cell) != f.at(p)) return false;
  }
  return true;
}

// The family (C_p) is independent iff the concatenation of all cell bases
// is linearly independent.
inline bool is_independent(const GradationTable& c) {
  std::vector<Vector> all;
  int total = 0;
  const Subspace& probe = c.at(c.poset().elements().front());
  for (const auto& p : c.poset().elements()) {
    const auto& basis = c.at(p).basis();
    all.insert(all.end(), basis.begin(), basis.end());
    total += c.at(p).dim();
  }
  if (total == 0) return true;
  return Subspace::span(probe.ring(), probe.ambient(), all).dim() == total;
}

// C spans (F, P) when F_p = sum_{q <= p} C_q for every p.
inline bool spans(const Filtration& f, const GradationTable& c) {
  if (f.poset() != c.poset()) throw Error("DimensionMismatch", "index posets differ");
  for (const auto& p : f.poset().elements()) {
    Subspace acc = Subspace::zero(f.ring(), f.ambient());
    for (const auto& q : f.poset().elements()) {
      if (f.poset().leq(q, p)) acc = sum(acc, c.at(q));
    }
    if (acc != f.at(p)) return false;
  }
  return true;
}

// Witness that the almost gradation C_k = span(f_k), f_k = e_k - e_{k+1},
// of the tail filtration never spans: e_1 stays outside span(f_1, ..., f_n)
// for every n <= bound (over Q, in ambient dimension bound + 1).
inline bool nonspanning_demo(int bound) {
  if (bound < 1) throw Error("InvalidPair", "bound must be >= 1");
  const Ring q = Ring::rationals();
  const int d = bound + 1;
  Vector e1(d, Scalar::zero(q));
  e1[0] = Scalar::one(q);
  std::vector<Vector> fs;
  for (int k = 1; k <= bound; ++k) {
    Vector f(d, Scalar::zero(q));
    f[k - 1] = Scalar::one(q);
    f[k] = -Scalar::one(q);
    fs.push_back(std::move(f));
    const Subspace spanned = Subspace::span(q, d, fs);
    if (spanned.contains(e1)) return false;
    if (spanned.dim() != k) return false;  // the f_k stay independent
  }
  return true;
}

}  // namespace bruhatkit
