#ifndef TAQUIN_DUAL_EQUIVALENCE_HPP
#define TAQUIN_DUAL_EQUIVALENCE_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "taquin/growth.hpp"
#include "taquin/partition.hpp"
#include "taquin/tableau.hpp"

namespace taquin {

// Dual equivalence class of standard skew tableaux.  Two tableaux of the
// same shape are dual equivalent iff shuffling any fixed tableau past them
// produces the same first output; equivalently, iff their rectification
// recording tableaux agree.  A class is stored by its canonical
// representative: the unique member whose rectification is the
// superstandard tableau of the rectification shape.
struct DualClass {
  SkewTableau representative;
  Partition rectification_shape;

  const Partition& inner() const { return representative.inner(); }
  const Partition& outer() const { return representative.outer(); }
  int size() const { return representative.size(); }

  friend bool operator==(const DualClass& a, const DualClass& b) {
    return a.representative == b.representative;
  }
  friend auto operator<=>(const DualClass& a, const DualClass& b) {
    return a.representative <=> b.representative;
  }
};

// Canonical representative of the class of t.  Rectify t, replace the
// rectified tableau by the superstandard one of the same shape, and slide
// back out along the recording tableau.  The slide back out must restore
// the superstandard helper; that is checked.
inline DualClass canonical_class(const SkewTableau& t) {
  SkewTableau helper = superstandard(t.inner());
  auto [rectified, recording] = shuffle(helper, t);
  Partition lambda = rectified.outer();
  auto [helper_back, rep] = shuffle(superstandard(lambda), recording);
  detail::ensure(helper_back == helper,
                 "canonical_class: slide-out did not restore the helper");
  return DualClass{rep, lambda};
}

// The unique class of straight shape lambda.
inline DualClass straight_class(const Partition& lambda) {
  return DualClass{superstandard(lambda), lambda};
}

inline bool dual_equivalent(const SkewTableau& a, const SkewTableau& b) {
  return a.shape() == b.shape() &&
         canonical_class(a) == canonical_class(b);
}

// Shuffles a consecutive pair of classes: d2 slides inward past d1, d1
// slides outward past d2.  Preconditions: inner(d2) == outer(d1).  The
// outputs swap rectification shapes: the first has inner(d1) and
// rectification shape of d2, the second extends it with d1's.
inline std::pair<DualClass, DualClass> shuffle_classes(const DualClass& d1,
                                                       const DualClass& d2) {
  auto [t2, t1] = shuffle(d1.representative, d2.representative);
  DualClass out1 = canonical_class(t2);
  DualClass out2 = canonical_class(t1);
  detail::ensure(out1.rectification_shape == d2.rectification_shape &&
                     out2.rectification_shape == d1.rectification_shape,
                 "shuffle_classes: rectification shapes not swapped");
  detail::ensure(out1.inner() == d1.inner() && out2.outer() == d2.outer() &&
                     out1.outer() == out2.inner(),
                 "shuffle_classes: output shapes do not line up");
  return {out1, out2};
}

// Chain of linked dual equivalence classes
//   inner = nu_0, classes[i]: nu_i / nu_{i-1}, nu_len = outer,
// the combinatorial model of a fiber of a Schubert curve.
class DEChain {
 public:
  DEChain(Partition inner, std::vector<DualClass> classes)
      : inner_(std::move(inner)), classes_(std::move(classes)) {
    detail::require(!classes_.empty(), "DEChain: no classes");
    detail::require(classes_.front().inner() == inner_,
                    "DEChain: first class must start at inner");
    for (std::size_t i = 1; i < classes_.size(); ++i)
      detail::require(classes_[i].inner() == classes_[i - 1].outer(),
                      "DEChain: classes must be linked");
  }

  const Partition& inner() const { return inner_; }
  const Partition& outer() const { return classes_.back().outer(); }
  const std::vector<DualClass>& classes() const { return classes_; }
  int length() const { return static_cast<int>(classes_.size()); }

  // Rectification shapes, in order.
  std::vector<Partition> type() const {
    std::vector<Partition> out;
    for (const DualClass& d : classes_) out.push_back(d.rectification_shape);
    return out;
  }

  void replace_pair(int i, DualClass a, DualClass b) {
    detail::ensure(a.inner() == classes_[i - 1].inner() &&
                       a.outer() == b.inner() &&
                       b.outer() == classes_[i].outer(),
                   "DEChain::replace_pair: shapes do not line up");
    classes_[i - 1] = std::move(a);
    classes_[i] = std::move(b);
  }

  friend bool operator==(const DEChain&, const DEChain&) = default;
  friend auto operator<=>(const DEChain& a, const DEChain& b) {
    return a.classes_ <=> b.classes_;
  }

 private:
  Partition inner_;
  std::vector<DualClass> classes_;
};

// sh_i: shuffles classes i and i+1 (1-based), fixing all others.
// An involution.
inline DEChain sh(const DEChain& chain, int i) {
  detail::require(i >= 1 && i < chain.length(), "sh: index out of range");
  DEChain out = chain;
  auto [a, b] =
      shuffle_classes(chain.classes()[i - 1], chain.classes()[i]);
  out.replace_pair(i, std::move(a), std::move(b));
  return out;
}

// Evacuation-shuffle conjugator ev_i = sh_1 (sh_2 sh_1) ... (sh_{i-1} ... sh_1),
// applied rightmost factor first.  ev_1 = id; each ev_i is an involution.
inline DEChain ev(const DEChain& chain, int i) {
  detail::require(i >= 1 && i <= chain.length(), "ev: index out of range");
  DEChain out = chain;
  for (int m = i - 1; m >= 1; --m)
    for (int t = 1; t <= m; ++t) out = sh(out, t);
  return out;
}

// esh_i by its definition ev_{i+1} . sh_1 . ev_{i+1}.  Quadratically many
// shuffles; kept as the reference implementation.
inline DEChain esh_by_evacuation(const DEChain& chain, int i) {
  detail::require(i >= 1 && i < chain.length(), "esh: index out of range");
  detail::require(chain.inner().empty(),
                  "esh: chain must start at the empty partition");
  return ev(sh(ev(chain, i + 1), 1), i + 1);
}

// Evacuation shuffle esh_i by the local rule: with tau the inner shape of
// class i and D_tau the unique straight class of shape tau, form the
// triple (D_tau, D_i, D_{i+1}) and apply sh_1 sh_2 sh_1 sh_2 sh_1; the
// first entry returns to D_tau and the last two replace positions i, i+1.
// Agrees with esh_by_evacuation; an involution; fixes classes != i, i+1.
inline DEChain esh(const DEChain& chain, int i) {
  detail::require(i >= 1 && i < chain.length(), "esh: index out of range");
  detail::require(chain.inner().empty(),
                  "esh: chain must start at the empty partition");
  const DualClass& di = chain.classes()[i - 1];
  const DualClass& dj = chain.classes()[i];
  DEChain triple(Partition{},
                 {straight_class(di.inner()), di, dj});
  for (int step : {1, 2, 1, 2, 1}) triple = sh(triple, step);
  detail::ensure(triple.classes()[0] == straight_class(di.inner()),
                 "esh: local rule did not restore the straight class");
  DEChain out = chain;
  out.replace_pair(i, triple.classes()[1], triple.classes()[2]);
  return out;
}

// Rotation by 180 degrees inside the rectangle, on classes.
inline DualClass rotate_class(const DualClass& d, const Rectangle& rect) {
  return canonical_class(rotate180(d.representative, rect));
}

// All dual equivalence classes of the given shape with the given
// rectification shape, sorted by representative.  Their number is the
// Littlewood-Richardson coefficient c_{inner, lambda}^{outer}.
inline std::vector<DualClass> classes_of_shape(const SkewShape& shape,
                                               const Partition& lambda) {
  std::vector<DualClass> out;
  if (shape.size() != lambda.size()) return out;
  for (const SkewTableau& t : enumerate_standard(shape)) {
    DualClass d = canonical_class(t);
    if (d.rectification_shape == lambda) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// All chains in X_inner^outer(types): linked classes with the prescribed
// rectification shapes.  Empty when sizes obstruct.  Deterministic order:
// intermediate shapes in (size, lex) order, then representatives.
inline std::vector<DEChain> enumerate_chains(
    const Partition& inner, const Partition& outer,
    const std::vector<Partition>& types) {
  std::vector<DEChain> out;
  detail::require(!types.empty(), "enumerate_chains: no types");
  int total = 0;
  for (const Partition& ty : types) total += ty.size();
  if (!contains(outer, inner) || outer.size() - inner.size() != total)
    return out;
  std::vector<DualClass> acc;
  auto rec = [&](auto&& self, std::size_t pos, const Partition& cur) -> void {
    if (pos == types.size()) {
      out.push_back(DEChain(inner, acc));
      return;
    }
    const Partition& ty = types[pos];
    std::vector<Partition> mids;
    if (pos + 1 == types.size()) {
      mids.push_back(outer);
    } else {
      // All cur c mu c outer with |mu| = |cur| + |ty|, in (size, lex) order.
      std::vector<Partition> frontier{cur};
      for (int step = 0; step < ty.size(); ++step) {
        std::vector<Partition> next;
        for (const Partition& p : frontier)
          for (const Partition& q : one_box_extensions(p, outer))
            next.push_back(q);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        frontier = std::move(next);
      }
      mids = std::move(frontier);
    }
    for (const Partition& mu : mids) {
      if (!contains(mu, cur) || mu.size() - cur.size() != ty.size()) continue;
      for (const DualClass& d : classes_of_shape(SkewShape(cur, mu), ty)) {
        acc.push_back(d);
        self(self, pos + 1, mu);
        acc.pop_back();
      }
    }
  };
  rec(rec, 0, inner);
  return out;
}

// Dual equivalence cylindrical growth diagram on the staircase strip, with
// horizontal and vertical edges labelled by classes.  Seeded by a chain in
// X_empty^rect; successive rows are computed by class shuffling:
//   * the first vertical class of each row is forced (straight shape),
//   * squares shuffle (vertical, horizontal) -> (horizontal', vertical'),
//   * the last horizontal class is forced (unique class of its
//     anti-straight shape rect/nu).
// Storage mirrors CylindricalGrowthDiagram: hrow(jj, t) labels the edge
// (jj+t, -jj) -> (jj+t+1, -jj), and vcol(jj, t) the edge
// (jj+t, -jj) -> (jj+t, -jj+1), for 0 <= t <= r-1.
// The constructor verifies, throwing std::logic_error otherwise:
//   * period: row r equals row 0,
//   * vertex(jj+t, r-t) == complement(vertex(jj, t)),
//   * hrow(jj+t, r-1-t) == rotate(vcol(jj, t)),
//   * vcol(jj+t+1, r-1-t) == rotate(hrow(jj, t)).
class DualCylindricalGrowthDiagram {
 public:
  DualCylindricalGrowthDiagram(const DEChain& seed, const Rectangle& rect)
      : rect_(rect), r_(seed.length()) {
    const Partition full = rectangle_partition(rect);
    detail::require(seed.inner().empty() && seed.outer() == full,
                    "decgd: seed must run empty -> rect");
    hrows_.assign(r_ + 1, {});
    vcols_.assign(r_ + 1, {});
    hrows_[0] = seed.classes();
    for (int jj = 1; jj <= r_; ++jj) {
      std::vector<DualClass>& above = hrows_[jj - 1];
      std::vector<DualClass> row;
      std::vector<DualClass> vcol;
      vcol.push_back(above[0]);  // straight class, forced
      for (int t = 1; t < r_; ++t) {
        auto [h, v] = shuffle_classes(vcol.back(), above[t]);
        row.push_back(std::move(h));
        vcol.push_back(std::move(v));
      }
      const Partition& nu = vcol.back().inner();
      row.push_back(anti_straight_class(nu));
      hrows_[jj] = std::move(row);
      vcols_[jj] = std::move(vcol);
    }
    detail::ensure(hrows_[r_] == hrows_[0], "decgd: period symmetry violated");
    for (int jj = 0; jj <= r_; ++jj)
      for (int t = 0; jj + t <= r_ && t <= r_; ++t)
        detail::ensure(vertex(jj + t, r_ - t) == complement(vertex(jj, t), rect_),
                       "decgd: complement symmetry violated");
    for (int jj = 1; jj <= r_; ++jj)
      for (int t = 0; t < r_; ++t) {
        if (jj + t <= r_)
          detail::ensure(
              hrows_[jj + t][r_ - 1 - t] == rotate_class(vcols_[jj][t], rect_),
              "decgd: horizontal rotation symmetry violated");
        if (jj + t + 1 <= r_)
          detail::ensure(
              vcols_[jj + t + 1][r_ - 1 - t] == rotate_class(hrows_[jj][t], rect_),
              "decgd: vertical rotation symmetry violated");
      }
  }

  // The unique class of shape rect/nu (rectification shape complement(nu)).
  DualClass anti_straight_class(const Partition& nu) const {
    return rotate_class(straight_class(complement(nu, rect_)), rect_);
  }

  int period() const { return r_; }
  const Rectangle& rectangle() const { return rect_; }

  // Horizontal class on the edge (jj+t, -jj) -> (jj+t+1, -jj).
  const DualClass& hrow(int jj, int t) const { return hrows_.at(jj).at(t); }
  // Vertical class on the edge (jj+t, -jj) -> (jj+t, -jj+1); jj >= 1.
  const DualClass& vcol(int jj, int t) const { return vcols_.at(jj).at(t); }

  // Partition at (jj+t, -jj).
  const Partition& vertex(int jj, int t) const {
    detail::require(t >= 0 && t <= r_, "decgd: vertex index out of range");
    if (t == 0) return hrows_.at(jj).front().inner();
    return hrows_.at(jj).at(t - 1).outer();
  }

  // Row jj as a chain; row(0) is the seed.
  DEChain row(int jj) const { return DEChain(Partition{}, hrows_.at(jj)); }

 private:
  Rectangle rect_;
  int r_;
  std::vector<std::vector<DualClass>> hrows_;
  std::vector<std::vector<DualClass>> vcols_;
};

}  // namespace taquin

#endif
