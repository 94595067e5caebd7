#ifndef TAQUIN_GROWTH_HPP
#define TAQUIN_GROWTH_HPP

#include <string>
#include <utility>
#include <vector>

#include "taquin/partition.hpp"
#include "taquin/tableau.hpp"

namespace taquin {

// Local rule on a square of a growth diagram.  Given the three corners
//   gamma c alpha c beta  (one box per step),
// returns the fourth corner delta with gamma c delta c beta:
// if the two boxes of beta/gamma are nonadjacent, delta is the intermediate
// partition distinct from alpha; if they form a domino, delta = alpha.
// Self-inverse in alpha <-> delta.
inline Partition growth_square(const Partition& gamma, const Partition& alpha,
                               const Partition& beta) {
  detail::require(is_one_box_extension(alpha, gamma) &&
                      is_one_box_extension(beta, alpha),
                  "growth_square: need gamma c alpha c beta one box at a time");
  Box b1 = single_box_difference(alpha, gamma);
  Box b2 = single_box_difference(beta, alpha);
  if (boxes_adjacent(b1, b2)) return alpha;
  return gamma.with_box(b2);
}

// Tableau shuffling.  Precondition: t extends s, i.e. inner(t) == outer(s).
// Fills the growth grid G on [0,p] x [0,m] (p = |t|, m = |s|) with
//   G(0,y) = s-chain bottom-to-top, G(x,m) = t-chain left-to-right,
// completing by the local rule, and reads off
//   first output  = bottom edge  (t slid inward, shape extends inner(s)),
//   second output = right edge   (s slid outward, extends the first output).
// An involution: shuffle(shuffle(s,t)) == (s,t).
inline std::pair<SkewTableau, SkewTableau> shuffle(const SkewTableau& s,
                                                   const SkewTableau& t) {
  detail::require(t.inner() == s.outer(),
                  "shuffle: inner(t) must equal outer(s)");
  int p = t.size(), m = s.size();
  std::vector<std::vector<Partition>> g(p + 1,
                                        std::vector<Partition>(m + 1));
  for (int y = 0; y <= m; ++y) g[0][y] = s.chain()[y];
  for (int x = 0; x <= p; ++x) g[x][m] = t.chain()[x];
  for (int x = 1; x <= p; ++x)
    for (int y = m - 1; y >= 0; --y)
      g[x][y] = growth_square(g[x - 1][y], g[x - 1][y + 1], g[x][y + 1]);
  std::vector<Partition> bottom, right;
  for (int x = 0; x <= p; ++x) bottom.push_back(g[x][0]);
  for (int y = 0; y <= m; ++y) right.push_back(g[p][y]);
  return {SkewTableau(std::move(bottom)), SkewTableau(std::move(right))};
}

// Jeu de taquin rectification of t, implemented by shuffling past the
// superstandard tableau of inner(t).  Returns (rectified, recording):
// rectified has straight shape, recording records the slide history as a
// tableau of shape outer(t)/shape(rectified).
inline std::pair<SkewTableau, SkewTableau> rectify(const SkewTableau& t) {
  return shuffle(superstandard(t.inner()), t);
}

// Shape of the rectification.
inline Partition rectification_shape(const SkewTableau& t) {
  return rectify(t).first.outer();
}

// Bender-Knuth involution swapping entries i and i+1 when their boxes are
// nonadjacent.  On the chain this replaces chain[i] by the other partition
// between chain[i-1] and chain[i+1], which is growth_square again.
inline SkewTableau bender_knuth(const SkewTableau& t, int i) {
  detail::require(i >= 1 && i < t.size(), "bender_knuth: index out of range");
  std::vector<Partition> chain = t.chain();
  chain[i] = growth_square(chain[i - 1], chain[i], chain[i + 1]);
  return SkewTableau(std::move(chain));
}

// Schutzenberger promotion, as the composition BK_1, then BK_2, ..., then
// BK_{n-1} on a straight-shape standard tableau.
inline SkewTableau promotion(const SkewTableau& t) {
  detail::require(t.inner().empty(), "promotion: tableau must be straight");
  SkewTableau cur = t;
  for (int i = 1; i < t.size(); ++i) cur = bender_knuth(cur, i);
  return cur;
}

// Cylindrical growth diagram on the staircase strip
//   { (i,j) : 0 <= i+j <= r,  -r <= j <= 0 },
// seeded along the top row by a chain empty -> ... -> rect of r one-box
// steps.  Vertices are stored per diagonal row: vertex(jj, t) is the
// partition at (jj + t, -jj) for 0 <= jj <= r, 0 <= t <= r.  Row jj, read
// as a chain, is the jj-fold promotion of the seed.  The constructor
// verifies the cylindrical symmetries and throws std::logic_error on any
// violation:
//   * row r equals row 0,
//   * vertex(jj + t, r - t) == complement(vertex(jj, t)) for jj + t <= r.
class CylindricalGrowthDiagram {
 public:
  CylindricalGrowthDiagram(const SkewTableau& seed, const Rectangle& rect)
      : rect_(rect), r_(seed.size()) {
    detail::require(seed.inner().empty() &&
                        seed.outer() == rectangle_partition(rect),
                    "CylindricalGrowthDiagram: seed must run empty -> rect");
    rows_.assign(r_ + 1, std::vector<Partition>(r_ + 1));
    rows_[0] = seed.chain();
    const Partition full = rectangle_partition(rect);
    for (int jj = 1; jj <= r_; ++jj) {
      rows_[jj][0] = Partition{};
      for (int t = 1; t < r_; ++t)
        rows_[jj][t] =
            growth_square(rows_[jj][t - 1], rows_[jj - 1][t], rows_[jj - 1][t + 1]);
      rows_[jj][r_] = full;
      detail::ensure(is_one_box_extension(full, rows_[jj][r_ - 1]),
                     "cylindrical growth: row does not reach the rectangle");
    }
    detail::ensure(rows_[r_] == rows_[0],
                   "cylindrical growth: period r symmetry violated");
    for (int jj = 0; jj <= r_; ++jj)
      for (int t = 0; jj + t <= r_; ++t)
        detail::ensure(rows_[jj + t][r_ - t] == complement(rows_[jj][t], rect_),
                       "cylindrical growth: complement symmetry violated");
  }

  int period() const { return r_; }
  const Rectangle& rectangle() const { return rect_; }

  // Partition at (jj + t, -jj).
  const Partition& vertex(int jj, int t) const { return rows_.at(jj).at(t); }

  // Row jj as a standard tableau; row(0) is the seed.
  SkewTableau row(int jj) const { return SkewTableau(rows_.at(jj)); }

  std::string to_string() const {
    std::string s;
    for (int jj = 0; jj <= r_; ++jj) {
      s += std::string(2 * jj, ' ');
      for (int t = 0; t <= r_; ++t) {
        if (t) s += "  ";
        s += rows_[jj][t].to_string();
      }
      s += '\n';
    }
    return s;
  }

 private:
  Rectangle rect_;
  int r_;
  std::vector<std::vector<Partition>> rows_;
};

}  // namespace taquin

#endif
