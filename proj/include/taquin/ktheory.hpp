#ifndef TAQUIN_KTHEORY_HPP
#define TAQUIN_KTHEORY_HPP

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "taquin/monodromy.hpp"
#include "taquin/partition.hpp"

namespace taquin {

// Increasing tableau of skew shape: entries strictly increase along rows
// and down columns; values may repeat across different rows/columns.
// rows[r] lists the entries of row r, starting at column inner_r.
class IncreasingTableau {
 public:
  IncreasingTableau(Partition inner, std::vector<std::vector<int>> rows)
      : inner_(std::move(inner)), rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    std::vector<int> outer_parts;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      outer_parts.push_back(inner_.part(static_cast<int>(r)) +
                            static_cast<int>(rows_[r].size()));
    for (int r = static_cast<int>(rows_.size()); r < inner_.length(); ++r)
      outer_parts.push_back(inner_.part(r));
    outer_ = Partition(std::move(outer_parts));
    detail::require(contains(outer_, inner_),
                    "IncreasingTableau: rows do not cover the inner shape");
    for (int r = 0; r < outer_.length(); ++r)
      for (int c = inner_.part(r); c < outer_.part(r); ++c) {
        int v = entry(r, c);
        detail::require(v >= 1, "IncreasingTableau: entries must be >= 1");
        if (c > inner_.part(r))
          detail::require(entry(r, c - 1) < v,
                          "IncreasingTableau: rows must strictly increase");
        if (r > 0 && c < outer_.part(r - 1) && c >= inner_.part(r - 1))
          detail::require(entry(r - 1, c) < v,
                          "IncreasingTableau: columns must strictly increase");
      }
  }

  const Partition& inner() const { return inner_; }
  const Partition& outer() const { return outer_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int box_count() const { return outer_.size() - inner_.size(); }

  // Entry at (r, c), or 0 outside the shape.
  int entry(int r, int c) const {
    if (r < 0 || r >= static_cast<int>(rows_.size())) return 0;
    int c0 = c - inner_.part(r);
    if (c0 < 0 || c0 >= static_cast<int>(rows_[r].size())) return 0;
    return rows_[r][c0];
  }

  std::string to_string() const {
    std::string s;
    for (int r = 0; r < outer_.length(); ++r) {
      if (r) s += '\n';
      for (int c = 0; c < outer_.part(r); ++c) {
        if (c) s += ' ';
        int v = entry(r, c);
        s += v ? std::to_string(v) : std::string(".");
      }
    }
    return s;
  }

  friend bool operator==(const IncreasingTableau&,
                         const IncreasingTableau&) = default;

 private:
  Partition inner_;
  std::vector<std::vector<int>> rows_;
  Partition outer_;
};

// Row-by-row filling of the straight shape beta with 1..|beta|, the
// rectification target for K-theoretic counts.
inline IncreasingTableau superstandard_increasing(const Partition& beta) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int r = 0; r < beta.length(); ++r) {
    std::vector<int> row(beta.part(r));
    for (int& v : row) v = next++;
    rows.push_back(std::move(row));
  }
  return IncreasingTableau(Partition{}, std::move(rows));
}

// K-theoretic jeu de taquin slide.  The chosen removable corners of the
// inner shape become holes; then for each value s in increasing order,
// simultaneously every hole with an s in its right or lower neighbor
// becomes s, and every s with a hole in its left or upper neighbor becomes
// a hole.  Finally the holes (now at the outer boundary) are erased.
inline IncreasingTableau kjdt_slide(const IncreasingTableau& t,
                                    const std::vector<Box>& corners) {
  constexpr int kHole = -1;
  const Partition& inner = t.inner();
  const Partition& outer = t.outer();
  detail::require(!corners.empty(), "kjdt_slide: no corners given");
  std::vector<int> new_inner_parts(inner.parts());
  std::set<Box> corner_set(corners.begin(), corners.end());
  detail::require(corner_set.size() == corners.size(),
                  "kjdt_slide: repeated corner");
  for (const Box& b : corners) {
    detail::require(inner.contains_box(b) && b.col == inner.part(b.row) - 1 &&
                        inner.part(b.row + 1) <= b.col,
                    "kjdt_slide: not a removable corner of the inner shape");
    new_inner_parts[b.row] -= 1;
  }
  Partition new_inner(std::move(new_inner_parts));
  detail::require(contains(inner, new_inner),
                  "kjdt_slide: corners do not shrink the inner shape");

  // Dense working grid: 0 outside, kHole for holes.
  std::vector<std::vector<int>> g(outer.length());
  for (int r = 0; r < outer.length(); ++r) {
    g[r].assign(outer.part(r), 0);
    for (int c = inner.part(r); c < outer.part(r); ++c) g[r][c] = t.entry(r, c);
  }
  for (const Box& b : corner_set) g[b.row][b.col] = kHole;
  auto at = [&](int r, int c) -> int {
    if (r < 0 || r >= static_cast<int>(g.size())) return 0;
    if (c < 0 || c >= static_cast<int>(g[r].size())) return 0;
    return g[r][c];
  };

  std::set<int> values;
  for (const auto& row : g)
    for (int v : row)
      if (v > 0) values.insert(v);
  for (int s : values) {
    std::vector<Box> to_value, to_hole;
    for (int r = 0; r < static_cast<int>(g.size()); ++r)
      for (int c = 0; c < static_cast<int>(g[r].size()); ++c) {
        if (g[r][c] == kHole &&
            (at(r, c + 1) == s || at(r + 1, c) == s))
          to_value.push_back(Box{r, c});
        if (g[r][c] == s &&
            (at(r, c - 1) == kHole || at(r - 1, c) == kHole))
          to_hole.push_back(Box{r, c});
      }
    for (const Box& b : to_value) g[b.row][b.col] = s;
    for (const Box& b : to_hole) g[b.row][b.col] = kHole;
  }

  // Erase holes; the filled cells must again form a skew shape on
  // new_inner.
  std::vector<std::vector<int>> rows(g.size());
  for (int r = 0; r < static_cast<int>(g.size()); ++r) {
    int c = new_inner.part(r);
    while (c < static_cast<int>(g[r].size()) && g[r][c] > 0)
      rows[r].push_back(g[r][c++]);
    for (; c < static_cast<int>(g[r].size()); ++c)
      detail::ensure(g[r][c] == kHole || g[r][c] == 0,
                     "kjdt_slide: values left behind the holes");
  }
  return IncreasingTableau(new_inner, std::move(rows));
}

// Removable corners of lambda, row-major order.
inline std::vector<Box> removable_corners(const Partition& lambda) {
  std::vector<Box> out;
  for (int r = 0; r < lambda.length(); ++r)
    if (lambda.part(r) > lambda.part(r + 1))
      out.push_back(Box{r, lambda.part(r) - 1});
  return out;
}

// K-rectification: repeatedly slide at the last removable corner of the
// inner shape, in row-major order, until the shape is straight.
inline IncreasingTableau k_rectify(const IncreasingTableau& t) {
  IncreasingTableau cur = t;
  while (!cur.inner().empty())
    cur = kjdt_slide(cur, {removable_corners(cur.inner()).back()});
  return cur;
}

// All increasing fillings of the shape with values 1..vmax, each value
// used at least once, in row-major lexicographic order.
inline std::vector<IncreasingTableau> enumerate_increasing(
    const SkewShape& shape, int vmax) {
  std::vector<IncreasingTableau> out;
  int n = shape.size();
  if (vmax < 0 || n < vmax) return out;
  if (n == 0) {
    if (vmax == 0) out.push_back(IncreasingTableau(shape.inner, {}));
    return out;
  }
  if (vmax == 0) return out;
  std::vector<Box> boxes = shape.boxes();
  std::vector<std::vector<int>> g(shape.outer.length());
  for (int r = 0; r < shape.outer.length(); ++r)
    g[r].assign(shape.outer.part(r), 0);
  auto at = [&](int r, int c) -> int {
    if (r < 0 || c < 0 || r >= static_cast<int>(g.size())) return 0;
    if (c >= static_cast<int>(g[r].size())) return 0;
    return g[r][c];
  };
  std::vector<int> used(vmax + 1, 0);
  int unused = vmax;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (unused > static_cast<int>(boxes.size() - pos)) return;
    if (pos == boxes.size()) {
      std::vector<std::vector<int>> rows(g.size());
      for (int r = 0; r < static_cast<int>(g.size()); ++r)
        for (int c = shape.inner.part(r); c < shape.outer.part(r); ++c)
          rows[r].push_back(g[r][c]);
      out.push_back(IncreasingTableau(shape.inner, std::move(rows)));
      return;
    }
    const Box& b = boxes[pos];
    int lo = std::max(at(b.row, b.col - 1), at(b.row - 1, b.col)) + 1;
    for (int v = lo; v <= vmax; ++v) {
      g[b.row][b.col] = v;
      if (used[v]++ == 0) --unused;
      self(self, pos + 1);
      if (--used[v] == 0) ++unused;
      g[b.row][b.col] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

// Littlewood-Richardson coefficient c_{inner, types}^{outer} as the number
// of linked chains of dual equivalence classes; zero when sizes mismatch.
inline int lr_coeff(const Partition& inner,
                    const std::vector<Partition>& types,
                    const Partition& outer) {
  return static_cast<int>(enumerate_chains(inner, outer, types).size());
}

// Classical lattice-word rule, kept as an independent oracle: semistandard
// fillings of outer/inner with content lambda whose reverse reading word
// (rows right to left, top to bottom) is a ballot sequence.
inline int lr_coeff_lattice(const Partition& inner, const Partition& lambda,
                            const Partition& outer) {
  if (!contains(outer, inner) ||
      outer.size() - inner.size() != lambda.size())
    return 0;
  int ell = std::max(lambda.length(), 1);
  std::vector<std::vector<int>> g(outer.length());
  for (int r = 0; r < outer.length(); ++r)
    g[r].assign(outer.part(r), 0);
  std::vector<int> content(ell + 1, 0);
  // Cells in reverse reading order.
  std::vector<Box> order;
  for (int r = 0; r < outer.length(); ++r)
    for (int c = outer.part(r) - 1; c >= inner.part(r); --c)
      order.push_back(Box{r, c});
  int count = 0;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      ++count;
      return;
    }
    const Box& b = order[pos];
    for (int v = 1; v <= ell; ++v) {
      if (content[v] >= lambda.part(v - 1)) continue;               // content
      if (v > 1 && content[v] >= content[v - 1]) continue;          // ballot
      int right = (b.col + 1 < outer.part(b.row)) ? g[b.row][b.col + 1] : 0;
      if (right && v > right) continue;                             // weak row
      if (b.row > 0 && b.col >= inner.part(b.row - 1) &&
          g[b.row - 1][b.col] >= v)
        continue;                                                   // strict col
      g[b.row][b.col] = v;
      content[v] += 1;
      self(self, pos + 1);
      content[v] -= 1;
      g[b.row][b.col] = 0;
    }
  };
  rec(rec, 0);
  return count;
}

// Multi-type version of the lattice oracle, by convolving over
// intermediate shapes.
inline int lr_coeff_lattice_multi(const Partition& inner,
                                  const std::vector<Partition>& types,
                                  const Partition& outer) {
  if (types.empty()) return inner == outer ? 1 : 0;
  if (types.size() == 1) return lr_coeff_lattice(inner, types[0], outer);
  std::vector<Partition> rest(types.begin() + 1, types.end());
  int want = inner.size() + types[0].size();
  Rectangle box(std::max(outer.length(), 1), std::max(outer.part(0), 1));
  int total = 0;
  for (const Partition& mu : enumerate_partitions(box)) {
    if (mu.size() != want || !contains(mu, inner) || !contains(outer, mu))
      continue;
    int a = lr_coeff_lattice(inner, types[0], mu);
    if (a) total += a * lr_coeff_lattice_multi(mu, rest, outer);
  }
  return total;
}

// First-order K-theoretic coefficient k_{alpha, beta}^{complement(gamma)}:
// increasing fillings of complement(gamma)/alpha with content 1..|beta|,
// one value repeated, that K-rectify to the superstandard filling of beta.
// Requires |alpha| + |beta| + |gamma| == area - 1.
inline int k_coeff(const Partition& alpha, const Partition& beta,
                   const Partition& gamma, const Rectangle& rect) {
  detail::require(
      alpha.size() + beta.size() + gamma.size() == rect.area() - 1,
      "k_coeff: sizes must sum to area - 1");
  detail::require(alpha.fits_in(rect) && beta.fits_in(rect) &&
                      gamma.fits_in(rect),
                  "k_coeff: partitions must fit in the rectangle");
  Partition gamma_c = complement(gamma, rect);
  if (!contains(gamma_c, alpha)) return 0;
  SkewShape shape(alpha, gamma_c);
  IncreasingTableau target = superstandard_increasing(beta);
  int count = 0;
  for (const IncreasingTableau& t :
       enumerate_increasing(shape, beta.size()))
    if (k_rectify(t) == target) ++count;
  return count;
}

// Increasing fillings counted by k_coeff, for inspection.
inline std::vector<IncreasingTableau> k_witnesses(const Partition& alpha,
                                                  const Partition& beta,
                                                  const Partition& gamma,
                                                  const Rectangle& rect) {
  Partition gamma_c = complement(gamma, rect);
  std::vector<IncreasingTableau> out;
  if (!contains(gamma_c, alpha)) return out;
  IncreasingTableau target = superstandard_increasing(beta);
  for (const IncreasingTableau& t :
       enumerate_increasing(SkewShape(alpha, gamma_c), beta.size()))
    if (k_rectify(t) == target) out.push_back(t);
  return out;
}

// Pieri case: when complement(gamma)/alpha is a horizontal strip of size
// d+1 and beta = (d), the coefficient is #nonempty rows - 1.
inline int k_coeff_pieri(const Partition& alpha, int d, const Partition& gamma,
                         const Rectangle& rect) {
  Partition gamma_c = complement(gamma, rect);
  detail::require(contains(gamma_c, alpha),
                  "k_coeff_pieri: alpha must fit under complement(gamma)");
  SkewShape shape(alpha, gamma_c);
  detail::require(shape.is_horizontal_strip() && shape.size() == d + 1,
                  "k_coeff_pieri: shape must be a horizontal strip of size d+1");
  int rows = 0;
  for (int r = 0; r < shape.outer.length(); ++r)
    if (shape.outer.part(r) > shape.inner.part(r)) ++rows;
  return rows - 1;
}

// The fiber of chains (alpha, box, (d)) from the empty shape up to
// complement(gamma), listed by the row of the floating box from bottom to
// top.  When complement(gamma)/alpha is a horizontal strip the box must
// start one of its occupied rows, giving one chain per such row.
inline std::vector<DEChain> pieri_fiber_row_ordered(const Partition& alpha,
                                                    int d,
                                                    const Partition& gamma,
                                                    const Rectangle& rect) {
  detail::require(d >= 1, "pieri_fiber_row_ordered: d must be >= 1");
  Partition gamma_c = complement(gamma, rect);
  auto fiber = enumerate_chains(Partition{}, gamma_c,
                                {alpha, Partition{1}, Partition{d}});
  std::stable_sort(fiber.begin(), fiber.end(),
                   [](const DEChain& a, const DEChain& b) {
                     return a.classes()[1].representative.box_of_entry(1).row >
                            b.classes()[1].representative.box_of_entry(1).row;
                   });
  return fiber;
}

// Number of increasing fillings of the full rectangle with values
// 1..area-1, each used at least once (so exactly one repeat).
inline int k_promotion_count(const Rectangle& rect) {
  SkewShape shape(Partition{}, rectangle_partition(rect));
  return static_cast<int>(
      enumerate_increasing(shape, rect.area() - 1).size());
}

// Euler-characteristic bookkeeping for the curve S(alpha, box, beta, gamma).
struct ParityReport {
  Partition alpha, beta, gamma;
  int c = 0;     // chain count |X|
  int k = 0;     // first-order K-theory coefficient
  int eta = 0;   // number of orbits of the monodromy
  int sign = 0;  // permutation parity of the monodromy
  int chi = 0;   // c - k, the Euler characteristic
  bool ok = false;
};

// Checks the parity identities linking geometry and combinatorics:
//   eta == c - k (mod 2),  sign == k (mod 2),  c <= k + eta.
inline ParityReport parity_check(const Partition& alpha, const Partition& beta,
                                 const Partition& gamma, const Rectangle& rect,
                                 WordPreset preset = WordPreset::BoxSecond) {
  ParityReport rep;
  rep.alpha = alpha;
  rep.beta = beta;
  rep.gamma = gamma;
  std::vector<Partition> types{alpha, beta, gamma};
  OrbitReport orbits = monodromy_orbits(types, rect, preset);
  rep.c = orbits.set_size;
  rep.k = k_coeff(alpha, beta, gamma, rect);
  rep.eta = orbits.component_count();
  rep.sign = orbits.sign;
  rep.chi = rep.c - rep.k;
  rep.ok = ((rep.eta - rep.chi) % 2 == 0) && (rep.sign == rep.k % 2) &&
           (rep.c <= rep.k + rep.eta);
  return rep;
}

}  // namespace taquin

#endif
