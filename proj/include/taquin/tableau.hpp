#ifndef TAQUIN_TABLEAU_HPP
#define TAQUIN_TABLEAU_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "taquin/partition.hpp"

namespace taquin {

// Standard tableau of skew shape outer/inner, stored as its chain of
// partitions: chain[0] = inner, chain[size] = outer, one box per step.
// Entry i (1-based) sits at the box chain[i]/chain[i-1].
class SkewTableau {
 public:
  SkewTableau() : chain_{Partition{}} {}

  explicit SkewTableau(std::vector<Partition> chain) : chain_(std::move(chain)) {
    detail::require(!chain_.empty(), "SkewTableau: empty chain");
    for (std::size_t i = 1; i < chain_.size(); ++i)
      detail::require(is_one_box_extension(chain_[i], chain_[i - 1]),
                      "SkewTableau: chain must grow by one box per step");
  }

  const std::vector<Partition>& chain() const { return chain_; }
  const Partition& inner() const { return chain_.front(); }
  const Partition& outer() const { return chain_.back(); }
  SkewShape shape() const { return SkewShape(inner(), outer()); }
  int size() const { return static_cast<int>(chain_.size()) - 1; }

  // Box holding entry i, 1-based.
  Box box_of_entry(int i) const {
    detail::require(i >= 1 && i <= size(), "box_of_entry: entry out of range");
    return single_box_difference(chain_[i], chain_[i - 1]);
  }

  // Dense grid of entries, 0 outside the shape.
  std::vector<std::vector<int>> grid() const {
    std::vector<std::vector<int>> g(outer().length());
    for (int r = 0; r < outer().length(); ++r)
      g[r].assign(outer().part(r), 0);
    for (int i = 1; i <= size(); ++i) {
      Box b = box_of_entry(i);
      g[b.row][b.col] = i;
    }
    return g;
  }

  std::string to_string() const {
    auto g = grid();
    std::string s;
    for (int r = 0; r < outer().length(); ++r) {
      if (r) s += '\n';
      for (int c = 0; c < outer().part(r); ++c) {
        if (c) s += ' ';
        s += g[r][c] ? std::to_string(g[r][c]) : std::string(".");
      }
    }
    return s;
  }

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
  friend auto operator<=>(const SkewTableau& a, const SkewTableau& b) {
    return a.chain_ <=> b.chain_;
  }

 private:
  std::vector<Partition> chain_;
};

// Row-by-row filling of the straight shape lambda: entries 1..lambda_1 in
// row 1, then the next row, and so on.
inline SkewTableau superstandard(const Partition& lambda) {
  std::vector<Partition> chain;
  chain.reserve(lambda.size() + 1);
  std::vector<int> cur;
  chain.emplace_back();
  for (int r = 0; r < lambda.length(); ++r) {
    cur.push_back(0);
    for (int c = 0; c < lambda.part(r); ++c) {
      cur[r] += 1;
      chain.emplace_back(cur);
    }
  }
  return SkewTableau(std::move(chain));
}

// Builds the tableau from its grid of entries (0 = outside the shape).
inline SkewTableau tableau_from_grid(const Partition& inner,
                                     const Partition& outer,
                                     const std::vector<std::vector<int>>& g) {
  SkewShape shape(inner, outer);
  std::map<int, Box> where;
  for (const Box& b : shape.boxes()) {
    int v = (b.row < static_cast<int>(g.size()) &&
             b.col < static_cast<int>(g[b.row].size()))
                ? g[b.row][b.col]
                : 0;
    detail::require(v >= 1, "tableau_from_grid: missing entry");
    detail::require(!where.count(v), "tableau_from_grid: repeated entry");
    where[v] = b;
  }
  std::vector<Partition> chain{inner};
  int expect = 1;
  for (auto& [v, b] : where) {
    detail::require(v == expect++, "tableau_from_grid: entries must be 1..n");
    chain.push_back(chain.back().with_box(b));
  }
  return SkewTableau(std::move(chain));
}

// All standard tableaux of the shape.  Deterministic order: depth-first,
// extending by one_box_extensions at each step, i.e. chains sorted
// lexicographically by the row index of each added box.
inline std::vector<SkewTableau> enumerate_standard(const SkewShape& shape) {
  std::vector<SkewTableau> out;
  std::vector<Partition> chain{shape.inner};
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(chain.size()) == shape.size() + 1) {
      out.emplace_back(chain);
      return;
    }
    for (const Partition& mu : one_box_extensions(chain.back(), shape.outer)) {
      chain.push_back(mu);
      self(self);
      chain.pop_back();
    }
  };
  rec(rec);
  return out;
}

// Number of standard tableaux of the straight shape lambda, by the hook
// length formula.  Intended for oracle use at desk scale (|lambda| <= 20,
// where n! still fits in 128 bits).
inline std::uint64_t hook_length_count(const Partition& lambda) {
  int n = lambda.size();
  detail::require(n <= 20, "hook_length_count: shape too large");
  std::vector<int> conj(lambda.part(0), 0);
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.part(r); ++c) conj[c] += 1;
  unsigned __int128 fact = 1, hooks = 1;
  for (int i = 1; i <= n; ++i) fact *= i;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.part(r); ++c)
      hooks *= (lambda.part(r) - c) + (conj[c] - r) - 1;
  return static_cast<std::uint64_t>(fact / hooks);
}

// Rotation by 180 degrees inside the rectangle: entry i at (r,c) moves to
// (rows+1-r, cols+1-c) with new label size+1-i.  On chains this is the
// complement of the reversed chain; a tableau of shape alpha/beta maps to
// one of shape complement(beta)/complement(alpha).
inline SkewTableau rotate180(const SkewTableau& t, const Rectangle& rect) {
  std::vector<Partition> chain;
  chain.reserve(t.chain().size());
  for (auto it = t.chain().rbegin(); it != t.chain().rend(); ++it)
    chain.push_back(complement(*it, rect));
  return SkewTableau(std::move(chain));
}

}  // namespace taquin

#endif
