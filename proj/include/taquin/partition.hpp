#ifndef TAQUIN_PARTITION_HPP
#define TAQUIN_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace taquin {

namespace detail {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Internal consistency check; a failure signals a bug, not bad input.
inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw std::logic_error(msg);
}

}  // namespace detail

// Box of a Young diagram, 0-based, matrix convention (row down, col right).
struct Box {
  int row = 0;
  int col = 0;

  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

// True if the boxes share an edge.
inline bool boxes_adjacent(const Box& a, const Box& b) {
  return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

// The ambient k x (n-k) rectangle of G(k,n).
struct Rectangle {
  int rows = 1;
  int cols = 1;

  Rectangle(int r, int c) : rows(r), cols(c) {
    detail::require(r >= 1 && c >= 1, "Rectangle: rows and cols must be >= 1");
  }

  int area() const { return rows * cols; }

  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

// Integer partition, weakly decreasing, trailing zeros stripped so that
// equality is structural.  The canonical total order (operator<=>) is by
// size |lambda| first, then lexicographically on the parts; every
// enumeration in this library that promises "deterministic order" uses it
// unless documented otherwise.
class Partition {
 public:
  Partition() = default;

  Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    normalize();
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // |lambda|, the number of boxes.
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  // i-th part, 0-based, zero beyond the length.
  int part(int i) const {
    return (i >= 0 && i < length()) ? parts_[i] : 0;
  }

  bool contains_box(const Box& b) const {
    return b.row >= 0 && b.col >= 0 && b.col < part(b.row);
  }

  // Partition with one box added; the box must be addable.
  Partition with_box(const Box& b) const {
    detail::require(is_addable(b), "Partition::with_box: box is not addable");
    std::vector<int> p = parts_;
    if (b.row == length()) p.push_back(0);
    p[b.row] += 1;
    return Partition(std::move(p));
  }

  // True if adding the box keeps a valid Young diagram.
  bool is_addable(const Box& b) const {
    if (b.row < 0 || b.row > length()) return false;
    if (b.col != part(b.row)) return false;
    return b.row == 0 || part(b.row - 1) > part(b.row);
  }

  bool fits_in(const Rectangle& r) const {
    return length() <= r.rows && part(0) <= r.cols;
  }

  std::string to_string() const {
    if (parts_.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }

  // Size first, then lexicographic on parts.
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.parts_ <=> b.parts_;
  }

 private:
  void normalize() {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      detail::require(parts_[i] >= 0, "Partition: negative part");
      detail::require(i == 0 || parts_[i - 1] >= parts_[i],
                      "Partition: parts must be weakly decreasing");
    }
  }

  std::vector<int> parts_;
};

inline Partition rectangle_partition(const Rectangle& r) {
  return Partition(std::vector<int>(r.rows, r.cols));
}

// mu >= lambda part-wise.
inline bool contains(const Partition& mu, const Partition& lambda) {
  if (lambda.length() > mu.length()) return false;
  for (int i = 0; i < lambda.length(); ++i)
    if (lambda.part(i) > mu.part(i)) return false;
  return true;
}

// The unique box of mu/lambda when |mu| = |lambda| + 1.
inline Box single_box_difference(const Partition& mu, const Partition& lambda) {
  detail::require(mu.size() == lambda.size() + 1 && contains(mu, lambda),
                  "single_box_difference: not a one-box extension");
  for (int i = 0; i < mu.length(); ++i)
    if (mu.part(i) != lambda.part(i)) return Box{i, lambda.part(i)};
  throw std::logic_error("single_box_difference: unreachable");
}

inline bool is_one_box_extension(const Partition& mu, const Partition& lambda) {
  return mu.size() == lambda.size() + 1 && contains(mu, lambda);
}

// 180-degree rotated complement inside the rectangle:
// complement(lambda)_i = cols - lambda_{rows+1-i}.  An involution, and
// |lambda| + |complement(lambda)| = rows * cols.
inline Partition complement(const Partition& lambda, const Rectangle& rect) {
  detail::require(lambda.fits_in(rect),
                  "complement: partition does not fit in the rectangle");
  std::vector<int> p(rect.rows);
  for (int i = 0; i < rect.rows; ++i)
    p[i] = rect.cols - lambda.part(rect.rows - 1 - i);
  return Partition(std::move(p));
}

// All mu with lambda c mu c bound and |mu| = |lambda| + 1, ordered by the
// row index of the added box, ascending.
inline std::vector<Partition> one_box_extensions(const Partition& lambda,
                                                 const Partition& bound) {
  detail::require(contains(bound, lambda),
                  "one_box_extensions: lambda not contained in bound");
  std::vector<Partition> out;
  for (int r = 0; r <= lambda.length(); ++r) {
    Box b{r, lambda.part(r)};
    if (lambda.is_addable(b) && bound.contains_box(b))
      out.push_back(lambda.with_box(b));
  }
  return out;
}

// All partitions inside rect, ordered by size then lexicographically.
// Count is binomial(rows + cols, rows).
inline std::vector<Partition> enumerate_partitions(const Rectangle& rect) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int row, int maxpart) -> void {
    out.emplace_back(cur);
    if (row == rect.rows) return;
    for (int p = 1; p <= maxpart; ++p) {
      cur.push_back(p);
      self(self, row + 1, p);
      cur.pop_back();
    }
  };
  rec(rec, 0, rect.cols);
  std::sort(out.begin(), out.end());
  return out;
}

// Skew shape outer/inner.
struct SkewShape {
  Partition inner;
  Partition outer;

  SkewShape(Partition in, Partition out)
      : inner(std::move(in)), outer(std::move(out)) {
    detail::require(contains(outer, inner),
                    "SkewShape: inner must be contained in outer");
  }

  int size() const { return outer.size() - inner.size(); }

  bool contains_box(const Box& b) const {
    return outer.contains_box(b) && !inner.contains_box(b);
  }

  std::vector<Box> boxes() const {
    std::vector<Box> out;
    for (int r = 0; r < outer.length(); ++r)
      for (int c = inner.part(r); c < outer.part(r); ++c)
        out.push_back(Box{r, c});
    return out;
  }

  // At most one box per column.
  bool is_horizontal_strip() const {
    for (int r = 1; r < outer.length(); ++r)
      if (outer.part(r) > inner.part(r - 1)) return false;
    return true;
  }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

}  // namespace taquin

#endif
