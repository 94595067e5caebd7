#ifndef TAQUIN_MONODROMY_HPP
#define TAQUIN_MONODROMY_HPP

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "taquin/dual_equivalence.hpp"
#include "taquin/partition.hpp"

namespace taquin {

// One letter of a monodromy word.
struct Generator {
  enum class Kind { Sh, Esh };
  Kind kind;
  int index;

  std::string to_string() const {
    return (kind == Kind::Sh ? "sh" : "esh") + std::to_string(index);
  }

  friend bool operator==(const Generator&, const Generator&) = default;
};

// Word of generators, applied left to right (first letter acts first).
using MonodromyWord = std::vector<Generator>;

inline std::string word_to_string(const MonodromyWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += w[i].to_string();
  }
  return s.empty() ? "id" : s;
}

// Monodromy of the loop around all marked points, conjugated to act on
// chains starting with the moving box:  sh_1 .. sh_{r-1} followed by
// esh_{r-1} .. esh_1, on X_empty^rect(box, lambda_1, ..., lambda_r).
inline MonodromyWord word_box_leading(int r) {
  detail::require(r >= 1, "word_box_leading: r must be >= 1");
  MonodromyWord w;
  for (int i = 1; i <= r - 1; ++i) w.push_back({Generator::Kind::Sh, i});
  for (int i = r - 1; i >= 1; --i) w.push_back({Generator::Kind::Esh, i});
  return w;
}

// Same loop read from the fiber over the first marked point:
// sh_2 .. sh_{r-1} followed by esh_{r-1} .. esh_2, on
// X_empty^rect(lambda_1, box, lambda_2, ..., lambda_r).
inline MonodromyWord word_box_second(int r) {
  detail::require(r >= 2, "word_box_second: r must be >= 2");
  MonodromyWord w;
  for (int i = 2; i <= r - 1; ++i) w.push_back({Generator::Kind::Sh, i});
  for (int i = r - 1; i >= 2; --i) w.push_back({Generator::Kind::Esh, i});
  return w;
}

// The loop for the circular order with the first two marked points
// swapped, read from the same fiber:  esh_2, sh_3 .. sh_{r-1},
// esh_{r-1} .. esh_3, sh_2.
inline MonodromyWord word_adjacent_swap_first_two(int r) {
  detail::require(r >= 2, "word_adjacent_swap_first_two: r must be >= 2");
  MonodromyWord w;
  w.push_back({Generator::Kind::Esh, 2});
  for (int i = 3; i <= r - 1; ++i) w.push_back({Generator::Kind::Sh, i});
  for (int i = r - 1; i >= 3; --i) w.push_back({Generator::Kind::Esh, i});
  w.push_back({Generator::Kind::Sh, 2});
  return w;
}

inline DEChain apply_generator(const DEChain& chain, const Generator& g) {
  return g.kind == Generator::Kind::Sh ? sh(chain, g.index)
                                       : esh(chain, g.index);
}

inline DEChain apply_word(const DEChain& chain, const MonodromyWord& w) {
  DEChain cur = chain;
  for (const Generator& g : w) cur = apply_generator(cur, g);
  return cur;
}

// Orbit structure of a permutation of an indexed set.  Orbits are cycles,
// each starting at its smallest index, listed by smallest index; sign is
// the permutation parity, equal to set_size - #orbits mod 2.
struct OrbitReport {
  int set_size = 0;
  std::vector<std::vector<int>> orbits;
  int sign = 0;

  int component_count() const { return static_cast<int>(orbits.size()); }

  bool is_identity() const {
    for (const auto& orb : orbits)
      if (orb.size() != 1) return false;
    return true;
  }

  std::vector<std::size_t> orbit_sizes() const {
    std::vector<std::size_t> out;
    for (const auto& orb : orbits) out.push_back(orb.size());
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline OrbitReport orbit_report_of_permutation(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  OrbitReport rep;
  rep.set_size = n;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> orb;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      orb.push_back(j);
    }
    rep.orbits.push_back(std::move(orb));
  }
  rep.sign = (n - static_cast<int>(rep.orbits.size())) % 2;
  return rep;
}

// The permutation a word induces on a chain set: perm[i] is the index of
// word applied to set[i].  Throws if the word does not permute the set.
inline std::vector<int> word_permutation(const std::vector<DEChain>& set,
                                         const MonodromyWord& w) {
  std::map<DEChain, int> index;
  for (std::size_t i = 0; i < set.size(); ++i)
    index.emplace(set[i], static_cast<int>(i));
  std::vector<int> perm(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto it = index.find(apply_word(set[i], w));
    detail::ensure(it != index.end(),
                   "word_permutation: word does not permute the set");
    perm[i] = it->second;
  }
  return perm;
}

inline OrbitReport orbit_report(const std::vector<DEChain>& set,
                                const MonodromyWord& w) {
  return orbit_report_of_permutation(word_permutation(set, w));
}

// X_empty^rect(types with a box inserted after the first `after` types).
inline std::vector<DEChain> fiber_with_box_after(
    const std::vector<Partition>& types, const Rectangle& rect, int after) {
  detail::require(after >= 0 && after <= static_cast<int>(types.size()),
                  "fiber_with_box_after: position out of range");
  std::vector<Partition> with_box = types;
  with_box.insert(with_box.begin() + after, Partition{1});
  return enumerate_chains(Partition{}, rectangle_partition(rect), with_box);
}

enum class WordPreset { BoxLeading, BoxSecond, AdjacentSwapFirstTwo };

inline MonodromyWord preset_word(WordPreset preset, int r) {
  switch (preset) {
    case WordPreset::BoxLeading: return word_box_leading(r);
    case WordPreset::BoxSecond: return word_box_second(r);
    case WordPreset::AdjacentSwapFirstTwo:
      return word_adjacent_swap_first_two(r);
  }
  throw std::logic_error("preset_word: unknown preset");
}

// Box position the preset's word acts at: before all types for the full
// loop, after the first type otherwise.
inline int preset_box_position(WordPreset preset) {
  return preset == WordPreset::BoxLeading ? 0 : 1;
}

inline std::vector<DEChain> preset_fiber(const std::vector<Partition>& types,
                                         const Rectangle& rect,
                                         WordPreset preset) {
  return fiber_with_box_after(types, rect, preset_box_position(preset));
}

inline OrbitReport monodromy_orbits(const std::vector<Partition>& types,
                                    const Rectangle& rect, WordPreset preset) {
  return orbit_report(preset_fiber(types, rect, preset),
                      preset_word(preset, static_cast<int>(types.size())));
}

// Number of connected components of the real Schubert curve for the given
// type list, with the marked points in list order.
inline int component_count(const std::vector<Partition>& types,
                           const Rectangle& rect,
                           WordPreset preset = WordPreset::BoxSecond) {
  return monodromy_orbits(types, rect, preset).component_count();
}

// Reorders types by a circular order (1-based permutation) and counts
// components of the standard loop for that order.
inline std::vector<Partition> permute_types(const std::vector<Partition>& types,
                                            const std::vector<int>& ordering) {
  detail::require(ordering.size() == types.size(),
                  "permute_types: ordering length mismatch");
  std::vector<bool> seen(types.size(), false);
  std::vector<Partition> out;
  for (int k : ordering) {
    detail::require(k >= 1 && k <= static_cast<int>(types.size()) &&
                        !seen[k - 1],
                    "permute_types: not a permutation of 1..r");
    seen[k - 1] = true;
    out.push_back(types[k - 1]);
  }
  return out;
}

// The caterpillar covering model: fibers indexed by the position of the
// moving box (after 0..r-1 of the r types), with the arcs between
// consecutive fibers realized by sh_i and esh_i, and iota identifying
// X_box^rect(types) with the fiber having the box first.
struct CoveringModel {
  Rectangle rect;
  std::vector<Partition> types;
  std::vector<DEChain> base;                  // X_box^rect(types)
  std::vector<std::vector<DEChain>> fibers;   // box after 0..r-1 types
  std::vector<int> iota;                      // base index -> fibers[0] index
  // For i = 1..r-1: index maps fibers[i-1] -> fibers[i].
  std::map<int, std::vector<int>> sh_arcs;
  std::map<int, std::vector<int>> esh_arcs;
};

inline CoveringModel build_covering(const std::vector<Partition>& types,
                                    const Rectangle& rect) {
  int r = static_cast<int>(types.size());
  detail::require(r >= 1, "build_covering: no types");
  CoveringModel model{rect, types, {}, {}, {}, {}, {}};
  model.base =
      enumerate_chains(Partition{1}, rectangle_partition(rect), types);
  for (int i = 0; i <= r - 1; ++i)
    model.fibers.push_back(fiber_with_box_after(types, rect, i));
  for (const auto& fiber : model.fibers)
    detail::ensure(fiber.size() == model.base.size(),
                   "build_covering: fibers must have equal cardinality");

  // iota prepends the single-box class to a chain of X_box^rect(types).
  std::map<DEChain, int> index0;
  for (std::size_t j = 0; j < model.fibers[0].size(); ++j)
    index0.emplace(model.fibers[0][j], static_cast<int>(j));
  DualClass box_class = straight_class(Partition{1});
  for (const DEChain& chain : model.base) {
    std::vector<DualClass> classes{box_class};
    for (const DualClass& d : chain.classes()) classes.push_back(d);
    auto it = index0.find(DEChain(Partition{}, std::move(classes)));
    detail::ensure(it != index0.end(), "build_covering: iota misses the fiber");
    model.iota.push_back(it->second);
  }

  auto arc = [&](int i, bool use_esh) {
    std::map<DEChain, int> index;
    for (std::size_t j = 0; j < model.fibers[i].size(); ++j)
      index.emplace(model.fibers[i][j], static_cast<int>(j));
    std::vector<int> out;
    std::vector<bool> hit(model.fibers[i].size(), false);
    // The box sits at position i in fibers[i-1]; generator i moves it on.
    for (const DEChain& chain : model.fibers[i - 1]) {
      DEChain image = use_esh ? esh(chain, i) : sh(chain, i);
      auto it = index.find(image);
      detail::ensure(it != index.end() && !hit[it->second],
                     "build_covering: arc is not a bijection between fibers");
      hit[it->second] = true;
      out.push_back(it->second);
    }
    return out;
  };
  for (int i = 1; i <= r - 1; ++i) {
    model.sh_arcs[i] = arc(i, false);
    model.esh_arcs[i] = arc(i, true);
  }
  return model;
}

// Graphviz rendering of the covering: one node per chain, arcs labelled.
inline std::string covering_to_dot(const CoveringModel& model) {
  std::string s = "digraph covering {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < model.fibers.size(); ++i) {
    s += "  subgraph cluster_f" + std::to_string(i) + " {\n";
    s += "    label=\"fiber " + std::to_string(i) + "\";\n";
    for (std::size_t j = 0; j < model.fibers[i].size(); ++j)
      s += "    f" + std::to_string(i) + "_" + std::to_string(j) +
           " [label=\"" + std::to_string(j) + "\"];\n";
    s += "  }\n";
  }
  for (const auto& [i, perm] : model.sh_arcs)
    for (std::size_t j = 0; j < perm.size(); ++j)
      s += "  f" + std::to_string(i - 1) + "_" + std::to_string(j) + " -> f" +
           std::to_string(i) + "_" + std::to_string(perm[j]) +
           " [label=\"sh" + std::to_string(i) + "\"];\n";
  for (const auto& [i, perm] : model.esh_arcs)
    for (std::size_t j = 0; j < perm.size(); ++j)
      s += "  f" + std::to_string(i - 1) + "_" + std::to_string(j) + " -> f" +
           std::to_string(i) + "_" + std::to_string(perm[j]) +
           " [label=\"esh" + std::to_string(i) + "\", style=dashed];\n";
  s += "}\n";
  return s;
}

}  // namespace taquin

#endif
