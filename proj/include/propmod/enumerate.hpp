#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "propmod/error.hpp"
#include "propmod/intervals.hpp"

namespace propmod {

struct CensusRow {
  std::int64_t genus = 0;
  std::uint64_t total = 0;
  std::uint64_t propmod = 0;
  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// Node of the semigroup tree seen by visitors: the minimal generators and
/// gaps of one numerical semigroup.
struct TreeNode {
  std::span<const std::int64_t> generators;
  std::span<const std::int64_t> gaps;
  std::int64_t genus;
};

namespace detail {

// decs[x] counts unordered pairs {a, b} of members with a + b = x; members
// are the x with decs[x] > 0 and minimal generators those with decs[x] == 1.
struct TreeWalker {
  std::int64_t max_genus;
  std::size_t size;
  const std::function<void(const TreeNode&)>& visit;
  std::vector<std::int64_t> gens, gaps;

  void walk(const std::vector<std::uint8_t>& decs, std::int64_t conductor, std::int64_t genus) {
    gens.clear();
    gaps.clear();
    std::int64_t mult = 0;
    for (std::int64_t x = 1; x < conductor; ++x)
      if (decs[x] == 0) gaps.push_back(x);
      else if (mult == 0) mult = x;
    if (mult == 0) mult = conductor;
    for (std::int64_t x = 1; x < conductor + mult; ++x)
      if (decs[x] == 1) gens.push_back(x);
    visit(TreeNode{gens, gaps, genus});
    if (genus == max_genus) return;

    std::vector<std::int64_t> kids;
    for (std::int64_t g : gens)
      if (g >= conductor) kids.push_back(g);
    for (std::int64_t x : kids) {
      std::vector<std::uint8_t> child = decs;
      for (std::size_t y = static_cast<std::size_t>(x); y < size; ++y)
        if (decs[y - x] > 0) --child[y];
      walk(child, x + 1, genus + 1);
    }
  }
};

}  // namespace detail

/// Depth-first walk over every numerical semigroup of genus <= max_genus,
/// children removing one minimal generator above the Frobenius number.
inline void for_each_semigroup(std::int64_t max_genus, const std::function<void(const TreeNode&)>& visit) {
  if (max_genus < 0) throw InputError("max genus must be nonnegative");
  const std::size_t size = static_cast<std::size_t>(3 * max_genus + 3);
  std::vector<std::uint8_t> decs(size);
  for (std::size_t x = 0; x < size; ++x) decs[x] = static_cast<std::uint8_t>(x / 2 + 1);
  detail::TreeWalker walker{max_genus, size, visit, {}, {}};
  walker.walk(decs, 1, 0);
}

/// Gaps x with S u {x} closed: 2x in S and x + s in S for members s <= F.
inline std::vector<std::int64_t> special_gaps_of(std::span<const std::int64_t> gaps) {
  auto member = [&](std::int64_t x) { return !std::binary_search(gaps.begin(), gaps.end(), x); };
  std::vector<std::int64_t> out;
  const std::int64_t frob = gaps.empty() ? -1 : gaps.back();
  for (std::int64_t x : gaps) {
    if (!member(2 * x)) continue;
    bool ok = true;
    for (std::int64_t s = 1; s <= frob && ok; ++s)
      if (member(s) && !member(x + s)) ok = false;
    if (ok) out.push_back(x);
  }
  return out;
}

inline bool node_is_proportionally_modular(const TreeNode& node) {
  if (node.gaps.empty()) return true;
  std::vector<std::int64_t> special = special_gaps_of(node.gaps);
  bool found = false;
  detail::scan_defining_runs(node.generators, special, [&](const auto&, const auto&) {
    found = true;
    return false;
  });
  return found;
}

inline std::vector<CensusRow> census(std::int64_t max_genus, std::int64_t genus_cap = 25) {
  if (max_genus < 0) throw InputError("max genus must be nonnegative");
  if (max_genus > genus_cap) throw ResourceError("genus cap exceeded", static_cast<std::size_t>(max_genus));
  std::vector<CensusRow> rows(static_cast<std::size_t>(max_genus + 1));
  for (std::int64_t g = 0; g <= max_genus; ++g) rows[g].genus = g;
  for_each_semigroup(max_genus, [&](const TreeNode& node) {
    auto& row = rows[static_cast<std::size_t>(node.genus)];
    ++row.total;
    if (node_is_proportionally_modular(node)) ++row.propmod;
  });
  return rows;
}

}  // namespace propmod
