#pragma once

// Building larger sequences from smaller ones, existence checks for the
// standard kinds, and search for extended Langford sequences.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skolem/sequence.hpp"

namespace skolem {

struct ExistenceVerdict {
  bool exists = false;
  bool decided = true;  // false for kinds with no closed-form condition
  std::string rule;
};

ExistenceVerdict exists(const SeqKind& kind, int order);

// s (order d-1) with a Langford or hooked Langford sequence of defect d.
//   Skolem + Langford        -> Skolem          (s first)
//   Skolem + hooked Langford -> hooked Skolem   (s first)
//   hooked Skolem + Langford -> hooked Skolem   (Langford first, so the hook ends up at 2N)
// The hooked + hooked case is interlace().
Sequence concatenate(const Sequence& s, const Sequence& langford);

// Overlays the reversed hooked Skolem sequence onto the tail of the hooked
// Langford sequence so each hook is filled by the other's end entry.
Sequence interlace(const Sequence& hs, const Sequence& hl);

struct ExtendResult {
  Sequence sequence;
  Sequence langford;        // the Langford part that was searched for
  std::vector<int> pivots;  // of the result
  std::string construction;
};

// Order extension to m >= 3n+1 via a (hooked) Langford sequence of defect
// n+1. The seed keeps its positions (or is moved as a block), so every pivot
// in `keep` is re-checked; a lost pivot throws Infeasible naming it.
ExtendResult extend_order(const Sequence& seed, const std::vector<int>& keep, int m,
                          std::uint64_t node_budget = 0);

// Langford sequence of defect d and order l (optionally hooked), found by
// largest-first backtracking. Empty if none exists.
std::optional<Sequence> langford_search(int d, int l, bool hooked, std::uint64_t node_budget = 0);

// p-extended Langford sequence over d..d+m-1 with its hook at p. With
// `extra` set, the hook is filled by that symbol and its partner occupies an
// appended last slot (one more empty slot precedes it when `hooked`); p must
// then equal length - extra.
std::optional<Sequence> extended_langford_search(int d, int m, int p,
                                                 std::optional<int> extra = std::nullopt,
                                                 bool hooked = false,
                                                 std::uint64_t node_budget = 0);

// Replaces the hook of a p-extended Langford sequence by `extra`, appending its
// partner (and an empty slot first when `hooked`). Throws InvalidInput if the
// gap does not match.
Sequence modify_extended(const Sequence& els, int extra, bool hooked = false);

}  // namespace skolem
