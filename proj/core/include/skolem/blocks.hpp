#pragma once

// Difference triples and base blocks built from a pair set, plus the two
// transforms that keep a block's differences intact: pivoting and shifting.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skolem/sequence.hpp"

namespace skolem {

enum class Provenance {
  standard,  // {0, a_i+n, b_i+n}
  alt_form,  // {0, i, b_i+n}
  pivoted,   // standard block shifted by its own difference i
  shifted,   // standard block shifted by some constant
  mixed,     // alt-form block shifted by some constant
};

const char* to_string(Provenance p);

enum class BlockForm { standard, alt };

struct BlockTriple {
  std::array<int, 3> values{};  // ascending
  Provenance provenance = Provenance::standard;
  int difference = 0;  // the i this block was built from
  int shift = 0;       // constant added (pivoted: equals difference)

  // Sorted pairwise differences {y-x, z-y, z-x}.
  std::array<int, 3> differences() const;
  bool contains(int label) const;
  int min() const { return values[0]; }
  int max() const { return values[2]; }
  std::string to_string() const;  // "x,y,z"

  friend bool operator==(const BlockTriple&, const BlockTriple&) = default;
};

// (i, a_i+n, b_i+n) for every difference, ascending in i.
std::vector<std::array<int, 3>> heffter_triples(const PairSet& ps, int n);

std::vector<BlockTriple> base_blocks(const PairSet& ps, int n, BlockForm form);

// Per-difference form choice; `forms[k]` applies to the k-th difference in
// ascending order.
std::vector<BlockTriple> base_blocks(const PairSet& ps, int n, std::span<const BlockForm> forms);

// Adds the block's difference index to every entry. Throws Infeasible when
// the result leaves the labelling range (max 3n, or 3n+1 avoiding 3n when
// hooked), i.e. when the difference is not a pivot.
BlockTriple pivot_block(const BlockTriple& block, int n, bool hooked);

// Adds c to every entry. Throws Infeasible when an entry would exceed
// `max_label` or fall below 0.
BlockTriple shift_block(const BlockTriple& block, int c, int max_label);

// True iff the pairwise differences of `blocks` are exactly {1..3n} (plain)
// or {1..3n-1, 3n+1} (hooked), each once.
bool check_heffter(std::span<const BlockTriple> blocks, int n, bool hooked);

// Recovers how `values` was built from `ps`: which difference, which form,
// which shift. Empty when it is not any of the recognised forms.
std::optional<BlockTriple> identify_block(std::array<int, 3> values, const PairSet& ps, int n);

}  // namespace skolem
