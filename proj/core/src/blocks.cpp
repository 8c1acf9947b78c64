#include "skolem/blocks.hpp"

#include <algorithm>

#include "skolem/error.hpp"

namespace skolem {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::standard: return "standard";
    case Provenance::alt_form: return "alt";
    case Provenance::pivoted: return "pivoted";
    case Provenance::shifted: return "shifted";
    case Provenance::mixed: return "mixed";
  }
  return "?";
}

std::array<int, 3> BlockTriple::differences() const {
  std::array<int, 3> d{values[1] - values[0], values[2] - values[1], values[2] - values[0]};
  std::sort(d.begin(), d.end());
  return d;
}

bool BlockTriple::contains(int label) const {
  return std::find(values.begin(), values.end(), label) != values.end();
}

std::string BlockTriple::to_string() const {
  return std::to_string(values[0]) + "," + std::to_string(values[1]) + "," +
         std::to_string(values[2]);
}

std::vector<std::array<int, 3>> heffter_triples(const PairSet& ps, int n) {
  std::vector<std::array<int, 3>> out;
  out.reserve(ps.pairs.size());
  for (const auto& [i, pr] : ps.pairs) out.push_back({i, pr.first + n, pr.second + n});
  return out;
}

namespace {

BlockTriple make_block(int i, const PositionPair& pr, int n, BlockForm form) {
  BlockTriple b;
  b.difference = i;
  if (form == BlockForm::standard) {
    b.values = {0, pr.first + n, pr.second + n};
    b.provenance = Provenance::standard;
  } else {
    b.values = {0, i, pr.second + n};
    b.provenance = Provenance::alt_form;
  }
  return b;
}

}  // namespace

std::vector<BlockTriple> base_blocks(const PairSet& ps, int n, BlockForm form) {
  std::vector<BlockTriple> out;
  out.reserve(ps.pairs.size());
  for (const auto& [i, pr] : ps.pairs) out.push_back(make_block(i, pr, n, form));
  return out;
}

std::vector<BlockTriple> base_blocks(const PairSet& ps, int n, std::span<const BlockForm> forms) {
  if (forms.size() != ps.pairs.size())
    throw InvalidInput("need one block form per difference");
  std::vector<BlockTriple> out;
  out.reserve(ps.pairs.size());
  std::size_t k = 0;
  for (const auto& [i, pr] : ps.pairs) out.push_back(make_block(i, pr, n, forms[k++]));
  return out;
}

BlockTriple pivot_block(const BlockTriple& block, int n, bool hooked) {
  const int i = block.difference;
  if (i < 1) throw InvalidInput("block has no difference index to pivot by");
  BlockTriple out = block;
  for (int& v : out.values) v += i;
  const int top = out.max();
  const bool in_range = hooked ? (top <= 3 * n + 1 && top != 3 * n) : top <= 3 * n;
  if (!in_range)
    throw Infeasible("difference " + std::to_string(i) + " is not a pivot: block " +
                     block.to_string() + " would reach " + std::to_string(top));
  out.provenance = block.provenance == Provenance::alt_form ? Provenance::mixed
                                                            : Provenance::pivoted;
  out.shift = block.shift + i;
  return out;
}

BlockTriple shift_block(const BlockTriple& block, int c, int max_label) {
  BlockTriple out = block;
  for (int& v : out.values) v += c;
  if (out.min() < 0 || out.max() > max_label)
    throw Infeasible("shifting " + block.to_string() + " by " + std::to_string(c) +
                     " leaves the label range [0, " + std::to_string(max_label) + "]");
  if (c != 0) {
    const bool alt = block.provenance == Provenance::alt_form || block.provenance == Provenance::mixed;
    out.shift = block.shift + c;
    if (alt)
      out.provenance = Provenance::mixed;
    else
      out.provenance = out.shift == block.difference ? Provenance::pivoted : Provenance::shifted;
  }
  return out;
}

bool check_heffter(std::span<const BlockTriple> blocks, int n, bool hooked) {
  if (static_cast<int>(blocks.size()) != n) return false;
  const int top = hooked ? 3 * n + 1 : 3 * n;
  std::vector<int> count(static_cast<std::size_t>(top) + 1, 0);
  for (const auto& b : blocks) {
    for (int d : b.differences()) {
      if (d < 1 || d > top) return false;
      if (hooked && d == 3 * n) return false;
      if (++count[static_cast<std::size_t>(d)] > 1) return false;
    }
  }
  return true;
}

std::optional<BlockTriple> identify_block(std::array<int, 3> values, const PairSet& ps, int n) {
  std::sort(values.begin(), values.end());
  const int low_gap = values[1] - values[0];
  const int high_gap = values[2] - values[1];
  const int i = std::min(low_gap, high_gap);
  if (!ps.contains(i)) return std::nullopt;
  const PositionPair& pr = ps.at(i);
  const int a = pr.first + n;
  if (values[2] - values[0] != pr.second + n) return std::nullopt;

  BlockTriple b;
  b.values = values;
  b.difference = i;
  b.shift = values[0];
  if (low_gap == a && high_gap == i) {
    if (values[0] == 0)
      b.provenance = Provenance::standard;
    else
      b.provenance = values[0] == i ? Provenance::pivoted : Provenance::shifted;
  } else if (low_gap == i && high_gap == a) {
    b.provenance = values[0] == 0 ? Provenance::alt_form : Provenance::mixed;
  } else {
    return std::nullopt;
  }
  return b;
}

}  // namespace skolem
