#pragma once

// Turns sequences into certified windmill labellings: plain windmills from
// base blocks, three-pendant types from pivoted blocks, Type (k) from mixed
// forms, and extra vanes attached at a vertex labelled 0.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skolem/blocks.hpp"
#include "skolem/cactus.hpp"
#include "skolem/sequence.hpp"

namespace skolem {

// Windmill structure read off a set of labelled triples.
struct DerivedWindmill {
  WindmillSpec spec;
  std::vector<int> labels;              // per vertex of build_windmill(spec)
  std::vector<BlockTriple> vane_blocks;
  std::vector<BlockTriple> pendant_blocks;
};

// Vanes are the triples holding `centre_label`; every other triple must meet
// the triples placed so far in exactly one label. Empty (with `why` set) when
// the triples do not form such a windmill.
std::optional<DerivedWindmill> derive_windmill(const std::vector<BlockTriple>& blocks,
                                               int centre_label = 0, std::string* why = nullptr);

struct Attachment {
  int pendant = 0;
  AttachDescriptor host;
  int label = 0;  // label of the shared vertex
};

struct LabellingPlan {
  std::optional<Sequence> sequence;
  WindmillSpec spec;
  int centre_label = 0;
  std::vector<BlockTriple> vane_blocks;     // per vane of the windmill
  std::vector<BlockTriple> pendant_blocks;  // per pendant of the windmill
  std::vector<Attachment> attachments;
  std::vector<int> labels;                  // per vertex of build_windmill(spec)
  std::vector<int> pivots_used;

  Graph graph() const;
  std::string summary() const;
};

// Maps the triples onto `spec` (vertex ids of build_windmill(spec)), trying
// pendant correspondences in lexicographic order. Throws Infeasible when the
// triples' structure differs from `spec`.
LabellingPlan plan_from_blocks(const std::vector<BlockTriple>& blocks, const WindmillSpec& spec,
                               int centre_label = 0);

// Standard base blocks with the chosen pivots applied. With no pivots given,
// every subset of pivots(seq) of the right size is tried in ascending order.
LabellingPlan plan_labelling(const Sequence& seq, const WindmillSpec& spec,
                             std::optional<std::vector<int>> chosen_pivots = std::nullopt);

struct LabelledWindmill {
  WindmillSpec spec;
  char type = '-';  // '-' for a plain windmill or a non-three-pendant cactus
  Graph graph;
  LabellingVerdict verdict;
  std::optional<Sequence> sequence;
  std::vector<BlockTriple> blocks;  // in graph.blocks order, when built from a sequence
  std::string method;
  std::string detail;
};

Verdict expected_mode(int n);

// Plain windmill of order n from a (hooked) Skolem sequence, vanes in
// ascending difference order. Throws Infeasible when `mode` contradicts n.
LabelledWindmill label_windmill(int n, std::optional<Verdict> mode = std::nullopt,
                                BlockForm form = BlockForm::standard);
LabelledWindmill label_windmill(const Sequence& seq, const std::vector<BlockForm>& forms);

struct LabelOptions {
  int workers = 1;
  std::uint64_t node_budget = 200'000'000;  // exhaustive fallback only
  bool allow_exhaustive = true;
};

// Type (a)..(k) windmill of order n. Tries, in order: the catalog row, order
// extension of the type's seed, a pivot search over all sequences of order
// n, and an exhaustive labelling search.
LabelledWindmill label_type(char type, int n, const LabelOptions& opts = {});
// Same, but with a caller-supplied sequence and optional pivots.
LabelledWindmill label_type(char type, const Sequence& seq,
                            std::optional<std::vector<int>> chosen_pivots = std::nullopt);

LabelledWindmill label_type_k(int n);

// Attaches vanes at the first vertex labelled 0.
//   case 1: near-graceful -> graceful, l+1 vanes, modified extended Langford
//   case 2: graceful -> graceful, l vanes, Langford
//   case 3: graceful -> near-graceful, l vanes, hooked Langford
//   case 4: near-graceful -> near-graceful, l+1 vanes, hooked modified extended Langford
// `supplied` replaces the searched sequence when given.
struct AttachResult {
  Graph graph;
  LabellingVerdict verdict;
  std::optional<Sequence> sequence;  // empty when no vanes were added
  std::vector<BlockTriple> added;
};
AttachResult attach_vanes(const Graph& g, int l, int which_case,
                          std::optional<Sequence> supplied = std::nullopt,
                          std::uint64_t node_budget = 0);

// Order-25 windmill with four pendants from S8 followed by a Langford
// sequence of defect 9, pivoting 1, 2, 4 and 11.
LabelledWindmill four_pendant_demo();

}  // namespace skolem
