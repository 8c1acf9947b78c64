#pragma once

// Graphs, triangular cacti and Dutch windmills with pendant triangles, the
// Type (a)-(k) taxonomy, and the graceful / near-graceful checker.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skolem {

// Simple undirected graph with optional triangle blocks and vertex labels.
// Vertex ids are dense from 0. `labels` is either empty or one entry per
// vertex, with -1 marking an unlabelled vertex.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::array<int, 3>> blocks;
  std::vector<int> labels;

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool labelled() const;
  std::vector<std::vector<int>> adjacency() const;
};

Graph cycle_graph(int n);
// Edges are the three sides of every block.
Graph graph_from_blocks(int vertex_count, const std::vector<std::array<int, 3>>& blocks);

struct CactusReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

// Every block a triangle, blocks edge-disjoint and sharing at most one vertex,
// the edges exactly the block sides, the graph connected, and the block graph
// a tree (so the triangles are exactly the biconnected components).
CactusReport check_cactus(const Graph& g);

struct AttachDescriptor {
  enum class Host { vane, pendant };
  Host host = Host::vane;
  int index = 0;  // vane index, or index of an earlier pendant
  int slot = 0;   // 0 or 1: which outer / free vertex of the host

  static AttachDescriptor on_vane(int v, int slot = 0) { return {Host::vane, v, slot}; }
  static AttachDescriptor on_pendant(int p, int slot = 0) { return {Host::pendant, p, slot}; }
  friend bool operator==(const AttachDescriptor&, const AttachDescriptor&) = default;
};

struct WindmillSpec {
  int blocks = 0;  // n, vanes plus pendants
  std::vector<AttachDescriptor> pendants;

  int vanes() const { return blocks - static_cast<int>(pendants.size()); }
  std::string describe() const;
};

// Vertex ids used by build_windmill: centre 0, vane v has outer vertices
// 1+2v and 2+2v, pendant k has free vertices 1+2V+2k and 2+2V+2k.
int outer_vertex(const WindmillSpec& spec, int vane, int slot);
int free_vertex(const WindmillSpec& spec, int pendant, int slot);
int attachment_vertex(const WindmillSpec& spec, int pendant);

// Throws InvalidInput for malformed descriptors, Infeasible when a descriptor
// names a vane that does not exist.
Graph build_windmill(const WindmillSpec& spec);

char classify(const WindmillSpec& spec);
int minimum_order(char type);
bool is_type_letter(char type);
// The standard descriptor set for a type at order n; throws Infeasible below
// minimum_order(type).
WindmillSpec canonical_spec(char type, int n);
WindmillSpec plain_windmill(int n);

enum class Verdict { graceful, near_graceful, neither };
const char* to_string(Verdict v);

struct LabellingVerdict {
  Verdict verdict = Verdict::neither;
  std::vector<int> edge_labels;       // sorted multiset
  std::vector<int> missing;           // expected edge labels that never occur
  std::vector<int> duplicates;        // edge labels occurring more than once
  std::vector<int> repeated_vertex_labels;
  std::string reason;                 // empty when certified
};

// Throws InvalidInput when a vertex is unlabelled.
LabellingVerdict verify_labelling(const Graph& g);

// n mod 4 in {0,1} for graceful, {2,3} for near-graceful.
bool necessary_condition(int n, Verdict target);

// Exhaustive search for a labelling of `g` with the target verdict; returns
// per-vertex labels. Meant for small graphs. `complete` is cleared when the
// node budget runs out.
std::optional<std::vector<int>> find_labelling(const Graph& g, Verdict target,
                                               std::uint64_t node_budget = 0,
                                               bool* complete = nullptr);

}  // namespace skolem
