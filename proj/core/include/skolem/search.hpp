#pragma once

// Deterministic backtracking over Skolem-type pairings. Enumeration fills the
// lowest free position; the symbol order decides which solution comes first.
// Ascending order visits solutions lexicographically.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "skolem/sequence.hpp"

namespace skolem {

enum class SymbolOrder { ascending, descending };

struct PairingProblem {
  int length = 0;
  std::vector<int> symbols;                      // each placed twice, `symbol` apart
  std::vector<int> holes;                        // positions that stay 0
  std::vector<std::pair<int, int>> fixed;        // (symbol, first position) placed up front
};

PairingProblem pairing_problem(const SeqKind& kind, int order);

struct SearchOptions {
  std::size_t limit = 0;         // 0 = no limit
  int workers = 1;               // threads used for top-level branches
  std::uint64_t node_budget = 0; // 0 = unlimited; exceeding it stops the search
  SymbolOrder order = SymbolOrder::ascending;
};

struct SearchResult {
  std::vector<std::vector<int>> solutions;
  bool complete = true;   // false if the node budget ran out
  std::uint64_t nodes = 0;
};

// Visits solutions in solver order until `visit` returns false.
// Returns false if the node budget ran out first.
bool solve_pairing(const PairingProblem& problem, SymbolOrder order,
                   const std::function<bool(const std::vector<int>&)>& visit,
                   std::uint64_t node_budget = 0, std::uint64_t* nodes = nullptr);

// Collects solutions, optionally fanning the top-level branches out over
// worker threads. The merged list is in the same order a single thread would
// produce.
SearchResult search_pairings(const PairingProblem& problem, const SearchOptions& opts);

// All sequences of the kind, lexicographically ordered, up to `limit`.
std::vector<Sequence> enumerate(const SeqKind& kind, int order, std::size_t limit = 0,
                                int workers = 1);

// Some sequence of the kind, found by rotating three branching rules and
// short seeded restarts under a growing node allowance. Deterministic, but
// not the lexicographic first. Orders ruled out by the existence conditions
// return empty without searching; otherwise empty means none exists or the
// budget ran out.
std::optional<Sequence> find_first(const SeqKind& kind, int order,
                                   std::uint64_t node_budget = 0);

struct PivotRequirement {
  int min_count = 0;
  std::vector<int> must_include;
};

// First sequence in enumeration order whose pivot set meets `req`.
std::optional<Sequence> find_with_pivots(const SeqKind& kind, int order,
                                         const PivotRequirement& req);

// Worker count from SKOLEM_WORKERS, defaulting to 1.
int default_workers();

}  // namespace skolem
