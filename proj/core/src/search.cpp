#include "skolem/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <random>
#include <cstdlib>
#include <thread>

#include "skolem/compose.hpp"
#include "skolem/error.hpp"

namespace skolem {

PairingProblem pairing_problem(const SeqKind& kind, int order) {
  PairingProblem p;
  p.length = kind.length(order);
  const int hook = kind.hook_position(order);
  if (hook != 0) p.holes.push_back(hook);
  for (int k : kind.differences(order)) {
    if (kind.tag == KindTag::modified_extended_langford && k == kind.extra) {
      p.fixed.emplace_back(k, kind.hook);
      continue;
    }
    p.symbols.push_back(k);
  }
  return p;
}

namespace {

// Fixed-width bit set over positions 0..len (bit 0 unused).
class Bits {
 public:
  explicit Bits(int len) : w_(static_cast<std::size_t>(len / 64 + 1), 0) {}
  void set(int i) { w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u; }
  std::size_t words() const { return w_.size(); }
  std::uint64_t word(std::size_t i) const { return w_[i]; }
  std::uint64_t& word(std::size_t i) { return w_[i]; }

  // Word i of (this >> k).
  std::uint64_t shifted_down(std::size_t i, int k) const {
    const std::size_t q = static_cast<std::size_t>(k) >> 6;
    const int r = k & 63;
    const std::size_t src = i + q;
    if (src >= w_.size()) return 0;
    std::uint64_t lo = w_[src] >> r;
    if (r != 0 && src + 1 < w_.size()) lo |= w_[src + 1] << (64 - r);
    return lo;
  }

 private:
  std::vector<std::uint64_t> w_;
};

class Solver {
 public:
  Solver(const PairingProblem& problem, SymbolOrder order, std::uint64_t budget)
      : len_(problem.length), budget_(budget), free_(problem.length), pairs_(problem.length),
        cover_(problem.length) {
    board_.assign(static_cast<std::size_t>(len_) + 2, 0);
    for (int p = 1; p <= len_; ++p) free_.set(p);
    for (int h : problem.holes) {
      if (h >= 1 && h <= len_) free_.reset(h);
    }
    symbols_ = problem.symbols;
    std::sort(symbols_.begin(), symbols_.end());
    if (order == SymbolOrder::descending) std::reverse(symbols_.begin(), symbols_.end());
    used_.assign(symbols_.size(), false);
    for (auto [sym, pos] : problem.fixed) {
      if (!place_ok(pos, sym)) {
        infeasible_ = true;
        continue;
      }
      put(pos, sym, sym);
    }
  }

  bool infeasible() const { return infeasible_; }
  std::uint64_t nodes() const { return nodes_; }
  bool budget_hit() const { return budget_hit_; }

  int lowest_free(int from = 1) const {
    for (int p = from; p <= len_; ++p) {
      if (free_.test(p)) return p;
    }
    return 0;
  }

  bool place_ok(int pos, int sym) const {
    const int q = pos + sym;
    if (pos < 1 || q > len_) return false;
    return free_.test(pos) && free_.test(q);
  }

  void put(int pos, int sym, int value) {
    board_[static_cast<std::size_t>(pos)] = value;
    board_[static_cast<std::size_t>(pos + sym)] = value;
    if (value == 0) {
      free_.set(pos);
      free_.set(pos + sym);
    } else {
      free_.reset(pos);
      free_.reset(pos + sym);
    }
  }

  void push(std::size_t k, int pos) {
    used_[k] = true;
    put(pos, symbols_[k], symbols_[k]);
  }
  void pop(std::size_t k, int pos) {
    used_[k] = false;
    put(pos, symbols_[k], 0);
  }

  std::vector<std::size_t> candidates(int pos) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < symbols_.size(); ++k) {
      if (!used_[k] && place_ok(pos, symbols_[k])) out.push_back(k);
    }
    return out;
  }

  // Every unplaced symbol still has a free pair of slots, and every free
  // position is still reachable by some unplaced symbol.
  bool viable() {
    const std::size_t W = free_.words();
    for (std::size_t i = 0; i < W; ++i) cover_.word(i) = 0;
    for (std::size_t k = 0; k < symbols_.size(); ++k) {
      if (used_[k]) continue;
      const int sym = symbols_[k];
      bool any = false;
      for (std::size_t i = 0; i < W; ++i) {
        pairs_.word(i) = free_.word(i) & free_.shifted_down(i, sym);
        any = any || pairs_.word(i) != 0;
      }
      if (!any) return false;
      // cover |= pairs | (pairs << sym)
      const std::size_t q = static_cast<std::size_t>(sym) >> 6;
      const int r = sym & 63;
      for (std::size_t i = 0; i < W; ++i) {
        std::uint64_t up = 0;
        if (i >= q) {
          up = pairs_.word(i - q) << r;
          if (r != 0 && i >= q + 1) up |= pairs_.word(i - q - 1) >> (64 - r);
        }
        cover_.word(i) |= pairs_.word(i) | up;
      }
    }
    for (std::size_t i = 0; i < W; ++i) {
      if (free_.word(i) & ~cover_.word(i)) return false;
    }
    return true;
  }

  // Most constrained choice first: a free position only one placement can
  // cover, else the unplaced symbol with the fewest placements (largest on
  // ties), tried left to right. Returns false to stop.
  bool run_constrained(const std::function<bool(const std::vector<int>&)>& visit) {
    if (budget_ != 0 && nodes_ >= budget_) {
      budget_hit_ = true;
      return false;
    }
    ++nodes_;
    const std::size_t W = free_.words();
    std::vector<std::uint64_t> once(W, 0), twice(W, 0);
    std::size_t best = symbols_.size();
    int best_count = 0;
    for (std::size_t k = 0; k < symbols_.size(); ++k) {
      if (used_[k]) continue;
      const int sym = symbols_[k];
      int count = 0;
      for (std::size_t i = 0; i < W; ++i) {
        pairs_.word(i) = free_.word(i) & free_.shifted_down(i, sym);
        count += std::popcount(pairs_.word(i));
      }
      if (count == 0) return true;
      const std::size_t q = static_cast<std::size_t>(sym) >> 6;
      const int r = sym & 63;
      for (std::size_t i = 0; i < W; ++i) {
        std::uint64_t up = 0;
        if (i >= q) {
          up = pairs_.word(i - q) << r;
          if (r != 0 && i >= q + 1) up |= pairs_.word(i - q - 1) >> (64 - r);
        }
        // A placement covers its two slots; a slot hit by both the left and
        // right end of the same symbol still counts twice.
        const std::uint64_t lo = pairs_.word(i);
        twice[i] |= (once[i] & (lo | up)) | (lo & up);
        once[i] |= lo | up;
      }
      if (best == symbols_.size() || count < best_count ||
          (count == best_count && (rng_ ? ((*rng_)() & 1) != 0 : sym > symbols_[best]))) {
        best = k;
        best_count = count;
      }
    }
    if (best == symbols_.size())
      return visit(std::vector<int>(board_.begin() + 1, board_.begin() + 1 + len_));
    int forced = 0;
    for (std::size_t i = 0; i < W && forced == 0; ++i) {
      if (free_.word(i) & ~once[i]) return true;
      const std::uint64_t single = free_.word(i) & ~twice[i];
      if (single) forced = static_cast<int>(i * 64) + std::countr_zero(single);
    }
    if (forced != 0 && best_count > 1) {
      for (std::size_t k = 0; k < symbols_.size(); ++k) {
        if (used_[k]) continue;
        const int sym = symbols_[k];
        for (int pos : {forced, forced - sym}) {
          if (!place_ok(pos, sym)) continue;
          push(k, pos);
          const bool go_on = run_constrained(visit);
          pop(k, pos);
          return go_on;
        }
      }
      return true;
    }
    const int sym = symbols_[best];
    std::vector<int> spots;
    for (int pos = 1; pos + sym <= len_; ++pos)
      if (place_ok(pos, sym)) spots.push_back(pos);
    if (rng_) std::shuffle(spots.begin(), spots.end(), *rng_);
    for (int pos : spots) {
      push(best, pos);
      const bool go_on = run_constrained(visit);
      pop(best, pos);
      if (!go_on) return false;
    }
    return true;
  }

  // Randomises tie-breaks and placement order in run_constrained.
  void shuffle_with(std::mt19937_64* rng) { rng_ = rng; }

  // Largest unplaced symbol first, at each of its placements left to right.
  // symbols_ must be in descending order. Returns false to stop.
  bool run_by_symbol(const std::function<bool(const std::vector<int>&)>& visit, std::size_t k = 0) {
    while (k < symbols_.size() && used_[k]) ++k;
    if (budget_ != 0 && nodes_ >= budget_) {
      budget_hit_ = true;
      return false;
    }
    ++nodes_;
    if (k == symbols_.size())
      return visit(std::vector<int>(board_.begin() + 1, board_.begin() + 1 + len_));
    const int sym = symbols_[k];
    for (int pos = 1; pos + sym <= len_; ++pos) {
      if (!place_ok(pos, sym)) continue;
      push(k, pos);
      const bool go_on = !viable() || run_by_symbol(visit, k + 1);
      pop(k, pos);
      if (!go_on) return false;
    }
    return true;
  }

  // Depth-first search from the current board, filling the lowest free
  // position each step. Returns false to stop.
  bool run(const std::function<bool(const std::vector<int>&)>& visit, int from = 1) {
    if (budget_ != 0 && nodes_ >= budget_) {
      budget_hit_ = true;
      return false;
    }
    ++nodes_;
    const int pos = lowest_free(from);
    if (pos == 0) {
      if (std::find(used_.begin(), used_.end(), false) != used_.end()) return true;
      return visit(std::vector<int>(board_.begin() + 1, board_.begin() + 1 + len_));
    }
    for (std::size_t k = 0; k < symbols_.size(); ++k) {
      if (used_[k] || !place_ok(pos, symbols_[k])) continue;
      push(k, pos);
      const bool go_on = !viable() || run(visit, pos + 1);
      pop(k, pos);
      if (!go_on) return false;
    }
    return true;
  }

 private:
  int len_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
  bool infeasible_ = false;
  std::vector<int> board_;
  Bits free_;
  Bits pairs_;
  Bits cover_;
  std::vector<int> symbols_;
  std::vector<bool> used_;
  std::mt19937_64* rng_ = nullptr;
};

bool problem_sane(const PairingProblem& p) {
  std::size_t filled = 2 * (p.symbols.size() + p.fixed.size()) + p.holes.size();
  return p.length >= 1 && filled == static_cast<std::size_t>(p.length);
}

}  // namespace

bool solve_pairing(const PairingProblem& problem, SymbolOrder order,
                   const std::function<bool(const std::vector<int>&)>& visit,
                   std::uint64_t node_budget, std::uint64_t* nodes) {
  if (!problem_sane(problem)) return true;
  Solver solver(problem, order, node_budget);
  if (solver.infeasible()) return true;
  solver.run(visit);
  if (nodes) *nodes = solver.nodes();
  return !solver.budget_hit();
}

SearchResult search_pairings(const PairingProblem& problem, const SearchOptions& opts) {
  SearchResult result;
  if (!problem_sane(problem)) return result;

  const std::size_t limit = opts.limit;
  auto collect_into = [limit](std::vector<std::vector<int>>& out) {
    return [&out, limit](const std::vector<int>& s) {
      out.push_back(s);
      return limit == 0 || out.size() < limit;
    };
  };

  Solver root(problem, opts.order, opts.node_budget);
  if (root.infeasible()) return result;
  const int pos = root.lowest_free();
  if (opts.workers <= 1 || pos == 0) {
    root.run(collect_into(result.solutions));
    result.complete = !root.budget_hit();
    result.nodes = root.nodes();
    return result;
  }

  // One task per top-level branch; each runs an independent solver.
  const std::vector<std::size_t> branches = root.candidates(pos);
  std::vector<std::vector<std::vector<int>>> per_branch(branches.size());
  std::vector<std::uint64_t> branch_nodes(branches.size(), 0);
  std::vector<char> branch_complete(branches.size(), 1);
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= branches.size()) return;
      Solver s(problem, opts.order, opts.node_budget);
      s.push(branches[b], pos);
      s.run(collect_into(per_branch[b]), pos + 1);
      branch_nodes[b] = s.nodes();
      branch_complete[b] = s.budget_hit() ? 0 : 1;
    }
  };

  const std::size_t nthreads =
      std::min<std::size_t>(static_cast<std::size_t>(opts.workers), branches.size());
  std::vector<std::thread> threads;
  threads.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  result.nodes = 1;
  for (std::size_t b = 0; b < branches.size(); ++b) {
    result.nodes += branch_nodes[b];
    if (!branch_complete[b]) result.complete = false;
    for (auto& s : per_branch[b]) {
      if (limit != 0 && result.solutions.size() >= limit) break;
      result.solutions.push_back(std::move(s));
    }
  }
  return result;
}

std::vector<Sequence> enumerate(const SeqKind& kind, int order, std::size_t limit, int workers) {
  std::vector<Sequence> out;
  if (order < 1) return out;
  SearchOptions opts;
  opts.limit = limit;
  opts.workers = workers;
  auto res = search_pairings(pairing_problem(kind, order), opts);
  out.reserve(res.solutions.size());
  for (auto& s : res.solutions) out.emplace_back(std::move(s), kind, order);
  return out;
}

std::optional<Sequence> find_first(const SeqKind& kind, int order, std::uint64_t node_budget) {
  if (order < 1) return std::nullopt;
  const auto rule = exists(kind, order);
  if (rule.decided && !rule.exists) return std::nullopt;
  const PairingProblem problem = pairing_problem(kind, order);
  if (!problem_sane(problem)) return std::nullopt;
  std::optional<Sequence> found;
  auto cb = [&](const std::vector<int>& s) {
    found.emplace(s, kind, order);
    return false;
  };
  // Each strategy has instances where it stalls, so they take turns with a
  // doubling node allowance. A deterministic run that finishes inside its
  // allowance is a complete search and settles the question. The fourth turn
  // spends its allowance on short randomised restarts with fixed seeds, which
  // escape the heavy tails of the other three on large instances.
  std::uint64_t spent = 0;
  std::uint64_t seed = 0;
  const std::uint64_t restart = 50 * static_cast<std::uint64_t>(problem.length);
  for (std::uint64_t round = 50'000;; round *= 2) {
    for (int strategy = 0; strategy < 4; ++strategy) {
      std::uint64_t allowance = round;
      if (node_budget != 0) {
        if (spent >= node_budget) return std::nullopt;
        allowance = std::min(allowance, node_budget - spent);
      }
      if (strategy == 3) {
        for (std::uint64_t used = 0; used < allowance && !found;) {
          std::mt19937_64 rng(++seed);
          Solver solver(problem, SymbolOrder::descending, std::min(restart, allowance - used));
          solver.shuffle_with(&rng);
          solver.run_constrained(cb);
          used += solver.nodes();
        }
        spent += allowance;
        if (found) return found;
        continue;
      }
      Solver solver(problem, SymbolOrder::descending, allowance);
      if (solver.infeasible()) return std::nullopt;
      if (strategy == 0)
        solver.run_constrained(cb);
      else if (strategy == 1)
        solver.run(cb);
      else
        solver.run_by_symbol(cb);
      spent += solver.nodes();
      if (found || !solver.budget_hit()) return found;
    }
  }
}

std::optional<Sequence> find_with_pivots(const SeqKind& kind, int order,
                                         const PivotRequirement& req) {
  if (!kind.is_skolem_family())
    throw InvalidInput("pivot search needs a Skolem or hooked Skolem kind");
  if (order < 1) return std::nullopt;
  std::optional<Sequence> found;
  solve_pairing(pairing_problem(kind, order), SymbolOrder::ascending,
                [&](const std::vector<int>& s) {
                  Sequence seq(s, kind, order);
                  const auto pv = pivots(seq);
                  if (static_cast<int>(pv.size()) < req.min_count) return true;
                  for (int need : req.must_include) {
                    if (!std::binary_search(pv.begin(), pv.end(), need)) return true;
                  }
                  found.emplace(std::move(seq));
                  return false;
                });
  return found;
}

int default_workers() {
  if (const char* env = std::getenv("SKOLEM_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 1;
}

}  // namespace skolem
