#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "skolem/cactus.hpp"
#include "skolem/error.hpp"

using namespace skolem;

namespace {

int oracle_code(Verdict v) { return v == Verdict::graceful ? 0 : v == Verdict::near_graceful ? 1 : 2; }

Graph random_graph(std::mt19937& rng) {
  std::uniform_int_distribution<int> vc(2, 9);
  Graph g;
  g.vertex_count = vc(rng);
  std::bernoulli_distribution coin(0.4);
  for (int u = 0; u < g.vertex_count; ++u)
    for (int v = u + 1; v < g.vertex_count; ++v)
      if (coin(rng)) g.edges.emplace_back(u, v);
  if (g.edges.empty()) g.edges.emplace_back(0, 1);
  return g;
}

// Labels chosen so the edge differences come out as 1..m (or the near set)
// when possible: a random graceful tree-like construction.
Graph constructed_graph(std::mt19937& rng, bool near) {
  std::uniform_int_distribution<int> msize(2, 12);
  const int m = msize(rng);
  std::vector<int> want = oracle::range(1, m);
  if (near) want.back() = m + 1;
  Graph g;
  std::vector<int> labels = {0, want.back()};
  g.edges.emplace_back(0, 1);
  for (std::size_t k = 0; k + 1 < want.size(); ++k) {
    const int d = want[k];
    // Hang a new vertex labelled x at distance d from an existing label.
    std::vector<std::pair<int, int>> options;
    for (std::size_t v = 0; v < labels.size(); ++v) {
      for (int x : {labels[v] + d, labels[v] - d}) {
        if (x < 0 || x > want.back()) continue;
        if (std::find(labels.begin(), labels.end(), x) != labels.end()) continue;
        options.emplace_back(static_cast<int>(v), x);
      }
    }
    if (options.empty()) break;
    const auto [v, x] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    labels.push_back(x);
    g.edges.emplace_back(v, static_cast<int>(labels.size()) - 1);
  }
  g.vertex_count = static_cast<int>(labels.size());
  g.labels = labels;
  return g;
}

WindmillSpec relabel_vanes(const WindmillSpec& s, const std::vector<int>& perm, const std::vector<bool>& flip_vane,
                           const std::vector<bool>& flip_pendant) {
  WindmillSpec out = s;
  for (auto& p : out.pendants) {
    if (p.host == AttachDescriptor::Host::vane) {
      if (flip_vane[static_cast<std::size_t>(p.index)]) p.slot ^= 1;
      p.index = perm[static_cast<std::size_t>(p.index)];
    } else if (flip_pendant[static_cast<std::size_t>(p.index)]) {
      p.slot ^= 1;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("verifier agrees with an independent checker on random graphs") {
  std::mt19937 rng(12345);
  int graceful = 0, near = 0;
  for (int k = 0; k < 1000; ++k) {
    Graph g;
    if (k % 3 == 0) {
      g = random_graph(rng);
      const int m = g.edge_count();
      std::vector<int> pool = oracle::range(0, std::max(m + 1, g.vertex_count));
      std::shuffle(pool.begin(), pool.end(), rng);
      g.labels.assign(pool.begin(), pool.begin() + g.vertex_count);
      if (k % 2) g.labels[0] = g.labels[1];
    } else {
      g = constructed_graph(rng, k % 3 == 2);
    }
    const auto v = verify_labelling(g);
    const int want = oracle::classify(g.edges, g.labels);
    CHECK(oracle_code(v.verdict) == want);
    CHECK(v.edge_labels == oracle::edge_labels(g.edges, g.labels));
    graceful += want == 0;
    near += want == 1;
  }
  CHECK(graceful > 50);
  CHECK(near > 50);
}

TEST_CASE("verifier details") {
  Graph k3 = cycle_graph(3);
  k3.labels = {0, 1, 3};
  CHECK(verify_labelling(k3).verdict == Verdict::graceful);
  k3.labels = {0, 2, 2};
  const auto v = verify_labelling(k3);
  CHECK(v.verdict == Verdict::neither);
  CHECK(v.repeated_vertex_labels == std::vector<int>{2});
  CHECK_FALSE(v.reason.empty());
  Graph c5 = cycle_graph(5);
  c5.labels = {0, 6, 3, 5, 1};
  CHECK(verify_labelling(c5).verdict == Verdict::near_graceful);
  c5.labels = {0, 6, 3, 5, -1};
  CHECK_THROWS_AS(verify_labelling(c5), InvalidInput);
}

TEST_CASE("windmill shape") {
  for (char t = 'a'; t <= 'k'; ++t) {
    for (int n = minimum_order(t); n <= minimum_order(t) + 4; ++n) {
      const auto spec = canonical_spec(t, n);
      CHECK(classify(spec) == t);
      const Graph g = build_windmill(spec);
      CHECK(g.vertex_count == 2 * n + 1);
      CHECK(g.edge_count() == 3 * n);
      CHECK(check_cactus(g).ok());
      CHECK(g.adjacency()[0].size() == static_cast<std::size_t>(2 * spec.vanes()));
    }
    CHECK_THROWS_AS(canonical_spec(t, minimum_order(t) - 1), Infeasible);
  }
}

TEST_CASE("classification ignores vane order and slot choice") {
  std::mt19937 rng(99);
  for (char t = 'a'; t <= 'k'; ++t) {
    const auto spec = canonical_spec(t, 8);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> perm(static_cast<std::size_t>(spec.vanes()));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<bool> fv(perm.size()), fp(3);
      for (std::size_t i = 0; i < fv.size(); ++i) fv[i] = rng() & 1;
      for (std::size_t i = 0; i < fp.size(); ++i) fp[i] = rng() & 1;
      CHECK(classify(relabel_vanes(spec, perm, fv, fp)) == t);
    }
  }
}

TEST_CASE("malformed windmills") {
  WindmillSpec s;
  s.blocks = 2;
  s.pendants = {AttachDescriptor::on_vane(3)};
  CHECK_THROWS_AS(build_windmill(s), Infeasible);
  s.pendants = {AttachDescriptor::on_pendant(0)};
  CHECK_THROWS_AS(build_windmill(s), InvalidInput);
  CHECK_THROWS(classify(plain_windmill(5)));
}

TEST_CASE("cactus check rejects non-cacti") {
  CHECK_FALSE(check_cactus(cycle_graph(4)).ok());
  // Two triangles sharing an edge.
  Graph g;
  g.vertex_count = 4;
  g.blocks = {{0, 1, 2}, {0, 1, 3}};
  g.edges = {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {0, 3}};
  CHECK_FALSE(check_cactus(g).ok());
  // Disconnected.
  CHECK_FALSE(check_cactus(graph_from_blocks(6, {{0, 1, 2}, {3, 4, 5}})).ok());
  CHECK(check_cactus(graph_from_blocks(5, {{0, 1, 2}, {2, 3, 4}})).ok());
}

TEST_CASE("exhaustive labelling search") {
  CHECK(necessary_condition(4, Verdict::graceful));
  CHECK_FALSE(necessary_condition(2, Verdict::graceful));
  CHECK(necessary_condition(2, Verdict::near_graceful));
  for (int n : {1, 4}) {
    Graph g = build_windmill(plain_windmill(n));
    bool complete = false;
    const auto f = find_labelling(g, Verdict::graceful, 0, &complete);
    REQUIRE(f.has_value());
    g.labels = *f;
    CHECK(oracle::classify(g.edges, g.labels) == 0);
  }
  for (int n : {2, 3}) {
    const Graph g = build_windmill(plain_windmill(n));
    bool complete = false;
    CHECK_FALSE(find_labelling(g, Verdict::graceful, 0, &complete).has_value());
    CHECK(complete);
    CHECK_FALSE(oracle::any_graceful(g.vertex_count, g.edges));
    auto f = find_labelling(g, Verdict::near_graceful);
    REQUIRE(f.has_value());
    Graph h = g;
    h.labels = *f;
    CHECK(oracle::classify(h.edges, h.labels) == 1);
  }
}
