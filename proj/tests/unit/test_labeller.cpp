#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "skolem/compose.hpp"
#include "skolem/error.hpp"
#include "skolem/labeller.hpp"
#include "skolem/search.hpp"

using namespace skolem;

namespace {

std::vector<BlockTriple> triples(const std::vector<std::array<int, 3>>& xs) {
  std::vector<BlockTriple> out;
  for (auto v : xs) {
    std::sort(v.begin(), v.end());
    BlockTriple b;
    b.values = v;
    out.push_back(b);
  }
  return out;
}

int want_code(int n) { return (n % 4 == 0 || n % 4 == 1) ? 0 : 1; }

}  // namespace

TEST_CASE("windmill read off labelled triples") {
  const auto blocks = triples({{17, 13, 1}, {17, 0, 11}, {17, 10, 7}, {1, 16, 3}, {0, 5, 19}, {7, 15, 6}});
  const auto d = derive_windmill(blocks, 17);
  REQUIRE(d.has_value());
  CHECK(d->spec.vanes() == 3);
  CHECK(classify(d->spec) == 'a');
  Graph g = build_windmill(d->spec);
  g.labels = d->labels;
  CHECK(verify_labelling(g).verdict == Verdict::near_graceful);

  std::string why;
  CHECK_FALSE(derive_windmill(blocks, 42, &why).has_value());
  CHECK_FALSE(why.empty());
  CHECK_FALSE(derive_windmill(triples({{0, 1, 2}, {3, 4, 5}}), 0).has_value());
}

TEST_CASE("plain windmills from sequences") {
  for (int n = 1; n <= 24; ++n) {
    if (n == 2 || n == 3) {
      CHECK_THROWS_AS(label_windmill(n, Verdict::graceful), Infeasible);
      continue;
    }
    const auto w = label_windmill(n);
    CHECK(w.verdict.verdict == expected_mode(n));
    CHECK(oracle::classify(w.graph.edges, w.graph.labels) == want_code(n));
  }
  const auto s4 = parse_sequence("11423243", SeqKind::skolem());
  const auto alt = label_windmill(s4, std::vector<BlockForm>(4, BlockForm::alt));
  CHECK(alt.verdict.verdict == Verdict::graceful);
}

TEST_CASE("pivot plans for three pendants") {
  const auto s5 = parse_sequence("4115423253", SeqKind::skolem());
  const auto plan = plan_labelling(s5, canonical_spec('b', 5));
  CHECK(plan.pivots_used.size() == 3);
  Graph g = plan.graph();
  CHECK(oracle::classify(g.edges, g.labels) == 0);
  CHECK_FALSE(plan.summary().empty());
  CHECK_THROWS_AS(plan_labelling(s5, canonical_spec('b', 5), std::vector<int>{3, 5, 1}), Error);
}

TEST_CASE("every type at small and medium orders") {
  for (char t = 'a'; t <= 'k'; ++t) {
    for (int n = minimum_order(t); n <= 22; ++n) {
      CAPTURE(t);
      CAPTURE(n);
      const auto w = label_type(t, n);
      CHECK(w.verdict.verdict == expected_mode(n));
      CHECK(oracle::classify(w.graph.edges, w.graph.labels) == want_code(n));
      CHECK(classify(w.spec) == t);
      CHECK(check_cactus(w.graph).ok());
    }
    CHECK_THROWS_AS(label_type(t, minimum_order(t) - 1), Infeasible);
  }
}

TEST_CASE("labelling with a supplied sequence") {
  const auto s5 = parse_sequence("4115423253", SeqKind::skolem());
  const auto r = extend_order(s5, {1, 2, 4}, 16);
  const auto w = label_type('b', r.sequence, std::vector<int>{1, 2, 4});
  CHECK(w.verdict.verdict == Verdict::graceful);
  CHECK(classify(w.spec) == 'b');
  CHECK_THROWS_AS(label_type('k', s5), InvalidInput);
}

TEST_CASE("vane attachment, all four cases") {
  Graph k3 = cycle_graph(3);
  k3.labels = {0, 1, 3};
  Graph c5 = cycle_graph(5);
  c5.labels = {0, 6, 3, 5, 1};

  for (int l = 0; l <= 8; ++l) {
    CAPTURE(l);
    if (exists(SeqKind::langford(4), l).exists) {
      const auto r = attach_vanes(k3, l, 2);
      CHECK(r.graph.edge_count() == 3 + 3 * l);
      CHECK(oracle::classify(r.graph.edges, r.graph.labels) == 0);
    }
    if (l > 0 && exists(SeqKind::hooked_langford(4), l).exists) {
      const auto r = attach_vanes(k3, l, 3);
      CHECK(oracle::classify(r.graph.edges, r.graph.labels) == 1);
    }
  }
  const auto one = attach_vanes(c5, 13, 1);
  CHECK(one.graph.edge_count() == 5 + 3 * 14);
  CHECK(oracle::classify(one.graph.edges, one.graph.labels) == 0);
  CHECK(one.sequence->at(23) == 5);

  const auto four = attach_vanes(c5, 14, 4);
  CHECK(four.graph.edge_count() == 5 + 3 * 15);
  CHECK(oracle::classify(four.graph.edges, four.graph.labels) == 1);

  CHECK_THROWS_AS(attach_vanes(k3, 4, 1), InvalidInput);
  CHECK_THROWS_AS(attach_vanes(c5, 4, 2), InvalidInput);
  CHECK_THROWS_AS(attach_vanes(k3, 4, 5), InvalidInput);
  const auto same = attach_vanes(k3, 0, 2);
  CHECK(same.graph.edge_count() == 3);
  CHECK_FALSE(same.sequence.has_value());
}

TEST_CASE("order-25 windmill with four pendants") {
  const auto w = four_pendant_demo();
  CHECK(w.spec.blocks == 25);
  CHECK(w.spec.pendants.size() == 4);
  CHECK(w.verdict.verdict == Verdict::graceful);
  CHECK(oracle::classify(w.graph.edges, w.graph.labels) == 0);
}
