#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "skolem/blocks.hpp"
#include "skolem/error.hpp"
#include "skolem/search.hpp"

using namespace skolem;

namespace {

std::vector<int> differences_of(const std::vector<BlockTriple>& blocks) {
  std::vector<int> out;
  for (const auto& b : blocks) {
    const auto& v = b.values;
    out.push_back(v[1] - v[0]);
    out.push_back(v[2] - v[1]);
    out.push_back(v[2] - v[0]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("S4 blocks") {
  const auto ps = pairs(parse_sequence("11423243", SeqKind::skolem()));
  const auto h = heffter_triples(ps, 4);
  CHECK(h == std::vector<std::array<int, 3>>{{1, 5, 6}, {2, 8, 10}, {3, 9, 12}, {4, 7, 11}});
  const auto st = base_blocks(ps, 4, BlockForm::standard);
  CHECK(st[0].values == std::array<int, 3>{0, 5, 6});
  CHECK(st[3].values == std::array<int, 3>{0, 7, 11});
  const auto alt = base_blocks(ps, 4, BlockForm::alt);
  CHECK(alt[1].values == std::array<int, 3>{0, 2, 10});
  CHECK(alt[1].provenance == Provenance::alt_form);
}

TEST_CASE("base blocks solve the difference problem for every small sequence") {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& kind : {SeqKind::skolem(), SeqKind::hooked_skolem()}) {
      const bool hooked = kind.tag == KindTag::hooked_skolem;
      auto want = oracle::range(1, 3 * n);
      if (hooked) {
        want.pop_back();
        want.push_back(3 * n + 1);
      }
      for (const auto& s : enumerate(kind, n, 200)) {
        const auto ps = pairs(s);
        for (auto form : {BlockForm::standard, BlockForm::alt}) {
          const auto blocks = base_blocks(ps, n, form);
          CHECK(check_heffter(blocks, n, hooked));
          CHECK(differences_of(blocks) == want);
        }
      }
    }
  }
}

TEST_CASE("check_heffter rejects a broken set") {
  const auto ps = pairs(parse_sequence("11423243", SeqKind::skolem()));
  auto blocks = base_blocks(ps, 4, BlockForm::standard);
  blocks[0].values = {0, 5, 7};
  CHECK_FALSE(check_heffter(blocks, 4, false));
}

TEST_CASE("pivot and shift keep differences") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> val(0, 60);
  for (int k = 0; k < 2000; ++k) {
    BlockTriple b;
    b.values = {val(rng), val(rng), val(rng)};
    std::sort(b.values.begin(), b.values.end());
    b.difference = 1 + k % 9;
    const int c = k % 13;
    CHECK(pivot_block(b, 100, false).differences() == b.differences());
    CHECK(shift_block(b, c, 400).differences() == b.differences());
  }
}

TEST_CASE("pivot outside the range is refused") {
  // S5 = 4115423253: 3 is not a pivot (b+i = 9+3 > 10).
  const auto ps = pairs(parse_sequence("4115423253", SeqKind::skolem()));
  const auto blocks = base_blocks(ps, 5, BlockForm::standard);
  CHECK_NOTHROW(pivot_block(blocks[0], 5, false));
  CHECK_THROWS_AS(pivot_block(blocks[2], 5, false), Infeasible);
  CHECK_THROWS_AS(shift_block(blocks[2], 20, 15), Infeasible);
  CHECK(pivot_block(blocks[0], 5, false).provenance == Provenance::pivoted);
}

TEST_CASE("identify_block recovers each form") {
  const auto ps = pairs(parse_sequence("4115423253", SeqKind::skolem()));
  const auto st = base_blocks(ps, 5, BlockForm::standard);
  const auto alt = base_blocks(ps, 5, BlockForm::alt);
  for (int k = 0; k < 5; ++k) {
    const auto a = identify_block(st[static_cast<std::size_t>(k)].values, ps, 5);
    REQUIRE(a.has_value());
    CHECK(a->difference == k + 1);
    CHECK(a->provenance == Provenance::standard);
    const auto b = identify_block(alt[static_cast<std::size_t>(k)].values, ps, 5);
    REQUIRE(b.has_value());
    CHECK(b->provenance == Provenance::alt_form);
  }
  const auto p = identify_block(pivot_block(st[1], 5, false).values, ps, 5);
  REQUIRE(p.has_value());
  CHECK(p->provenance == Provenance::pivoted);
  const auto m = identify_block(shift_block(alt[3], 2, 15).values, ps, 5);
  REQUIRE(m.has_value());
  CHECK(m->provenance == Provenance::mixed);
  CHECK(m->shift == 2);
  CHECK_FALSE(identify_block({0, 1, 2}, ps, 5).has_value());
}

TEST_CASE("mixed forms per difference") {
  const auto ps = pairs(parse_sequence("11423243", SeqKind::skolem()));
  const std::vector<BlockForm> forms = {BlockForm::alt, BlockForm::alt, BlockForm::standard, BlockForm::standard};
  const auto blocks = base_blocks(ps, 4, forms);
  CHECK(blocks[0].values == std::array<int, 3>{0, 1, 6});
  CHECK(blocks[2].values == std::array<int, 3>{0, 9, 12});
  CHECK(check_heffter(blocks, 4, false));
}
