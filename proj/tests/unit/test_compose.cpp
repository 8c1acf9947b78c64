#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "skolem/catalog.hpp"
#include "skolem/compose.hpp"
#include "skolem/error.hpp"
#include "skolem/search.hpp"

using namespace skolem;

TEST_CASE("existence rules against enumeration") {
  for (int d = 1; d <= 4; ++d) {
    for (int n = 1; n <= 9; ++n) {
      for (const auto& kind : {SeqKind::langford(d), SeqKind::hooked_langford(d)}) {
        CAPTURE(kind.name());
        CAPTURE(n);
        const auto v = exists(kind, n);
        CHECK(v.decided);
        CHECK(v.exists == !enumerate(kind, n, 1).empty());
      }
    }
  }
  for (int n = 1; n <= 9; ++n) {
    CHECK(exists(SeqKind::skolem(), n).exists == (n % 4 == 0 || n % 4 == 1));
    CHECK(exists(SeqKind::hooked_skolem(), n).exists == (n % 4 == 2 || n % 4 == 3));
  }
  CHECK_FALSE(exists(SeqKind::p_extended(3, 5), 4).decided);
}

TEST_CASE("concatenation") {
  const Sequence s1({1, 1}, SeqKind::skolem(), 1);
  const Sequence l({4, 2, 3, 2, 4, 3}, SeqKind::langford(2), 3);
  const auto s4 = concatenate(s1, l);
  CHECK(s4.kind() == SeqKind::skolem());
  CHECK(to_text(s4) == "11423243");

  // Skolem + hooked Langford -> hooked Skolem.
  const auto hl = langford_search(2, 2, true);
  REQUIRE(hl.has_value());
  const auto hs = concatenate(s1, *hl);
  CHECK(hs.kind() == SeqKind::hooked_skolem());
  CHECK(oracle::is_hooked_skolem(hs.entries(), 3));

  // Hooked Skolem + Langford -> hooked Skolem with the hook at 2N.
  const Sequence hs2({1, 1, 2, 0, 2}, SeqKind::hooked_skolem(), 2);
  const auto l3 = langford_search(3, 5, false);
  REQUIRE(l3.has_value());
  const auto joined = concatenate(hs2, *l3);
  CHECK(oracle::is_hooked_skolem(joined.entries(), 7));

  CHECK_THROWS_AS(concatenate(s1, Sequence({5, 3, 4, 3, 5, 4}, SeqKind::langford(3), 3)), Error);
  CHECK_THROWS_AS(concatenate(hs2, *hl), Error);
}

TEST_CASE("interlacing hooks") {
  const Sequence hs2({1, 1, 2, 0, 2}, SeqKind::hooked_skolem(), 2);
  const Sequence hl({8, 4, 7, 3, 6, 4, 3, 5, 8, 7, 6, 0, 5}, SeqKind::hooked_langford(3), 6);
  const auto s8 = interlace(hs2, hl);
  CHECK(to_text(s8) == "8473643587625211");
  CHECK(oracle::is_skolem(s8.entries(), 8));
}

TEST_CASE("Langford search") {
  for (int d = 2; d <= 6; ++d) {
    for (int l = 1; l <= 14; ++l) {
      for (bool hooked : {false, true}) {
        const auto kind = hooked ? SeqKind::hooked_langford(d) : SeqKind::langford(d);
        const auto s = langford_search(d, l, hooked);
        CHECK(s.has_value() == exists(kind, l).exists);
        if (s) CHECK((hooked ? oracle::is_hooked_langford(s->entries(), d, l) : oracle::is_langford(s->entries(), d, l)));
      }
    }
  }
}

TEST_CASE("order extension from every seed row") {
  const Catalog& cat = bundled_catalog();
  for (char t = 'a'; t <= 'k'; ++t) {
    const auto* seed = cat.seed_for(t);
    REQUIRE(seed != nullptr);
    const Sequence s = seed->sequence();
    const int n = s.order();
    const std::vector<int> keep = t == 'k' ? std::vector<int>{} : seed->pivots;
    for (int m = 3 * n + 1; m <= 3 * n + 4; ++m) {
      CAPTURE(t);
      CAPTURE(m);
      const auto r = extend_order(s, keep, m);
      const bool want_hooked = m % 4 == 2 || m % 4 == 3;
      CHECK((want_hooked ? oracle::is_hooked_skolem(r.sequence.entries(), m)
                         : oracle::is_skolem(r.sequence.entries(), m)));
      const auto pv = oracle::pivots(r.sequence.entries(), m);
      CHECK(r.pivots == pv);
      for (int i : keep) CHECK(std::binary_search(pv.begin(), pv.end(), i));
    }
  }
}

TEST_CASE("order extension refusals") {
  const Sequence s5 = parse_sequence("4115423253", SeqKind::skolem());
  CHECK_THROWS_AS(extend_order(s5, {1}, 15), InvalidInput);
  CHECK_THROWS_AS(extend_order(s5, {3}, 16), InvalidInput);
}

TEST_CASE("extended Langford sequences") {
  const std::vector<int> els = {11, 14, 15, 16, 17, 18, 19, 7, 8, 9, 10, 11, 12, 13,
                                7,  14, 8,  15, 9,  16, 10, 17, 0, 18, 12, 19, 13};
  const Sequence e(els, SeqKind::p_extended(7, 23), 13);
  CHECK(validate(e).ok());
  const auto mels = modify_extended(e, 5);
  CHECK(mels.kind() == SeqKind::modified_extended(7, 23, 5));
  CHECK(mels.size() == 28);
  CHECK(mels.at(23) == 5);
  CHECK(mels.at(28) == 5);
  CHECK(validate(mels).ok());
  CHECK_THROWS_AS(modify_extended(e, 4), InvalidInput);

  const auto found = extended_langford_search(7, 13, 23, 5, false);
  REQUIRE(found.has_value());
  CHECK(validate(*found).ok());
  CHECK(found->at(23) == 5);

  const auto plain = extended_langford_search(7, 13, 23);
  REQUIRE(plain.has_value());
  CHECK(oracle::is_pairing(plain->entries(), oracle::range(7, 19), {23}));
  CHECK_THROWS_AS(extended_langford_search(3, 4, 20), InvalidInput);
  CHECK_THROWS_AS(extended_langford_search(7, 13, 22, 5), InvalidInput);
}
