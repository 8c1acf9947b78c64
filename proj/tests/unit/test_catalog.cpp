#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "skolem/catalog.hpp"
#include "skolem/error.hpp"

using namespace skolem;

TEST_CASE("bundled catalog is sound") {
  const Catalog& cat = bundled_catalog();
  CHECK(cat.size() >= 120);
  const auto report = catalog_verify(cat);
  for (const auto& i : report.issues) INFO(i.message);
  CHECK(report.ok());
  CHECK(report.rows_checked == cat.size());
}

TEST_CASE("rows agree with the oracle and round-trip as text") {
  for (const auto& e : bundled_catalog().entries()) {
    CAPTURE(e.where());
    const Sequence s = e.sequence();
    CHECK(to_text(s) == e.text);
    CHECK((e.hooked() ? oracle::is_hooked_skolem(s.entries(), e.order) : oracle::is_skolem(s.entries(), e.order)));
    const auto pv = oracle::pivots(s.entries(), e.order);
    for (int i : e.pivots) CHECK(std::binary_search(pv.begin(), pv.end(), i));
    if (e.type == 'k') CHECK(e.triples.size() == static_cast<std::size_t>(e.order));
  }
}

TEST_CASE("table layout") {
  const Catalog& cat = bundled_catalog();
  for (char t = 'a'; t <= 'k'; ++t) {
    CHECK(cat.seed_for(t) != nullptr);
    CHECK(!cat.rows_for(t).empty());
    CHECK(cat.max_order(t) == 3 * cat.seed_for(t)->order);
    const auto rows = cat.rows_for(t);
    CHECK(std::is_sorted(rows.begin(), rows.end(),
                         [](const CatalogEntry* a, const CatalogEntry* b) { return a->order < b->order; }));
  }
  CHECK(cat.find('b', 7) != nullptr);
  CHECK(cat.find('b', 99) == nullptr);
}

TEST_CASE("declared pivots outside the inequality are reported") {
  // 3 is a difference of S5 = 4115423253 but not a pivot.
  const auto cat = parse_catalog("# comment\n1\t5\t4115423253\t1,2,3\tb\n");
  const auto report = catalog_verify(cat);
  REQUIRE(report.issues.size() == 1);
  CHECK(report.issues[0].row == 1);
  CHECK(report.issues[0].message.find("pivot 3") != std::string::npos);

  const auto broken = catalog_verify(parse_catalog("2\t5\t4115423252\t1\tb\n"));
  CHECK_FALSE(broken.ok());
}

TEST_CASE("structural errors carry the line") {
  try {
    parse_catalog("1\t5\t4115423253\t1,2,4\tb\n1\t5\t4115423253\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_catalog("1\t5\t4115423253\t1,2,4\tz\n"), ParseError);
  CHECK_THROWS_AS(parse_catalog("x\t5\t4115423253\t1,2,4\tb\n"), ParseError);
  CHECK_THROWS_AS(load_catalog("/nonexistent/catalog.tsv"), InvalidInput);
}
