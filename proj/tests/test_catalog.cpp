#include <doctest.h>

#include <sstream>

#include "propus/catalog.hpp"
#include "propus/errors.hpp"

using namespace propus;

TEST_SUITE("catalog") {

TEST_CASE("a good turyn line parses and verifies") {
  const CatalogEntry e = parse_entry("turyn 3 0++ -++ # derived");
  CHECK(e.kind == SearchKind::turyn);
  CHECK(e.n == 3);
  CHECK(e.rows.size() == 2);
  CHECK(e.provenance == "derived");
  CHECK(verify_entry(e));
}

TEST_CASE("serialize and parse round trip byte for byte") {
  const std::string line = "propus 5 --++- -++++ -+--+ # search";
  const CatalogEntry e = parse_entry(line);
  CHECK(serialize(e) == line);
  CHECK(parse_entry(serialize(e)) == e);
  CatalogEntry bare = e;
  bare.provenance.clear();
  CHECK(serialize(bare) == "propus 5 --++- -++++ -+--+");
}

TEST_CASE("a row set failing the Gram identity is rejected") {
  const Catalog cat = load_catalog_text("turyn 3 0++ +++ # bad\n");
  CHECK(cat.entries().empty());
  REQUIRE(cat.rejected().size() == 1);
  CHECK(cat.rejected()[0].line == 1);
}

TEST_CASE("malformed lines raise ParseError with the line number") {
  CHECK_THROWS_AS(parse_entry("turyn"), ParseError);
  CHECK_THROWS_AS(parse_entry("williamson 3 +++ +++"), ParseError);
  CHECK_THROWS_AS(parse_entry("turyn x 0++ -++"), ParseError);
  CHECK_THROWS_AS(parse_entry("turyn 3 0++"), ParseError);
  CHECK_THROWS_AS(parse_entry("turyn 3 0++ -+"), ParseError);
  CHECK_THROWS_AS(parse_entry("turyn 3 0++ -+x"), ParseError);
  try {
    parse_entry("propus 3 +++ +++", 42);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 42);
  }
}

TEST_CASE("one bad line among good ones is isolated") {
  const std::string text =
      "# header comment\n"
      "\n"
      "turyn 3 0++ -++ # good\n"
      "turyn 3 0++ +++ # wrong gram\n"
      "doptimal 3 +++ ++- # good\n"
      "garbage here\n"
      "  # indented comment\n"
      "propus 3 +++ -++ -++\n";
  const Catalog cat = load_catalog_text(text);
  CHECK(cat.entries().size() == 3);
  REQUIRE(cat.rejected().size() == 2);
  CHECK(cat.rejected()[0].line == 4);
  CHECK(cat.rejected()[1].line == 6);
  CHECK(cat.find(SearchKind::doptimal, 3).size() == 1);
  CHECK(cat.find(SearchKind::turyn, 5).empty());
}

TEST_CASE("duplicates collapse to the first occurrence") {
  const Catalog cat = load_catalog_text("turyn 3 0++ -++ # first\nturyn 3 0++ -++ # second\n");
  REQUIRE(cat.entries().size() == 1);
  CHECK(cat.entries()[0].provenance == "first");
  Catalog merged = cat;
  merged.merge(load_catalog_text("turyn 3 0++ -++ # third\nturyn 3 0-- -++\n"));
  CHECK(merged.entries().size() == 2);
}

TEST_CASE("unreadable catalog file throws") {
  CHECK_THROWS_AS(load_catalog_file("/nonexistent/catalog.txt"), std::runtime_error);
}

TEST_CASE("built-in catalog has the required coverage and no rejects") {
  const Catalog& cat = builtin_catalog();
  CHECK(cat.rejected().empty());
  for (std::size_t n : {1u, 3u, 5u, 7u, 9u}) CHECK_FALSE(cat.find(SearchKind::propus, n).empty());
  for (std::size_t n : {1u, 3u, 5u, 7u, 9u, 13u, 41u}) CHECK_FALSE(cat.find(SearchKind::turyn, n).empty());
  for (std::size_t n : {3u, 7u}) CHECK_FALSE(cat.find(SearchKind::doptimal, n).empty());
}

TEST_CASE("built-in catalog regenerates from the search module") {
  for (const auto& e : builtin_catalog().entries()) {
    if (e.n > 31) continue;
    CAPTURE(serialize(e));
    SearchSpec spec;
    spec.kind = e.kind;
    spec.n = e.n;
    spec.limit = 1;
    const auto r = search(spec);
    REQUIRE(r.hits.size() == 1);
    CHECK(serialize(entry_from_hit(e.kind, r.hits[0], e.provenance)) == serialize(e));
  }
}

TEST_CASE("built-in catalog text is stable through a load/serialize cycle") {
  std::string rebuilt;
  for (const auto& e : builtin_catalog().entries()) rebuilt += serialize(e) + "\n";
  std::string stripped;
  std::istringstream in{std::string(builtin_catalog_text())};
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') stripped += line + "\n";
  CHECK(rebuilt == stripped);
}

}  // TEST_SUITE
