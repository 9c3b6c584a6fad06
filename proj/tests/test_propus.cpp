#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "propus/errors.hpp"
#include "propus/propus.hpp"
#include "propus/search.hpp"

using namespace propus;

namespace {

PropusTriple p12_triple() {
  return PropusTriple::from_rows(FirstRow::parse("+++"), FirstRow::parse("-++"), FirstRow::parse("-++"));
}

}  // namespace

TEST_SUITE("propus") {

TEST_CASE("triple validation") {
  CHECK_THROWS_AS(PropusTriple(identity(2), identity(3), identity(2)), std::invalid_argument);
  CHECK_THROWS_AS(PropusTriple(SignMatrix(2), all_ones(2), all_ones(2)), std::invalid_argument);
}

TEST_CASE("order-1 triple gives an order-4 Hadamard matrix") {
  const PropusTriple t = PropusTriple::from_rows(FirstRow::parse("+"), FirstRow::parse("+"), FirstRow::parse("-"));
  const SignMatrix h = assemble_p(t);
  CHECK(h.order() == 4);
  CHECK(oracle::symmetric_hadamard(h));
}

TEST_CASE("J, J-2I, J-2I of order 3 gives P12") {
  const PropusTriple t = p12_triple();
  CHECK(additive_defect(t).is_zero());
  CHECK(classify_triple(t) == TripleClass::propus);
  const SignMatrix h = assemble_p(t);
  CHECK(h.order() == 12);
  CHECK(oracle::symmetric_hadamard(h));
}

TEST_CASE("P array layout matches the displayed block pattern") {
  const PropusTriple t = p12_triple();
  const SignMatrix h = p_array(t);
  const std::size_t n = 3;
  // Block (row, col) -> (block index, sign); 0 = A, 1 = B, 2 = D.
  const int layout[4][4][2] = {{{0, 1}, {1, 1}, {1, 1}, {2, 1}},
                               {{1, 1}, {2, 1}, {0, -1}, {1, -1}},
                               {{1, 1}, {0, -1}, {2, -1}, {1, 1}},
                               {{2, 1}, {1, -1}, {1, 1}, {0, -1}}};
  const SignMatrix* blocks[3] = {&t.a(), &t.b(), &t.d()};
  for (std::size_t bi = 0; bi < 4; ++bi)
    for (std::size_t bj = 0; bj < 4; ++bj)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          CHECK(h(bi * n + i, bj * n + j) == layout[bi][bj][1] * (*blocks[layout[bi][bj][0]])(i, j));
}

TEST_CASE("a triple without the additive property is rejected by block pair") {
  const PropusTriple t = PropusTriple::from_rows(FirstRow::parse("+++"), FirstRow::parse("+++"), FirstRow::parse("-++"));
  CHECK_FALSE(additive_defect(t).is_zero());
  CHECK(classify_triple(t) == TripleClass::invalid);
  try {
    assemble_p(t);
    FAIL("expected NotHadamard");
  } catch (const NotHadamard& e) {
    CHECK(std::string(e.what()).find("block row") != std::string::npos);
  }
  CHECK_THROWS_AS(assemble_gp(t), NotHadamard);
}

TEST_CASE("GP needs circulant blocks and a symmetric A") {
  const SignMatrix r = to_sign(IntMatrix::all_ones(3) - 2 * anti_identity(3).to_int());
  const PropusTriple not_circ(r, circulant(FirstRow::parse("-++")), circulant(FirstRow::parse("-++")));
  CHECK_THROWS_AS(assemble_gp(not_circ), NotCirculantInput);
  const PropusTriple asym = PropusTriple::from_rows(FirstRow::parse("++-"), FirstRow::parse("-++"), FirstRow::parse("-++"));
  CHECK_THROWS_AS(assemble_gp(asym), NotCirculantInput);
}

TEST_CASE("P array is symmetric exactly when the blocks are") {
  SearchSpec spec;
  spec.kind = SearchKind::propus;
  spec.n = 5;
  for (const auto& hit : search(spec).hits) {
    const auto t = PropusTriple::from_rows(hit.rows[0], hit.rows[1], hit.rows[2]);
    const SignMatrix h = assemble_p(t);
    CHECK(oracle::symmetric_hadamard(h));
    CHECK(classify_triple(t) == TripleClass::propus);
  }
}

TEST_CASE("GP array is symmetric Hadamard for circulant triples with non-symmetric B or D") {
  for (std::size_t n : {3u, 5u}) {
    SearchSpec spec;
    spec.kind = SearchKind::propus;
    spec.n = n;
    spec.shapes = {SlotShape::symmetric, SlotShape::general, SlotShape::general};
    const auto hits = search(spec).hits;
    REQUIRE_FALSE(hits.empty());
    int asymmetric = 0;
    for (const auto& hit : hits) {
      const auto t = PropusTriple::from_rows(hit.rows[0], hit.rows[1], hit.rows[2]);
      asymmetric += !hit.rows[1].symmetric() || !hit.rows[2].symmetric();
      CHECK(oracle::symmetric_hadamard(assemble_gp(t)));
    }
    CHECK(asymmetric > 0);
  }
}

TEST_CASE("classification of non-propus triples") {
  // Polynomials in a symmetric non-circulant conference matrix: propus-type.
  const SignMatrix m = SignMatrix::from_rows({{0, 1, 1, 1, 1, 1},
                                              {1, 0, 1, -1, -1, 1},
                                              {1, 1, 0, 1, -1, -1},
                                              {1, -1, 1, 0, 1, -1},
                                              {1, -1, -1, 1, 0, 1},
                                              {1, 1, -1, -1, 1, 0}});
  const SignMatrix mp = to_sign(m.to_int() + IntMatrix::identity(6));
  const SignMatrix mm = to_sign(m.to_int() - IntMatrix::identity(6));
  const PropusTriple t(mp, mm, mp);
  CHECK(classify_triple(t) == TripleClass::propus_type);
  CHECK(oracle::symmetric_hadamard(assemble_p(t)));

  // Circulants always commute; a non-symmetric B usually breaks amicability.
  SearchSpec spec;
  spec.kind = SearchKind::propus;
  spec.n = 5;
  spec.shapes = {SlotShape::symmetric, SlotShape::general, SlotShape::general};
  bool seen = false;
  for (const auto& hit : search(spec).hits) {
    const auto tt = PropusTriple::from_rows(hit.rows[0], hit.rows[1], hit.rows[2]);
    const auto c = classify_triple(tt);
    CHECK(c != TripleClass::invalid);
    seen = seen || c == TripleClass::generalized_propus;
  }
  CHECK(seen);
}

}  // TEST_SUITE
