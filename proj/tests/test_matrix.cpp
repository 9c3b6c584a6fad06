#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "propus/kernels.hpp"
#include "propus/matrix.hpp"

using namespace propus;

TEST_SUITE("matrix") {

TEST_CASE("sign matrix rejects bad shapes and entries") {
  CHECK_THROWS_AS(SignMatrix(2, {1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SignMatrix(1, {2}), std::invalid_argument);
  CHECK_THROWS_AS(SignMatrix::from_rows({{1, 1}, {1}}), std::invalid_argument);
  const std::vector<std::string> bad = {"+x", "--"};
  CHECK_THROWS_AS(SignMatrix::from_strings(bad), std::invalid_argument);
}

TEST_CASE("string round trip") {
  const std::vector<std::string> rows = {"+-0", "0+-", "-0+"};
  const SignMatrix m = SignMatrix::from_strings(rows);
  CHECK(m.to_strings() == rows);
  CHECK(m == circulant(FirstRow::parse("+-0")));
}

TEST_CASE("first row ordering puts - before 0 before +") {
  CHECK(lex_less(FirstRow::parse("-++"), FirstRow::parse("0--")));
  CHECK(lex_less(FirstRow::parse("0++"), FirstRow::parse("+--")));
  CHECK(lex_less(FirstRow::parse("+-+"), FirstRow::parse("++-")));
  CHECK_FALSE(lex_less(FirstRow::parse("++-"), FirstRow::parse("++-")));
  CHECK(FirstRow::parse("0++").symmetric());
  CHECK_FALSE(FirstRow::parse("0+-").symmetric());
  CHECK(FirstRow::parse("+-+-+").sum() == 1);
}

TEST_CASE("circulant (0,1,-1) is neither conference nor Hadamard") {
  const SignMatrix c = circulant(FirstRow::parse("0+-"));
  const PropertyReport r = check_properties(c);
  CHECK_FALSE(r.is_pm1);
  CHECK_FALSE(r.is_hadamard);
  CHECK_FALSE(r.is_conference);
  CHECK_FALSE(r.is_symmetric);
  CHECK(r.is_skew_plus_identity == false);
  // gram = 2I - (J - I)
  CHECK(oracle::dense(gram(c)) == oracle::scaled_identity_plus_ones(3, 3, -1));
}

TEST_CASE("property flags on known matrices") {
  const SignMatrix h2 = SignMatrix::from_rows({{1, 1}, {1, -1}});
  const SignMatrix h4 = kronecker(h2, h2);
  const auto r4 = check_properties(h4);
  CHECK(r4.is_pm1);
  CHECK(r4.is_hadamard);
  CHECK(r4.is_symmetric);
  CHECK_FALSE(r4.is_conference);

  // Symmetric conference matrix of order 6 from the Paley core of GF(5).
  const SignMatrix c6 = SignMatrix::from_rows({{0, 1, 1, 1, 1, 1},
                                               {1, 0, 1, -1, -1, 1},
                                               {1, 1, 0, 1, -1, -1},
                                               {1, -1, 1, 0, 1, -1},
                                               {1, -1, -1, 1, 0, 1},
                                               {1, 1, -1, -1, 1, 0}});
  const auto rc = check_properties(c6);
  CHECK(rc.is_conference);
  CHECK_FALSE(rc.is_hadamard);

  // I + skew: [[1, 1], [-1, 1]]
  const auto rs = check_properties(SignMatrix::from_rows({{1, 1}, {-1, 1}}));
  CHECK(rs.is_skew_plus_identity);
  CHECK(rs.is_hadamard);
  CHECK_FALSE(rs.is_symmetric);
}

TEST_CASE("products agree with the dense oracle") {
  std::mt19937 rng(7);
  for (std::size_t n : {1u, 2u, 5u, 17u, 40u}) {
    const SignMatrix a = oracle::random_sign_matrix(n, rng);
    const SignMatrix b = oracle::random_sign_matrix(n, rng);
    CHECK(oracle::dense(multiply_transpose(a, b)) == oracle::product_transpose(oracle::dense(a), oracle::dense(b)));
    CHECK(oracle::dense(gram(a)) == oracle::gram(a));
    CHECK(multiply(a, b) == multiply_transpose(a, b.transposed()));
  }
}

TEST_CASE("serial and parallel kernels agree above the threshold") {
  std::mt19937 rng(11);
  for (std::size_t n : {kernels::kParallelThreshold - 1, kernels::kParallelThreshold + 31}) {
    const SignMatrix a = oracle::random_sign_matrix(n, rng);
    const SignMatrix b = oracle::random_sign_matrix(n, rng);
    std::vector<std::int32_t> s(n * n);
    std::vector<std::int32_t> p(n * n);
    kernels::product_transpose_serial(a.data(), b.data(), n, s);
    kernels::product_transpose_parallel(a.data(), b.data(), n, p);
    CHECK(s == p);
    CHECK(oracle::dense(IntMatrix(n, s)) == oracle::product_transpose(oracle::dense(a), oracle::dense(b)));
  }
}

TEST_CASE("paf matches the definition and rejects bad shifts") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 9;
    std::vector<std::int8_t> v(n);
    for (auto& x : v) x = static_cast<std::int8_t>(rng() % 3) - 1;
    const FirstRow r(v);
    for (std::size_t s = 0; s < n; ++s) CHECK(paf(r, s) == oracle::paf(oracle::values(r), s));
    CHECK_THROWS_AS(paf(r, n), std::invalid_argument);
  }
}

TEST_CASE("anti-identity and circulants") {
  const SignMatrix r = anti_identity(5);
  CHECK(multiply(r, r) == IntMatrix::identity(5));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::int8_t> v(6);
    for (auto& x : v) x = (rng() & 1) ? 1 : -1;
    const SignMatrix c = circulant(FirstRow(v));
    CHECK(is_circulant(c));
    CHECK(circulant_row(c) == FirstRow(v));
    // R C R = C^T, so C R is symmetric.
    CHECK(sign_product(sign_product(anti_identity(6), c), anti_identity(6)) == c.transposed());
    CHECK(is_symmetric(sign_product(c, anti_identity(6))));
  }
  CHECK(circulant(FirstRow::parse("+-+", CirculantType::type2)) == SignMatrix::from_rows({{1, -1, 1}, {-1, 1, 1}, {1, 1, -1}}));
}

TEST_CASE("kronecker blocks") {
  const SignMatrix a = SignMatrix::from_rows({{1, 0}, {-1, 1}});
  const SignMatrix b = SignMatrix::from_rows({{1, -1}, {0, 1}});
  const SignMatrix k = kronecker(a, b);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(k(i, j) == a(i / 2, j / 2) * b(i % 2, j % 2));
}

TEST_CASE("amicable and commuting pairs") {
  const SignMatrix x = circulant(FirstRow::parse("+--"));
  const SignMatrix y = circulant(FirstRow::parse("++-"));
  CHECK(commute(x, y));
  CHECK(amicable(x, x));
  const SignMatrix s = circulant(FirstRow::parse("+--"));  // symmetric
  const SignMatrix t = sign_product(y, anti_identity(3));  // back-circulant
  CHECK(amicable(s, t));
}

}  // TEST_SUITE
