#include "propus/miyamoto.hpp"

#include <stdexcept>

#include "propus/finite_field.hpp"
#include "propus/propus.hpp"

namespace propus {

namespace {

bool pairwise_amicable(const std::array<SignMatrix, 4>& m) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (!amicable(m[i], m[j])) return false;
  return true;
}

bool rows_sum_to(const SignMatrix& m, int target) {
  for (std::size_t i = 0; i < m.order(); ++i) {
    int s = 0;
    for (auto v : m.row(i)) s += v;
    if (s != target) return false;
  }
  return true;
}

IntMatrix gram_sum(const std::array<SignMatrix, 4>& m) {
  IntMatrix total(m[0].order());
  for (const auto& x : m) total += gram(x);
  return total;
}

SignMatrix bordered(const SignMatrix& s, int border) {
  const std::size_t m = s.order() + 1;
  std::vector<std::int8_t> e(m * m);
  e[0] = 1;
  for (std::size_t j = 1; j < m; ++j) {
    e[j] = static_cast<std::int8_t>(border);
    e[j * m] = static_cast<std::int8_t>(border);
  }
  for (std::size_t i = 1; i < m; ++i)
    for (std::size_t j = 1; j < m; ++j) e[i * m + j] = static_cast<std::int8_t>(s(i - 1, j - 1));
  return SignMatrix(m, std::move(e));
}

void require_order(const TurynPair& pair, const FieldTable& field) {
  if (pair.order() != static_cast<std::size_t>(field.q()))
    throw std::invalid_argument("Miyamoto input: Turyn pair order " + std::to_string(pair.order()) +
                                " differs from field order " + std::to_string(field.q()));
}

}  // namespace

std::string MiyamotoReport::describe() const {
  auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
  std::string out;
  out += std::string("(i) ") + flag(amicable_u);
  out += std::string(", (ii) ") + flag(amicable_v);
  out += std::string(", (iii) ") + flag(pm1_sums);
  out += std::string(", (iv) ") + flag(row_sums);
  out += std::string(", (v) ") + flag(gram_sums);
  out += std::string(", S2=S3 ") + flag(equal_pair);
  return out;
}

MiyamotoReport validate_miyamoto(const MiyamotoInput& input) {
  const std::size_t n = input.u[0].order();
  for (std::size_t i = 0; i < 4; ++i)
    if (input.u[i].order() != n || input.v[i].order() != n || n == 0)
      throw std::invalid_argument("Miyamoto input: all eight matrices need one positive order");

  MiyamotoReport r;
  r.amicable_u = pairwise_amicable(input.u);
  r.amicable_v = pairwise_amicable(input.v);

  r.pm1_sums = true;
  for (std::size_t i = 0; i < 4 && r.pm1_sums; ++i) {
    const auto u = input.u[i].data();
    const auto v = input.v[i].data();
    for (std::size_t k = 0; k < u.size(); ++k) {
      const int plus = u[k] + v[k];
      const int minus = u[k] - v[k];
      if ((plus != 1 && plus != -1) || (minus != 1 && minus != -1)) {
        r.pm1_sums = false;
        break;
      }
    }
  }

  r.row_sums = rows_sum_to(input.u[0], 1) && rows_sum_to(input.u[1], 0) && rows_sum_to(input.u[2], 0) &&
               rows_sum_to(input.u[3], 0);

  const auto two_n1 = static_cast<std::int32_t>(2 * n + 1);
  const IntMatrix u_target = IntMatrix::identity(n, two_n1) - IntMatrix::all_ones(n, 2);
  const IntMatrix v_target = IntMatrix::identity(n, two_n1);
  r.gram_sums = gram_sum(input.u) == u_target && gram_sum(input.v) == v_target;

  r.equal_pair = input.u[1] == input.u[2] && input.v[1] == input.v[2];
  return r;
}

std::array<SignMatrix, 4> expand_s(const MiyamotoInput& input) {
  const SignMatrix plus = SignMatrix::from_rows({{1, 1}, {1, 1}});
  const SignMatrix minus = SignMatrix::from_rows({{1, -1}, {-1, 1}});
  std::array<SignMatrix, 4> s;
  for (std::size_t j = 0; j < 4; ++j) {
    IntMatrix sum = kronecker(input.u[j], plus).to_int();
    sum += kronecker(input.v[j], minus).to_int();
    s[j] = to_sign(sum);
  }
  return s;
}

std::array<SignMatrix, 4> compose_williamson(const MiyamotoInput& input) {
  const MiyamotoReport report = validate_miyamoto(input);
  if (!report.all()) throw MiyamotoConditionsFailed(report);
  const auto s = expand_s(input);
  return {bordered(s[0], -1), bordered(s[1], 1), bordered(s[2], 1), bordered(s[3], 1)};
}

MiyamotoInput standard_input(const FieldTable& field, const TurynPair& pair) {
  require_order(pair, field);
  const std::size_t q = pair.order();
  const SignMatrix core = paley_core(field);
  MiyamotoInput in;
  in.u = {identity(q), core, core, SignMatrix(q)};
  in.v = {pair.x(), identity(q), identity(q), pair.y()};
  return in;
}

MiyamotoInput backcirculant_input(const FieldTable& field, const TurynPair& pair) {
  require_order(pair, field);
  const std::size_t q = pair.order();
  const SignMatrix r = anti_identity(q);
  const SignMatrix qr = sign_product(paley_core(field), r);
  MiyamotoInput in;
  in.u = {identity(q), qr, qr, SignMatrix(q)};
  in.v = {pair.x(), r, r, pair.y()};
  return in;
}

Construction miyamoto_propus(const MiyamotoInput& input) {
  const auto x = compose_williamson(input);
  PropusTriple first(x[0], x[1], x[3]);
  try {
    SignMatrix h = assemble_p(first);
    return {std::move(first), std::move(h)};
  } catch (const NotHadamard&) {
    PropusTriple swapped(x[3], x[1], x[0]);
    SignMatrix h = assemble_p(swapped);
    return {std::move(swapped), std::move(h)};
  }
}

Construction miyamoto_construction(int q, const PairOptions& opts) {
  if (q < 3 || !is_prime_power(q) || q % 2 == 0)
    throw BadResidue("q = " + std::to_string(q) + " is not an odd prime power");
  const FieldTable field = build_field(q);
  const TurynPair pair = find_turyn_pair(static_cast<std::size_t>(q), opts);
  return miyamoto_propus(q % 4 == 1 ? standard_input(field, pair) : backcirculant_input(field, pair));
}

SignMatrix corollary_driver(int q, const PairOptions& opts) {
  if (q % 4 != 1) throw BadResidue("q = " + std::to_string(q) + " is not 1 (mod 4)");
  return miyamoto_construction(q, opts).matrix;
}

}  // namespace propus
