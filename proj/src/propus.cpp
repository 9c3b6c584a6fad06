#include "propus/propus.hpp"

#include <array>
#include <stdexcept>

#include "propus/errors.hpp"

namespace propus {

namespace {

// Each cell of a 4x4 layout is sign * form(block).
enum class Form { plain, right_r, transpose_right_r };

struct Cell {
  int block;  // 0 = A, 1 = B, 2 = D
  int sign;
  Form form;
};

using Layout = std::array<std::array<Cell, 4>, 4>;

constexpr Layout kP = {{
    {{{0, 1, Form::plain}, {1, 1, Form::plain}, {1, 1, Form::plain}, {2, 1, Form::plain}}},
    {{{1, 1, Form::plain}, {2, 1, Form::plain}, {0, -1, Form::plain}, {1, -1, Form::plain}}},
    {{{1, 1, Form::plain}, {0, -1, Form::plain}, {2, -1, Form::plain}, {1, 1, Form::plain}}},
    {{{2, 1, Form::plain}, {1, -1, Form::plain}, {1, 1, Form::plain}, {0, -1, Form::plain}}},
}};

constexpr Layout kGP = {{
    {{{0, 1, Form::plain},
      {1, 1, Form::right_r},
      {1, 1, Form::right_r},
      {2, 1, Form::right_r}}},
    {{{1, 1, Form::right_r},
      {2, 1, Form::transpose_right_r},
      {0, -1, Form::plain},
      {1, -1, Form::transpose_right_r}}},
    {{{1, 1, Form::right_r},
      {0, -1, Form::plain},
      {2, -1, Form::transpose_right_r},
      {1, 1, Form::transpose_right_r}}},
    {{{2, 1, Form::right_r},
      {1, -1, Form::transpose_right_r},
      {1, 1, Form::transpose_right_r},
      {0, -1, Form::plain}}},
}};

SignMatrix build_array(const PropusTriple& t, const Layout& layout) {
  const std::size_t n = t.order();
  const SignMatrix* blocks[3] = {&t.a(), &t.b(), &t.d()};

  // Pre-form every variant a layout may ask for.
  std::array<std::array<SignMatrix, 3>, 3> forms;
  const SignMatrix r = anti_identity(n);
  for (int k = 0; k < 3; ++k) {
    forms[0][k] = *blocks[k];
    forms[1][k] = sign_product(*blocks[k], r);
    forms[2][k] = sign_product(blocks[k]->transposed(), r);
  }

  const std::size_t big = 4 * n;
  std::vector<std::int8_t> e(big * big);
  for (std::size_t bi = 0; bi < 4; ++bi)
    for (std::size_t bj = 0; bj < 4; ++bj) {
      const Cell c = layout[bi][bj];
      const SignMatrix& m = forms[static_cast<int>(c.form)][c.block];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          e[(bi * n + i) * big + bj * n + j] = static_cast<std::int8_t>(c.sign * m(i, j));
    }
  return SignMatrix(big, std::move(e));
}

// Throws NotHadamard naming the first block-row pair whose product is wrong.
void require_hadamard(const SignMatrix& h, std::size_t n, const char* array_name) {
  const IntMatrix g = gram(h);
  const auto target = static_cast<std::int32_t>(4 * n);
  for (std::size_t bi = 0; bi < 4; ++bi)
    for (std::size_t bj = bi; bj < 4; ++bj)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const std::int32_t want = (bi == bj && i == j) ? target : 0;
          if (g(bi * n + i, bj * n + j) == want) continue;
          std::string what = std::string(array_name) + " array is not Hadamard: block row" +
                             std::to_string(bi) + " * block row" + std::to_string(bj) + "^T ";
          what += bi == bj ? "!= 4nI (additive property fails)" : "!= 0 (cross term survives)";
          throw NotHadamard(what);
        }
}

bool circulant_symmetric(const SignMatrix& m) { return is_circulant(m) && is_symmetric(m); }

}  // namespace

PropusTriple::PropusTriple(SignMatrix a, SignMatrix b, SignMatrix d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (a_.order() == 0 || b_.order() != a_.order() || d_.order() != a_.order())
    throw std::invalid_argument("PropusTriple: blocks must share a positive order");
  for (const SignMatrix* m : {&a_, &b_, &d_})
    for (auto v : m->data())
      if (v == 0) throw std::invalid_argument("PropusTriple: blocks must be +-1 matrices");
}

PropusTriple PropusTriple::from_rows(const FirstRow& a, const FirstRow& b, const FirstRow& d) {
  return PropusTriple(circulant(a), circulant(b), circulant(d));
}

std::string to_string(TripleClass c) {
  switch (c) {
    case TripleClass::propus: return "propus";
    case TripleClass::propus_type: return "propus-type";
    case TripleClass::generalized_propus: return "generalized-propus";
    case TripleClass::invalid: return "invalid";
  }
  return "invalid";
}

IntMatrix additive_defect(const PropusTriple& t) {
  const std::size_t n = t.order();
  IntMatrix sum = gram(t.a());
  sum += 2 * gram(t.b());
  sum += gram(t.d());
  sum -= IntMatrix::identity(n, static_cast<std::int32_t>(4 * n));
  return sum;
}

TripleClass classify_triple(const PropusTriple& t) {
  if (!additive_defect(t).is_zero()) return TripleClass::invalid;
  const auto& a = t.a();
  const auto& b = t.b();
  const auto& d = t.d();
  if (circulant_symmetric(a) && circulant_symmetric(b) && circulant_symmetric(d))
    return TripleClass::propus;
  if (!is_symmetric(a)) return TripleClass::invalid;
  if (amicable(a, b) && amicable(a, d) && amicable(b, d)) return TripleClass::propus_type;
  if (commute(a, b) && commute(a, d) && commute(b, d)) return TripleClass::generalized_propus;
  return TripleClass::invalid;
}

SignMatrix p_array(const PropusTriple& t) { return build_array(t, kP); }

SignMatrix gp_array(const PropusTriple& t) { return build_array(t, kGP); }

SignMatrix assemble_p(const PropusTriple& t) {
  SignMatrix h = p_array(t);
  require_hadamard(h, t.order(), "P");
  return h;
}

SignMatrix assemble_gp(const PropusTriple& t) {
  if (!is_circulant(t.a()) || !is_circulant(t.b()) || !is_circulant(t.d()))
    throw NotCirculantInput("GP array needs type1 circulant A, B, D");
  if (!is_symmetric(t.a())) throw NotCirculantInput("GP array needs a symmetric A");
  SignMatrix h = gp_array(t);
  require_hadamard(h, t.order(), "GP");
  return h;
}

}  // namespace propus
