#include "propus/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "propus/kernels.hpp"

namespace propus {

namespace {

void check_order(std::size_t n) {
  if (n > kMaxOrder)
    throw std::invalid_argument("order " + std::to_string(n) + " exceeds limit " +
                                std::to_string(kMaxOrder));
}

std::int8_t sign_from_char(char c) {
  switch (c) {
    case '+': return 1;
    case '-': return -1;
    case '0': return 0;
    default: throw std::invalid_argument(std::string("illegal sign character '") + c + "'");
  }
}

char char_from_sign(int v) { return v > 0 ? '+' : (v < 0 ? '-' : '0'); }

}  // namespace

// ---------------------------------------------------------------- SignMatrix

SignMatrix::SignMatrix(std::size_t order) : order_(order), entries_(order * order, 0) {
  check_order(order);
}

SignMatrix::SignMatrix(std::size_t order, std::vector<std::int8_t> entries)
    : order_(order), entries_(std::move(entries)) {
  check_order(order);
  if (entries_.size() != order * order)
    throw std::invalid_argument("entry count does not match order");
  for (auto v : entries_)
    if (v < -1 || v > 1) throw std::invalid_argument("entry outside {-1,0,+1}");
}

SignMatrix SignMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t n = rows.size();
  std::vector<std::int8_t> e;
  e.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("matrix is not square");
    for (int v : r) e.push_back(static_cast<std::int8_t>(v));
  }
  return SignMatrix(n, std::move(e));
}

SignMatrix SignMatrix::from_strings(std::span<const std::string> rows) {
  const std::size_t n = rows.size();
  std::vector<std::int8_t> e;
  e.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("matrix is not square");
    for (char c : r) e.push_back(sign_from_char(c));
  }
  return SignMatrix(n, std::move(e));
}

SignMatrix SignMatrix::transposed() const {
  std::vector<std::int8_t> e(entries_.size());
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) e[j * order_ + i] = entries_[i * order_ + j];
  return SignMatrix(order_, std::move(e));
}

SignMatrix SignMatrix::negated() const {
  std::vector<std::int8_t> e(entries_);
  for (auto& v : e) v = static_cast<std::int8_t>(-v);
  return SignMatrix(order_, std::move(e));
}

IntMatrix SignMatrix::to_int() const {
  return IntMatrix(order_, std::vector<std::int32_t>(entries_.begin(), entries_.end()));
}

std::vector<std::string> SignMatrix::to_strings() const {
  std::vector<std::string> out(order_, std::string(order_, '0'));
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) out[i][j] = char_from_sign((*this)(i, j));
  return out;
}

// ----------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t order, std::vector<std::int32_t> entries)
    : order_(order), entries_(std::move(entries)) {
  if (entries_.size() != order * order)
    throw std::invalid_argument("entry count does not match order");
}

IntMatrix IntMatrix::identity(std::size_t order, std::int32_t scale) {
  IntMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m.at(i, i) = scale;
  return m;
}

IntMatrix IntMatrix::all_ones(std::size_t order, std::int32_t scale) {
  return IntMatrix(order, std::vector<std::int32_t>(order * order, scale));
}

bool IntMatrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](auto v) { return v == 0; });
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(order_);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) t.at(j, i) = (*this)(i, j);
  return t;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  if (other.order_ != order_) throw std::invalid_argument("order mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& other) {
  if (other.order_ != order_) throw std::invalid_argument("order mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

IntMatrix& IntMatrix::operator*=(std::int32_t scale) {
  for (auto& v : entries_) v *= scale;
  return *this;
}

SignMatrix to_sign(const IntMatrix& m) {
  std::vector<std::int8_t> e;
  e.reserve(m.data().size());
  for (auto v : m.data()) {
    if (v < -1 || v > 1) throw std::invalid_argument("entry outside {-1,0,+1}");
    e.push_back(static_cast<std::int8_t>(v));
  }
  return SignMatrix(m.order(), std::move(e));
}

// ------------------------------------------------------------------ FirstRow

FirstRow::FirstRow(std::vector<std::int8_t> values, CirculantType type)
    : values_(std::move(values)), type_(type) {
  check_order(values_.size());
  for (auto v : values_)
    if (v < -1 || v > 1) throw std::invalid_argument("row entry outside {-1,0,+1}");
}

FirstRow FirstRow::parse(std::string_view text, CirculantType type) {
  std::vector<std::int8_t> v;
  v.reserve(text.size());
  for (char c : text) v.push_back(sign_from_char(c));
  return FirstRow(std::move(v), type);
}

bool FirstRow::symmetric() const noexcept {
  const std::size_t n = values_.size();
  for (std::size_t i = 1; i < n; ++i)
    if (values_[i] != values_[n - i]) return false;
  return true;
}

int FirstRow::sum() const noexcept {
  int s = 0;
  for (auto v : values_) s += v;
  return s;
}

std::string FirstRow::to_string() const {
  std::string s;
  s.reserve(values_.size());
  for (auto v : values_) s.push_back(char_from_sign(v));
  return s;
}

// -1 < 0 < +1 as integers, so entries compare directly.
bool lex_less(const FirstRow& a, const FirstRow& b) noexcept {
  return std::lexicographical_compare(a.values().begin(), a.values().end(), b.values().begin(),
                                      b.values().end());
}

// ------------------------------------------------------------------ builders

SignMatrix circulant(const FirstRow& row) {
  const std::size_t n = row.size();
  if (n == 0) throw std::invalid_argument("circulant: empty first row");
  std::vector<std::int8_t> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      e[i * n + j] = static_cast<std::int8_t>(
          row.type() == CirculantType::type1 ? row[(j + n - i) % n] : row[(i + j) % n]);
  return SignMatrix(n, std::move(e));
}

SignMatrix anti_identity(std::size_t n) {
  if (n == 0) throw std::invalid_argument("anti_identity: order must be positive");
  std::vector<std::int8_t> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + (n - 1 - i)] = 1;
  return SignMatrix(n, std::move(e));
}

SignMatrix identity(std::size_t n) {
  std::vector<std::int8_t> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return SignMatrix(n, std::move(e));
}

SignMatrix all_ones(std::size_t n) { return SignMatrix(n, std::vector<std::int8_t>(n * n, 1)); }

// ------------------------------------------------------------------ products

IntMatrix multiply_transpose(const SignMatrix& a, const SignMatrix& b) {
  if (a.order() != b.order()) throw std::invalid_argument("order mismatch");
  const std::size_t n = a.order();
  IntMatrix out(n);
  if (n >= kernels::kParallelThreshold)
    kernels::product_transpose_parallel(a.data(), b.data(), n, out.data());
  else
    kernels::product_transpose_serial(a.data(), b.data(), n, out.data());
  return out;
}

IntMatrix multiply(const SignMatrix& a, const SignMatrix& b) {
  return multiply_transpose(a, b.transposed());
}

IntMatrix gram(const SignMatrix& m) { return multiply_transpose(m, m); }

SignMatrix sign_product(const SignMatrix& a, const SignMatrix& b) { return to_sign(multiply(a, b)); }

SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  const std::size_t n = na * nb;
  std::vector<std::int8_t> e(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          e[(i * nb + k) * n + (j * nb + l)] = static_cast<std::int8_t>(a(i, j) * b(k, l));
  return SignMatrix(n, std::move(e));
}

int paf(const FirstRow& row, std::size_t shift) {
  const std::size_t n = row.size();
  if (shift >= n)
    throw std::invalid_argument("paf: shift " + std::to_string(shift) + " out of range for length " +
                                std::to_string(n));
  int acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += row[i] * row[(i + shift) % n];
  return acc;
}

// ---------------------------------------------------------------- predicates

bool is_symmetric(const SignMatrix& m) noexcept {
  const std::size_t n = m.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

bool is_circulant(const SignMatrix& m) noexcept {
  const std::size_t n = m.order();
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != m(0, (j + n - i) % n)) return false;
  return true;
}

FirstRow circulant_row(const SignMatrix& m) {
  if (!is_circulant(m)) throw std::invalid_argument("matrix is not circulant");
  auto r = m.row(0);
  return FirstRow(std::vector<std::int8_t>(r.begin(), r.end()));
}

bool amicable(const SignMatrix& x, const SignMatrix& y) {
  return multiply_transpose(x, y) == multiply_transpose(y, x);
}

bool commute(const SignMatrix& x, const SignMatrix& y) { return multiply(x, y) == multiply(y, x); }

std::string PropertyReport::describe() const {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  os << "pm1=" << yn(is_pm1) << " hadamard=" << yn(is_hadamard) << " symmetric=" << yn(is_symmetric)
     << " skew+I=" << yn(is_skew_plus_identity) << " conference=" << yn(is_conference);
  return os.str();
}

PropertyReport check_properties(const SignMatrix& m) {
  PropertyReport r;
  const std::size_t n = m.order();
  const auto e = m.data();
  r.is_pm1 = std::none_of(e.begin(), e.end(), [](auto v) { return v == 0; });
  r.is_symmetric = is_symmetric(m);

  bool skew = true;
  for (std::size_t i = 0; i < n && skew; ++i) {
    if (m(i, i) != 1) skew = false;
    for (std::size_t j = i + 1; j < n && skew; ++j)
      if (m(i, j) != -m(j, i)) skew = false;
  }
  r.is_skew_plus_identity = skew;

  bool conference_shape = r.is_symmetric;
  for (std::size_t i = 0; i < n && conference_shape; ++i)
    for (std::size_t j = 0; j < n && conference_shape; ++j)
      if ((i == j) != (m(i, j) == 0)) conference_shape = false;

  if (!r.is_pm1 && !conference_shape) return r;

  const IntMatrix g = gram(m);
  const auto diag_target = static_cast<std::int32_t>(r.is_pm1 ? n : n - 1);
  bool diagonal_gram = true;
  for (std::size_t i = 0; i < n && diagonal_gram; ++i)
    for (std::size_t j = 0; j < n && diagonal_gram; ++j)
      if (g(i, j) != (i == j ? diag_target : 0)) diagonal_gram = false;

  r.is_hadamard = r.is_pm1 && diagonal_gram;
  r.is_conference = conference_shape && !r.is_pm1 && diagonal_gram;
  return r;
}

}  // namespace propus
