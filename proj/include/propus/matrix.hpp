#pragma once

// Exact integer matrices over {-1, 0, +1} and the structured builders the
// rest of the library is made of. Everything here is a value type; nothing
// mutates after construction.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace propus {

// Orders above this are rejected so that every Gram entry fits in int32.
inline constexpr std::size_t kMaxOrder = 10000;

class IntMatrix;

// Square matrix with entries in {-1, 0, +1}, row-major.
class SignMatrix {
 public:
  SignMatrix() = default;

  // All-zero matrix of the given order.
  explicit SignMatrix(std::size_t order);

  // Throws std::invalid_argument unless entries.size() == order*order and
  // every entry is -1, 0 or +1.
  SignMatrix(std::size_t order, std::vector<std::int8_t> entries);

  static SignMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

  // Parses one row per string over {+,-,0}.
  static SignMatrix from_strings(std::span<const std::string> rows);

  std::size_t order() const noexcept { return order_; }
  bool empty() const noexcept { return order_ == 0; }

  int operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * order_ + j];
  }

  std::span<const std::int8_t> row(std::size_t i) const noexcept {
    return {entries_.data() + i * order_, order_};
  }
  std::span<const std::int8_t> data() const noexcept { return entries_; }

  SignMatrix transposed() const;
  SignMatrix negated() const;
  IntMatrix to_int() const;

  // One line per row over {+,-,0}.
  std::vector<std::string> to_strings() const;

  bool operator==(const SignMatrix&) const = default;

 private:
  std::size_t order_ = 0;
  std::vector<std::int8_t> entries_;
};

// Square matrix with exact int32 entries; result type of products and sums.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t order) : order_(order), entries_(order * order, 0) {}
  IntMatrix(std::size_t order, std::vector<std::int32_t> entries);

  static IntMatrix identity(std::size_t order, std::int32_t scale = 1);
  static IntMatrix all_ones(std::size_t order, std::int32_t scale = 1);

  std::size_t order() const noexcept { return order_; }

  std::int32_t operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * order_ + j];
  }
  std::int32_t& at(std::size_t i, std::size_t j) noexcept { return entries_[i * order_ + j]; }

  std::span<const std::int32_t> data() const noexcept { return entries_; }
  std::span<std::int32_t> data() noexcept { return entries_; }

  bool is_zero() const noexcept;
  IntMatrix transposed() const;

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);
  IntMatrix& operator*=(std::int32_t scale);

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(std::int32_t s, IntMatrix a) { return a *= s; }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t order_ = 0;
  std::vector<std::int32_t> entries_;
};

// Throws std::invalid_argument if some entry leaves {-1, 0, +1}.
SignMatrix to_sign(const IntMatrix& m);

enum class CirculantType { type1, type2 };

// Generator row for circulant (type1) and back-circulant (type2) matrices.
class FirstRow {
 public:
  FirstRow() = default;
  explicit FirstRow(std::vector<std::int8_t> values,
                    CirculantType type = CirculantType::type1);

  // Parses a string over {+,-,0}.
  static FirstRow parse(std::string_view text, CirculantType type = CirculantType::type1);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const std::int8_t> values() const noexcept { return values_; }
  int operator[](std::size_t i) const noexcept { return values_[i]; }
  CirculantType type() const noexcept { return type_; }

  // values[i] == values[(n - i) mod n] for every i.
  bool symmetric() const noexcept;
  int sum() const noexcept;
  std::string to_string() const;

  bool operator==(const FirstRow&) const = default;

 private:
  std::vector<std::int8_t> values_;
  CirculantType type_ = CirculantType::type1;
};

// Ordering on rows with - < 0 < + at each position, first position most
// significant. Used for every deterministic tie-break.
bool lex_less(const FirstRow& a, const FirstRow& b) noexcept;

SignMatrix circulant(const FirstRow& row);
SignMatrix anti_identity(std::size_t n);
SignMatrix identity(std::size_t n);
SignMatrix all_ones(std::size_t n);

// Exact products. Use the OpenMP kernel above a size threshold.
IntMatrix multiply(const SignMatrix& a, const SignMatrix& b);
IntMatrix multiply_transpose(const SignMatrix& a, const SignMatrix& b);  // a * b^T
IntMatrix gram(const SignMatrix& m);                                    // m * m^T

// Product whose entries are known to stay in {-1, 0, +1}, e.g. M*R.
SignMatrix sign_product(const SignMatrix& a, const SignMatrix& b);

// a (x) b, block (i,j) = a(i,j) * b.
SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b);

// Periodic autocorrelation sum_i v[i] * v[(i + shift) mod n].
int paf(const FirstRow& row, std::size_t shift);

bool is_symmetric(const SignMatrix& m) noexcept;
bool is_circulant(const SignMatrix& m) noexcept;
// First row of m when m is type1 circulant.
FirstRow circulant_row(const SignMatrix& m);

// True when XY^T == YX^T.
bool amicable(const SignMatrix& x, const SignMatrix& y);
bool commute(const SignMatrix& x, const SignMatrix& y);

struct PropertyReport {
  bool is_pm1 = false;
  bool is_hadamard = false;
  bool is_symmetric = false;
  bool is_skew_plus_identity = false;
  bool is_conference = false;

  std::string describe() const;
};

PropertyReport check_properties(const SignMatrix& m);

}  // namespace propus
