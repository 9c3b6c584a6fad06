#pragma once

#include <cstdint>
#include <vector>

#include "propus/matrix.hpp"

namespace propus {

// GF(p^k) with elements numbered 0..q-1. Element g_i is the polynomial whose
// coefficient vector is the base-p digit expansion of i (constant term is
// the least significant digit), so g_0 = 0 and g_1 = 1. Multiplication goes
// through discrete log tables over a fixed primitive element.
class FieldTable {
 public:
  int p() const noexcept { return p_; }
  int k() const noexcept { return k_; }
  int q() const noexcept { return q_; }

  // Monic modulus, coefficients low to high (size k+1). {0, 1} for k == 1.
  const std::vector<int>& modulus() const noexcept { return modulus_; }
  int primitive_element() const noexcept { return primitive_; }

  int add(int a, int b) const noexcept;
  int sub(int a, int b) const noexcept;
  int neg(int a) const noexcept;
  int mul(int a, int b) const noexcept;
  // Throws std::domain_error for a == 0.
  int inv(int a) const;
  int pow(int a, long long e) const;
  // Discrete log base primitive_element(); a must be nonzero.
  int log(int a) const noexcept { return log_[a]; }

  bool contains(int a) const noexcept { return a >= 0 && a < q_; }

 private:
  friend FieldTable build_field(int p, int k);

  int p_ = 0;
  int k_ = 0;
  int q_ = 0;
  int primitive_ = 0;
  std::vector<int> modulus_;
  std::vector<int> exp_;  // exp_[i] = primitive^i, i in [0, q-1)
  std::vector<int> log_;  // log_[0] unused
};

bool is_prime(long long n) noexcept;

// When n = p^k for a prime p, returns true and fills p and k.
bool prime_power(long long n, int& p, int& k) noexcept;
bool is_prime_power(long long n) noexcept;

// Builds GF(p^k). Throws std::invalid_argument if p is not prime, k < 1 or
// p^k > 10000. For k >= 2 the modulus is the smallest monic irreducible of
// degree k when lower coefficients are read as a base-p number.
FieldTable build_field(int p, int k);
// Convenience: build_field for the prime power q.
FieldTable build_field(int q);

// chi(0) = 0, +1 on nonzero squares, -1 otherwise.
int quadratic_character(const FieldTable& field, int x);

// Q[i][j] = chi(g_j - g_i). Zero diagonal, QQ^T = qI - J, symmetric for
// q = 1 (mod 4) and skew for q = 3 (mod 4). Throws std::invalid_argument
// for even q.
SignMatrix paley_core(const FieldTable& field);

}  // namespace propus
