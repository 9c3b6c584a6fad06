#include "propus/finite_field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace propus {

namespace {

constexpr int kMaxFieldSize = 10000;

using Poly = std::vector<int>;  // coefficients low to high

Poly digits(int index, int p, int k) {
  Poly d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = index % p;
    index /= p;
  }
  return d;
}

int undigits(const Poly& d, int p) {
  int index = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) index = index * p + d[i];
  return index;
}

int degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

int inverse_mod(int a, int p) {
  // p is prime, so a^(p-2).
  long long r = 1;
  long long b = a % p;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<int>(r);
}

// Remainder of a modulo monic-or-not m over GF(p).
Poly poly_mod(Poly a, const Poly& m, int p) {
  const int dm = degree(m);
  const int lead_inv = inverse_mod(m[dm], p);
  for (int da = degree(a); da >= dm; da = degree(a)) {
    const int factor = a[da] * lead_inv % p;
    const int shift = da - dm;
    for (int i = 0; i <= dm; ++i) a[i + shift] = ((a[i + shift] - factor * m[i]) % p + p) % p;
  }
  a.resize(std::max(dm, 1), 0);
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, int p) {
  Poly r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  Poly out = poly_mod(std::move(r), m, p);
  out.resize(m.size() - 1, 0);
  return out;
}

// Monic polynomial of degree d whose lower coefficients are the digits of idx.
Poly monic(int idx, int p, int d) {
  Poly f = digits(idx, p, d);
  f.push_back(1);
  return f;
}

bool irreducible(const Poly& f, int p) {
  const int k = degree(f);
  for (int d = 1; d <= k / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int idx = 0; idx < count; ++idx) {
      const Poly g = monic(idx, p, d);
      if (degree(poly_mod(f, g, p)) < 0) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(int p, int k) {
  int count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (int idx = 0; idx < count; ++idx) {
    Poly f = monic(idx, p, k);
    if (irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(long long n) noexcept {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool prime_power(long long n, int& p, int& k) noexcept {
  if (n < 2) return false;
  long long d = 2;
  while (d * d <= n && n % d != 0) ++d;
  if (d * d > n) d = n;
  int e = 0;
  long long m = n;
  while (m % d == 0) {
    m /= d;
    ++e;
  }
  if (m != 1) return false;
  p = static_cast<int>(d);
  k = e;
  return true;
}

bool is_prime_power(long long n) noexcept {
  int p = 0;
  int k = 0;
  return prime_power(n, p, k);
}

FieldTable build_field(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("build_field: " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("build_field: extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldSize)
      throw std::invalid_argument("build_field: field size exceeds " + std::to_string(kMaxFieldSize));
  }

  FieldTable f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = static_cast<int>(q);
  f.modulus_ = k == 1 ? Poly{0, 1} : smallest_irreducible(p, k);

  const int order = f.q_ - 1;
  f.exp_.assign(order, 0);
  f.log_.assign(f.q_, 0);
  if (order == 1) {  // GF(2)
    f.primitive_ = 1;
    f.exp_[0] = 1;
    return f;
  }

  const auto factors = prime_factors(order);
  const Poly one = digits(1, p, k);
  auto power = [&](const Poly& g, int e) {
    Poly r = one;
    Poly b = g;
    for (; e > 0; e >>= 1) {
      if (e & 1) r = poly_mul_mod(r, b, f.modulus_, p);
      b = poly_mul_mod(b, b, f.modulus_, p);
    }
    return r;
  };

  // Smallest index whose multiplicative order is q-1.
  for (int cand = 2; cand < f.q_; ++cand) {
    const Poly g = digits(cand, p, k);
    bool generator = true;
    for (int r : factors) {
      if (power(g, order / r) == one) {
        generator = false;
        break;
      }
    }
    if (!generator) continue;
    f.primitive_ = cand;
    Poly x = one;
    for (int i = 0; i < order; ++i) {
      const int idx = undigits(x, p);
      f.exp_[i] = idx;
      f.log_[idx] = i;
      x = poly_mul_mod(x, g, f.modulus_, p);
    }
    return f;
  }
  throw std::logic_error("build_field: no primitive element");
}

FieldTable build_field(int q) {
  int p = 0;
  int k = 0;
  if (!prime_power(q, p, k))
    throw std::invalid_argument("build_field: " + std::to_string(q) + " is not a prime power");
  return build_field(p, k);
}

int FieldTable::add(int a, int b) const noexcept {
  if (k_ == 1) return (a + b) % p_;
  int r = 0;
  int place = 1;
  for (int i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

int FieldTable::neg(int a) const noexcept {
  if (k_ == 1) return (p_ - a) % p_;
  int r = 0;
  int place = 1;
  for (int i = 0; i < k_; ++i) {
    r += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return r;
}

int FieldTable::sub(int a, int b) const noexcept { return add(a, neg(b)); }

int FieldTable::mul(int a, int b) const noexcept {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

int FieldTable::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int FieldTable::pow(int a, long long e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const long long order = q_ - 1;
  long long r = (static_cast<long long>(log_[a]) * (e % order)) % order;
  if (r < 0) r += order;
  return exp_[r];
}

int quadratic_character(const FieldTable& field, int x) {
  if (!field.contains(x)) throw std::out_of_range("quadratic_character: element index out of range");
  if (x == 0) return 0;
  if (field.p() == 2) return 1;
  return field.log(x) % 2 == 0 ? 1 : -1;
}

SignMatrix paley_core(const FieldTable& field) {
  const int q = field.q();
  if (q % 2 == 0) throw std::invalid_argument("paley_core: field size must be odd");
  const auto n = static_cast<std::size_t>(q);
  std::vector<int> chi(n);
  for (int x = 0; x < q; ++x) chi[x] = quadratic_character(field, x);
  std::vector<std::int8_t> e(n * n);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) e[i * n + j] = static_cast<std::int8_t>(chi[field.sub(j, i)]);
  return SignMatrix(n, std::move(e));
}

}  // namespace propus
