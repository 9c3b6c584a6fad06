#pragma once

// Named construction routes. Every route returns only matrices that passed
// the full Hadamard check inside assemble_p / assemble_gp.

#include <cstddef>
#include <cstdint>

#include "propus/catalog.hpp"
#include "propus/finite_field.hpp"
#include "propus/matrix.hpp"
#include "propus/propus.hpp"

namespace propus {

// Symmetric circulant X (zero diagonal) and Y (+-1) of order n with
// XX^T + YY^T = (2n-1)I.
class TurynPair {
 public:
  // Throws std::invalid_argument unless the invariants hold.
  TurynPair(FirstRow x, FirstRow y);

  const FirstRow& x_row() const noexcept { return x_; }
  const FirstRow& y_row() const noexcept { return y_; }
  SignMatrix x() const { return circulant(x_); }
  SignMatrix y() const { return circulant(y_); }
  std::size_t order() const noexcept { return x_.size(); }

 private:
  FirstRow x_;
  FirstRow y_;
};

// Same data as a TurynPair, read as the circulant cores of the symmetric
// conference matrix [[A, B], [B, -A]] of order 2n.
class ConferencePair {
 public:
  // Throws InvalidConferencePair unless the invariants hold.
  ConferencePair(FirstRow a, FirstRow b);
  explicit ConferencePair(const TurynPair& t) : ConferencePair(t.x_row(), t.y_row()) {}

  const FirstRow& a_row() const noexcept { return a_; }
  const FirstRow& b_row() const noexcept { return b_; }
  std::size_t order() const noexcept { return a_.size(); }

  TurynPair as_turyn() const { return TurynPair(a_, b_); }

 private:
  FirstRow a_;
  FirstRow b_;
};

// Circulant +-1 X and Y of order n with XX^T + YY^T = (2n-2)I + 2J. X is not
// required to be symmetric here; d_optimal_propus checks that.
class DOptimalPair {
 public:
  // Throws std::invalid_argument unless the Gram identity holds.
  DOptimalPair(FirstRow x, FirstRow y);

  const FirstRow& x_row() const noexcept { return x_; }
  const FirstRow& y_row() const noexcept { return y_; }
  std::size_t order() const noexcept { return x_.size(); }

 private:
  FirstRow x_;
  FirstRow y_;
};

enum class PairSource { search, catalog };

struct PairOptions {
  const Catalog* catalog = nullptr;  // nullptr selects builtin_catalog()
  std::uint64_t budget = 0;          // search node cap, 0 = unlimited
  int threads = 0;
};

// Lexicographically least pair from the given source. Catalog lookups for
// conference pairs also accept turyn entries (same identity).
// Throws NotFound (search empty or out of budget) or NotInCatalog.
TurynPair turyn_pair(std::size_t n, PairSource source, const PairOptions& opts = {});
ConferencePair conference_pair(std::size_t n, PairSource source, const PairOptions& opts = {});
DOptimalPair doptimal_pair(std::size_t n, PairSource source, const PairOptions& opts = {});

// Catalog first, search second; rethrows NotFound when both fail.
TurynPair find_turyn_pair(std::size_t n, const PairOptions& opts = {});
DOptimalPair find_doptimal_pair(std::size_t n, const PairOptions& opts = {});

struct Construction {
  PropusTriple triple;
  SignMatrix matrix;
};

// (X+I, Y, X-I) in the P array: order 4n.
Construction williamson_propus(const TurynPair& pair);

// q = 1 (mod 4) prime power; the Turyn pair of order (q+1)/2 comes from
// find_turyn_pair. Throws BadResidue otherwise.
Construction williamson_propus_from_q(int q, const PairOptions& opts = {});

// [[A, B], [B, -A]], order 2n.
SignMatrix conference_matrix(const ConferencePair& pair);

enum class ConferenceVariant { plain, back_circulant };

// plain: M the conference matrix, (M+I, M-I, M+I) in P, order 4(2n).
// back_circulant: (A+I, BR, A-I) in P, order 4n.
SignMatrix conference_propus(const ConferencePair& pair, ConferenceVariant variant);
Construction conference_construction(const ConferencePair& pair, ConferenceVariant variant);

// (X, Q+I, Y) in GP with Q the Paley core of the prime field of order n.
// Throws WrongResidue unless field is GF(n) with n a prime = 3 (mod 4), and
// AsymmetricX unless X is symmetric.
SignMatrix d_optimal_propus(const DOptimalPair& pair, const FieldTable& field);
Construction d_optimal_construction(const DOptimalPair& pair, const FieldTable& field);

// B = C = D = Q+I, A the lex-least symmetric circulant making the additive
// property hold, assembled with GP. n must be 3 or 7 (UnsupportedOrder).
SignMatrix three_equal_propus(std::size_t n);
Construction three_equal_construction(std::size_t n);

}  // namespace propus
