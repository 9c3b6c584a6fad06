#pragma once

// Propus variation of Miyamoto's theorem: four pairs (U_i, V_i) of order n
// become symmetric Williamson-type matrices X_1..X_4 of order 2n+1 with
// X_2 = X_3, and from there a symmetric Hadamard matrix of order 4(2n+1).

#include <array>
#include <string>

#include "propus/constructions.hpp"
#include "propus/errors.hpp"
#include "propus/matrix.hpp"

namespace propus {

struct MiyamotoInput {
  std::array<SignMatrix, 4> u;
  std::array<SignMatrix, 4> v;
};

struct MiyamotoReport {
  bool amicable_u = false;   // (i)   U_i U_j^T = U_j U_i^T
  bool amicable_v = false;   // (ii)  V_i V_j^T = V_j V_i^T
  bool pm1_sums = false;     // (iii) U_i + V_i and U_i - V_i are +-1
  bool row_sums = false;     // (iv)  U_1 rows sum to 1, U_2..U_4 rows to 0
  bool gram_sums = false;    // (v)   sum U_iU_i^T = (2n+1)I - 2J, sum V_iV_i^T = (2n+1)I
  bool equal_pair = false;   // U_2 = U_3 and V_2 = V_3

  bool all() const noexcept {
    return amicable_u && amicable_v && pm1_sums && row_sums && gram_sums && equal_pair;
  }
  std::string describe() const;
};

class MiyamotoConditionsFailed : public ConditionsFailed {
 public:
  explicit MiyamotoConditionsFailed(const MiyamotoReport& report)
      : ConditionsFailed("Miyamoto conditions failed: " + report.describe()), report_(report) {}

  const MiyamotoReport& report() const noexcept { return report_; }

 private:
  MiyamotoReport report_;
};

// Throws std::invalid_argument unless all eight matrices share an order.
MiyamotoReport validate_miyamoto(const MiyamotoInput& input);

// S_j = U_j (x) [[1,1],[1,1]] + V_j (x) [[1,-1],[-1,1]], order 2n. Needs (iii).
std::array<SignMatrix, 4> expand_s(const MiyamotoInput& input);

// X_1 = [[1, -e], [-e^T, S_1]], X_i = [[1, e], [e^T, S_i]] for i = 2..4.
// Throws MiyamotoConditionsFailed unless validate_miyamoto is all true.
std::array<SignMatrix, 4> compose_williamson(const MiyamotoInput& input);

// q = 1 (mod 4): U = (I, Q, Q, 0), V = (P, I, I, S) with Q the Paley core of
// order q and (P, S) a Turyn pair of order q.
MiyamotoInput standard_input(const FieldTable& field, const TurynPair& pair);

// q = 3 (mod 4): U = (I, QR, QR, 0), V = (P, R, R, S).
MiyamotoInput backcirculant_input(const FieldTable& field, const TurynPair& pair);

// Composes and assembles (X_1, X_2, X_4) in P; if that fails, (X_4, X_2, X_1).
Construction miyamoto_propus(const MiyamotoInput& input);

// Prime power q = 1 (mod 4) with a Turyn pair of order q from the catalog or
// search; returns a symmetric Hadamard matrix of order 4(2q+1). Throws
// BadResidue for any other q and NotFound when no Turyn pair is available.
SignMatrix corollary_driver(int q, const PairOptions& opts = {});

// As corollary_driver, also accepting prime powers q = 3 (mod 4) through
// backcirculant_input.
Construction miyamoto_construction(int q, const PairOptions& opts = {});

}  // namespace propus
