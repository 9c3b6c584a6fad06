#pragma once

#include <cstddef>
#include <string>

#include "propus/matrix.hpp"

namespace propus {

// A, B (= C) and D of a common order, all entries +-1.
class PropusTriple {
 public:
  // Throws std::invalid_argument on order mismatch or a zero entry.
  PropusTriple(SignMatrix a, SignMatrix b, SignMatrix d);

  static PropusTriple from_rows(const FirstRow& a, const FirstRow& b, const FirstRow& d);

  const SignMatrix& a() const noexcept { return a_; }
  const SignMatrix& b() const noexcept { return b_; }
  const SignMatrix& d() const noexcept { return d_; }
  std::size_t order() const noexcept { return a_.order(); }

  bool operator==(const PropusTriple&) const = default;

 private:
  SignMatrix a_;
  SignMatrix b_;
  SignMatrix d_;
};

enum class TripleClass { propus, propus_type, generalized_propus, invalid };

std::string to_string(TripleClass c);

// AA^T + 2BB^T + DD^T - 4nI; zero exactly when the additive property holds.
IntMatrix additive_defect(const PropusTriple& t);

// Strongest definition the triple meets, each checked on its own terms:
// propus (circulant, symmetric), propus-type (pairwise amicable, A
// symmetric), generalized-propus (pairwise commuting, A symmetric).
TripleClass classify_triple(const PropusTriple& t);

// Raw 4n x 4n block arrays, no verification.
//   P:  A  B  B  D  /  B  D -A -B  /  B -A -D  B  /  D -B  B -A
//   GP: A  BR BR DR / BR D'R -A -B'R / BR -A -D'R B'R / DR -B'R B'R -A
// where R is the anti-identity and ' is transpose.
SignMatrix p_array(const PropusTriple& t);
SignMatrix gp_array(const PropusTriple& t);

// Build the array and return it only if it is Hadamard; otherwise throw
// NotHadamard naming the first offending block-row pair.
SignMatrix assemble_p(const PropusTriple& t);

// As assemble_p, but additionally requires A, B, D type1 circulant and A
// symmetric (NotCirculantInput otherwise).
SignMatrix assemble_gp(const PropusTriple& t);

}  // namespace propus
