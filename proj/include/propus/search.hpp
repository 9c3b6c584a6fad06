#pragma once

// Exhaustive search over circulant first rows.
//
// Every kind reduces to a periodic-autocorrelation (PAF) identity over two or
// three weighted slots:
//
//   kind        slots      weights  PAF target (s >= 1)  row sums
//   propus      A, B, D    1, 2, 1  0                    a^2 + 2b^2 + d^2 = 4n
//   turyn       X, Y       1, 1     0                    x^2 + y^2 = 2n - 1
//   conference  X, Y       1, 1     0                    x^2 + y^2 = 2n - 1
//   doptimal    X, Y       1, 1     2                    x^2 + y^2 = 4n - 2
//
// The X slot of turyn/conference has a zero at position 0. Rows are packed
// into 64-bit masks (n <= 64). One slot is indexed by its PAF vector, the
// outer slot is walked in lexicographic batches across OpenMP threads, and
// any middle slot is scanned with shift-by-shift pruning before the lookup.
// The row-sum identity above follows from the PAF identity applied to the
// all-ones vector and is used as a first filter.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "propus/matrix.hpp"

namespace propus {

enum class SearchKind { propus, turyn, conference, doptimal };

enum class SlotShape { symmetric, general };

std::string to_string(SearchKind kind);
// Throws std::invalid_argument for an unknown name.
SearchKind parse_search_kind(const std::string& name);

std::size_t slot_count(SearchKind kind);
std::vector<SlotShape> default_shapes(SearchKind kind);

struct SearchSpec {
  SearchKind kind = SearchKind::propus;
  std::size_t n = 1;
  // Per-slot shape; empty selects default_shapes(kind).
  std::vector<SlotShape> shapes;
  // Optional exact row sum per slot; empty means unconstrained.
  std::vector<std::optional<int>> row_sums;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  // Keep one representative per slot orbit: negation for symmetric slots,
  // negation and cyclic rotation for general slots.
  bool canonical_only = false;
  // Node cap (generated rows plus examined combinations); 0 is unlimited.
  std::uint64_t budget = 0;
  // OpenMP thread count; 0 keeps the runtime default.
  int threads = 0;
  bool row_sum_filter = true;
};

// First rows in slot order (A, B, D or X, Y).
struct SearchHit {
  std::vector<FirstRow> rows;

  bool operator==(const SearchHit&) const = default;
};

// Slot-by-slot lex_less.
bool hit_less(const SearchHit& a, const SearchHit& b) noexcept;

struct SearchResult {
  std::vector<SearchHit> hits;  // sorted by hit_less
  bool exhausted = false;       // budget ran out before the space was covered
  std::uint64_t nodes = 0;
};

// Full-matrix check of the kind's Gram identity plus its fixed shape
// requirements (turyn/conference X zero-diagonal and symmetric, Y symmetric;
// doptimal X symmetric). Shapes requested through SearchSpec beyond these
// are not re-checked here.
bool satisfies_identity(SearchKind kind, const std::vector<FirstRow>& rows);

// Dispatches on spec.kind. Results are identical for every thread count.
SearchResult search(const SearchSpec& spec);

// Kind-checked entry points; throw std::invalid_argument on the wrong kind.
SearchResult search_propus(const SearchSpec& spec);
SearchResult search_turyn_pair(const SearchSpec& spec);
SearchResult search_two_circulant(const SearchSpec& spec);

namespace reference {

// Serial, unpruned: every row of each slot (filtered only by requested shape
// and canonical form) in every combination, checked by full matrix Gram
// sums. Ignores budget and row_sum_filter. Feasible for n <= 8 or so.
SearchResult search_naive(const SearchSpec& spec);

}  // namespace reference

}  // namespace propus
