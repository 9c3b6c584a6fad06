#include "propus/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "propus/errors.hpp"
#include "propus/search.hpp"

namespace propus {

namespace {

bool pm1(const FirstRow& r) {
  return std::none_of(r.values().begin(), r.values().end(), [](std::int8_t v) { return v == 0; });
}

SignMatrix plus_identity(const SignMatrix& m, int sign) {
  IntMatrix sum = m.to_int();
  sum += IntMatrix::identity(m.order(), sign);
  return to_sign(sum);
}

const Catalog& catalog_of(const PairOptions& opts) {
  return opts.catalog ? *opts.catalog : builtin_catalog();
}

std::vector<FirstRow> least_from_catalog(const Catalog& cat, std::vector<SearchKind> kinds, std::size_t n) {
  std::vector<FirstRow> best;
  for (auto kind : kinds)
    for (const CatalogEntry* e : cat.find(kind, n))
      if (best.empty() || hit_less(SearchHit{e->rows}, SearchHit{best})) best = e->rows;
  if (best.empty())
    throw NotInCatalog("no " + to_string(kinds.front()) + " entry of order " + std::to_string(n) + " in catalog");
  return best;
}

std::vector<FirstRow> least_from_search(SearchKind kind, std::size_t n, const PairOptions& opts) {
  SearchSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.limit = 1;
  spec.budget = opts.budget;
  spec.threads = opts.threads;
  SearchResult res;
  try {
    res = search(spec);
  } catch (const std::invalid_argument& e) {
    throw NotFound(to_string(kind) + " search of order " + std::to_string(n) + " not possible: " + e.what());
  }
  if (res.hits.empty()) {
    throw NotFound(to_string(kind) + " search of order " + std::to_string(n) +
                   (res.exhausted ? " ran out of budget" : " is empty"));
  }
  return res.hits.front().rows;
}

template <typename Pair>
Pair find_pair(std::size_t n, const PairOptions& opts, Pair (*get)(std::size_t, PairSource, const PairOptions&)) {
  try {
    return get(n, PairSource::catalog, opts);
  } catch (const NotInCatalog&) {
    return get(n, PairSource::search, opts);
  }
}

}  // namespace

TurynPair::TurynPair(FirstRow x, FirstRow y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() == 0 || x_.size() != y_.size())
    throw std::invalid_argument("TurynPair: rows must share a positive order");
  if (!satisfies_identity(SearchKind::turyn, {x_, y_}))
    throw std::invalid_argument("TurynPair: rows " + x_.to_string() + " " + y_.to_string() +
                                " do not give XX^T + YY^T = (2n-1)I with the required shapes");
}

ConferencePair::ConferencePair(FirstRow a, FirstRow b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() == 0 || a_.size() != b_.size() || !satisfies_identity(SearchKind::conference, {a_, b_}))
    throw InvalidConferencePair("rows " + a_.to_string() + " " + b_.to_string() +
                                " do not form a symmetric two-circulant conference matrix");
}

DOptimalPair::DOptimalPair(FirstRow x, FirstRow y) : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n == 0 || n != y_.size() || !pm1(x_) || !pm1(y_))
    throw std::invalid_argument("DOptimalPair: rows must be +-1 of a common positive order");
  IntMatrix g = gram(circulant(x_)) + gram(circulant(y_));
  const auto ni = static_cast<std::int32_t>(n);
  if (g != IntMatrix::identity(n, 2 * ni - 2) + IntMatrix::all_ones(n, 2))
    throw std::invalid_argument("DOptimalPair: XX^T + YY^T != (2n-2)I + 2J");
}

TurynPair turyn_pair(std::size_t n, PairSource source, const PairOptions& opts) {
  const auto rows = source == PairSource::catalog
                        ? least_from_catalog(catalog_of(opts), {SearchKind::turyn, SearchKind::conference}, n)
                        : least_from_search(SearchKind::turyn, n, opts);
  return TurynPair(rows[0], rows[1]);
}

ConferencePair conference_pair(std::size_t n, PairSource source, const PairOptions& opts) {
  const auto rows = source == PairSource::catalog
                        ? least_from_catalog(catalog_of(opts), {SearchKind::conference, SearchKind::turyn}, n)
                        : least_from_search(SearchKind::conference, n, opts);
  return ConferencePair(rows[0], rows[1]);
}

DOptimalPair doptimal_pair(std::size_t n, PairSource source, const PairOptions& opts) {
  const auto rows = source == PairSource::catalog
                        ? least_from_catalog(catalog_of(opts), {SearchKind::doptimal}, n)
                        : least_from_search(SearchKind::doptimal, n, opts);
  return DOptimalPair(rows[0], rows[1]);
}

TurynPair find_turyn_pair(std::size_t n, const PairOptions& opts) {
  return find_pair<TurynPair>(n, opts, &turyn_pair);
}

DOptimalPair find_doptimal_pair(std::size_t n, const PairOptions& opts) {
  return find_pair<DOptimalPair>(n, opts, &doptimal_pair);
}

Construction williamson_propus(const TurynPair& pair) {
  const SignMatrix x = pair.x();
  PropusTriple t(plus_identity(x, 1), pair.y(), plus_identity(x, -1));
  SignMatrix h = assemble_p(t);
  return {std::move(t), std::move(h)};
}

Construction williamson_propus_from_q(int q, const PairOptions& opts) {
  if (q < 1 || q % 4 != 1) throw BadResidue("q = " + std::to_string(q) + " is not 1 (mod 4)");
  if (!is_prime_power(q)) throw BadResidue("q = " + std::to_string(q) + " is not a prime power");
  return williamson_propus(find_turyn_pair(static_cast<std::size_t>((q + 1) / 2), opts));
}

SignMatrix conference_matrix(const ConferencePair& pair) {
  const std::size_t n = pair.order();
  const SignMatrix a = circulant(pair.a_row());
  const SignMatrix b = circulant(pair.b_row());
  const std::size_t m = 2 * n;
  std::vector<std::int8_t> e(m * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      e[i * m + j] = static_cast<std::int8_t>(a(i, j));
      e[i * m + n + j] = static_cast<std::int8_t>(b(i, j));
      e[(n + i) * m + j] = static_cast<std::int8_t>(b(i, j));
      e[(n + i) * m + n + j] = static_cast<std::int8_t>(-a(i, j));
    }
  return SignMatrix(m, std::move(e));
}

Construction conference_construction(const ConferencePair& pair, ConferenceVariant variant) {
  if (variant == ConferenceVariant::plain) {
    const SignMatrix m = conference_matrix(pair);
    PropusTriple t(plus_identity(m, 1), plus_identity(m, -1), plus_identity(m, 1));
    SignMatrix h = assemble_p(t);
    return {std::move(t), std::move(h)};
  }
  const SignMatrix a = circulant(pair.a_row());
  const SignMatrix br = sign_product(circulant(pair.b_row()), anti_identity(pair.order()));
  PropusTriple t(plus_identity(a, 1), br, plus_identity(a, -1));
  SignMatrix h = assemble_p(t);
  return {std::move(t), std::move(h)};
}

SignMatrix conference_propus(const ConferencePair& pair, ConferenceVariant variant) {
  return conference_construction(pair, variant).matrix;
}

Construction d_optimal_construction(const DOptimalPair& pair, const FieldTable& field) {
  const std::size_t n = pair.order();
  if (field.k() != 1 || static_cast<std::size_t>(field.q()) != n)
    throw WrongResidue("field GF(" + std::to_string(field.q()) + ") does not match pair order " +
                       std::to_string(n));
  if (n % 4 != 3) throw WrongResidue("n = " + std::to_string(n) + " is not 3 (mod 4)");
  if (!pair.x_row().symmetric()) throw AsymmetricX("X = " + pair.x_row().to_string() + " is not symmetric");
  const SignMatrix qi = plus_identity(paley_core(field), 1);
  PropusTriple t(circulant(pair.x_row()), qi, circulant(pair.y_row()));
  SignMatrix h = assemble_gp(t);
  return {std::move(t), std::move(h)};
}

SignMatrix d_optimal_propus(const DOptimalPair& pair, const FieldTable& field) {
  return d_optimal_construction(pair, field).matrix;
}

Construction three_equal_construction(std::size_t n) {
  if (n != 3 && n != 7)
    throw UnsupportedOrder("three-equal family exists only for n = 3, 7 (orders 12, 28); got n = " +
                           std::to_string(n));
  const SignMatrix qi = plus_identity(paley_core(build_field(static_cast<int>(n))), 1);
  // Symmetric rows are fixed by positions 0..n/2; walk them in lex order.
  const std::size_t free = n / 2 + 1;
  for (std::uint32_t c = 0; c < (1u << free); ++c) {
    std::vector<std::int8_t> v(n);
    for (std::size_t i = 0; i < free; ++i) {
      const int s = (c >> (free - 1 - i) & 1) ? 1 : -1;
      v[i] = static_cast<std::int8_t>(s);
      v[(n - i) % n] = static_cast<std::int8_t>(s);
    }
    PropusTriple t(circulant(FirstRow(v)), qi, qi);
    if (!additive_defect(t).is_zero()) continue;
    SignMatrix h = assemble_gp(t);
    return {std::move(t), std::move(h)};
  }
  throw NotFound("no symmetric circulant A completes the three-equal triple");
}

SignMatrix three_equal_propus(std::size_t n) { return three_equal_construction(n).matrix; }

}  // namespace propus
