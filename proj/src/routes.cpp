#include "propus/routes.hpp"

#include <array>
#include <stdexcept>

#include "propus/errors.hpp"
#include "propus/finite_field.hpp"
#include "propus/miyamoto.hpp"
#include "propus/search.hpp"

namespace propus {

namespace {

constexpr std::array<std::pair<Method, const char*>, 7> kNames = {{
    {Method::automatic, "auto"},
    {Method::paley_turyn, "paley-turyn"},
    {Method::conference, "conference"},
    {Method::doptimal, "doptimal"},
    {Method::three_equal, "three-equal"},
    {Method::miyamoto, "miyamoto"},
    {Method::search, "search"},
}};

// Largest order the raw propus triple search is allowed to attempt.
constexpr std::size_t kMaxTripleSearch = 15;

CatalogEntry ingredient(SearchKind kind, std::vector<FirstRow> rows, const std::string& note) {
  CatalogEntry e;
  e.kind = kind;
  e.n = rows.front().size();
  e.rows = std::move(rows);
  e.provenance = note;
  return e;
}

[[noreturn]] void unsupported(Method m, std::size_t order, const std::string& why) {
  throw UnsupportedOrder(to_string(m) + " cannot produce order " + std::to_string(order) + ": " + why);
}

RouteResult paley_turyn(std::size_t order, const PairOptions& opts) {
  const std::size_t n = order / 4;
  if (n % 2 == 0) unsupported(Method::paley_turyn, order, "needs order 4n with n odd");
  const TurynPair pair = find_turyn_pair(n, opts);
  return {Method::paley_turyn,
          ingredient(SearchKind::turyn, {pair.x_row(), pair.y_row()}, "Turyn pair, (X+I, Y, X-I) in P"),
          williamson_propus(pair)};
}

RouteResult conference(std::size_t order, const PairOptions& opts) {
  const std::size_t n = order / 4;
  const bool plain = n % 4 == 2;
  if (!plain && n % 2 == 0) unsupported(Method::conference, order, "needs order 4n with n odd or n = 2 (mod 4)");
  const std::size_t k = plain ? n / 2 : n;
  ConferencePair pair = [&] {
    try {
      return conference_pair(k, PairSource::catalog, opts);
    } catch (const NotInCatalog&) {
      return conference_pair(k, PairSource::search, opts);
    }
  }();
  const auto variant = plain ? ConferenceVariant::plain : ConferenceVariant::back_circulant;
  return {Method::conference,
          ingredient(SearchKind::conference, {pair.a_row(), pair.b_row()},
                     plain ? "conference cores, (M+I, M-I, M+I) in P" : "conference cores, (A+I, BR, A-I) in P"),
          conference_construction(pair, variant)};
}

RouteResult doptimal(std::size_t order, const PairOptions& opts) {
  const std::size_t n = order / 4;
  if (n % 4 != 3 || !is_prime(static_cast<long long>(n)))
    unsupported(Method::doptimal, order, "needs order 4n with n a prime = 3 (mod 4)");
  if (n > 10000) unsupported(Method::doptimal, order, "field too large");
  const DOptimalPair pair = find_doptimal_pair(n, opts);
  return {Method::doptimal,
          ingredient(SearchKind::doptimal, {pair.x_row(), pair.y_row()}, "D-optimal pair, (X, Q+I, Y) in GP"),
          d_optimal_construction(pair, build_field(static_cast<int>(n)))};
}

RouteResult three_equal(std::size_t order) {
  if (order != 12 && order != 28) unsupported(Method::three_equal, order, "family is {12, 28}");
  return {Method::three_equal, std::nullopt, three_equal_construction(order / 4)};
}

RouteResult miyamoto(std::size_t order, const PairOptions& opts) {
  const std::size_t n = order / 4;
  if (n % 2 == 0 || n < 7) unsupported(Method::miyamoto, order, "needs order 4(2q+1) with q >= 3");
  const long long q = static_cast<long long>((n - 1) / 2);
  if (q % 2 == 0 || !is_prime_power(q) || q > 10000)
    unsupported(Method::miyamoto, order, "q = " + std::to_string(q) + " is not an odd prime power");
  const TurynPair pair = find_turyn_pair(static_cast<std::size_t>(q), opts);
  const FieldTable field = build_field(static_cast<int>(q));
  const MiyamotoInput in = q % 4 == 1 ? standard_input(field, pair) : backcirculant_input(field, pair);
  return {Method::miyamoto,
          ingredient(SearchKind::turyn, {pair.x_row(), pair.y_row()},
                     q % 4 == 1 ? "Turyn pair of order q, U=(I,Q,Q,0) V=(P,I,I,S)"
                                : "Turyn pair of order q, U=(I,QR,QR,0) V=(P,R,R,S)"),
          miyamoto_propus(in)};
}

RouteResult triple_search(std::size_t order, const PairOptions& opts) {
  const std::size_t n = order / 4;
  if (n > kMaxTripleSearch) unsupported(Method::search, order, "triple search is limited to n <= 15");
  SearchSpec spec;
  spec.kind = SearchKind::propus;
  spec.n = n;
  spec.limit = 1;
  spec.budget = opts.budget;
  spec.threads = opts.threads;
  const SearchResult res = search(spec);
  if (res.hits.empty())
    throw NotFound("propus search of order " + std::to_string(n) + (res.exhausted ? " ran out of budget" : " is empty"));
  const auto& rows = res.hits.front().rows;
  PropusTriple t = PropusTriple::from_rows(rows[0], rows[1], rows[2]);
  SignMatrix h = assemble_p(t);
  return {Method::search, ingredient(SearchKind::propus, rows, "propus triple by search"),
          {std::move(t), std::move(h)}};
}

RouteResult dispatch(std::size_t order, Method method, const PairOptions& opts) {
  switch (method) {
    case Method::paley_turyn: return paley_turyn(order, opts);
    case Method::conference: return conference(order, opts);
    case Method::doptimal: return doptimal(order, opts);
    case Method::three_equal: return three_equal(order);
    case Method::miyamoto: return miyamoto(order, opts);
    case Method::search: return triple_search(order, opts);
    case Method::automatic: break;
  }
  throw std::logic_error("dispatch: automatic is not a route");
}

}  // namespace

std::string to_string(Method m) {
  for (const auto& [method, name] : kNames)
    if (method == m) return name;
  return "unknown";
}

Method parse_method(const std::string& name) {
  for (const auto& [method, n] : kNames)
    if (name == n) return method;
  throw std::invalid_argument("unknown method '" + name + "'");
}

const std::vector<Method>& auto_methods() {
  static const std::vector<Method> order = {Method::paley_turyn, Method::conference, Method::doptimal,
                                            Method::three_equal, Method::miyamoto};
  return order;
}

RouteResult construct_order(std::size_t order, Method method, const PairOptions& opts) {
  if (order == 0 || order % 4 != 0 || order > kMaxOrder)
    throw UnsupportedOrder("order " + std::to_string(order) + " is not a positive multiple of 4 up to " +
                           std::to_string(kMaxOrder));
  if (method != Method::automatic) {
    RouteResult r = dispatch(order, method, opts);
    if (!is_symmetric(r.construction.matrix))
      throw NotHadamard(to_string(method) + " produced a non-symmetric matrix of order " + std::to_string(order));
    return r;
  }
  std::string tried;
  for (Method m : auto_methods()) {
    try {
      return construct_order(order, m, opts);
    } catch (const Error& e) {
      tried += "\n  " + to_string(m) + ": " + e.what();
    }
  }
  throw NotFound("no route produced order " + std::to_string(order) + tried);
}

}  // namespace propus
