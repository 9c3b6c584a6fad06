#include "propus/search.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace propus {

namespace {

constexpr std::size_t kMaxSearchOrder = 64;
// General (non-symmetric) slots above this order are only ever streamed.
constexpr std::size_t kMaxMaterializedGeneral = 24;
constexpr std::size_t kMaxGeneralOrder = 40;

struct Slot {
  SlotShape shape = SlotShape::symmetric;
  bool zero_origin = false;
  int weight = 1;
  std::optional<int> row_sum;
};

struct Plan {
  SearchKind kind = SearchKind::propus;
  int n = 1;
  std::vector<Slot> slots;
  int sum_target = 0;  // sum_k weight_k * rowsum_k^2
  int paf_target = 0;  // sum_k weight_k * paf_k(s) for every s >= 1
};

Plan make_plan(const SearchSpec& spec) {
  if (spec.n < 1 || spec.n > kMaxSearchOrder)
    throw std::invalid_argument("search: order must be in [1, 64]");
  if (spec.limit < 1) throw std::invalid_argument("search: limit must be >= 1");
  const std::size_t count = slot_count(spec.kind);
  const auto shapes = spec.shapes.empty() ? default_shapes(spec.kind) : spec.shapes;
  if (shapes.size() != count) throw std::invalid_argument("search: wrong number of slot shapes");
  if (spec.row_sums.size() > count) throw std::invalid_argument("search: too many row sums");
  for (auto shape : shapes)
    if (shape == SlotShape::general && spec.n > kMaxGeneralOrder)
      throw std::invalid_argument("search: general slots are limited to order 40");

  Plan plan;
  plan.kind = spec.kind;
  plan.n = static_cast<int>(spec.n);
  plan.slots.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    plan.slots[k].shape = shapes[k];
    if (k < spec.row_sums.size()) plan.slots[k].row_sum = spec.row_sums[k];
  }
  const int n = plan.n;
  switch (spec.kind) {
    case SearchKind::propus:
      plan.slots[1].weight = 2;
      plan.sum_target = 4 * n;
      plan.paf_target = 0;
      break;
    case SearchKind::turyn:
    case SearchKind::conference:
      plan.slots[0].zero_origin = true;
      plan.sum_target = 2 * n - 1;
      plan.paf_target = 0;
      break;
    case SearchKind::doptimal:
      plan.sum_target = 4 * n - 2;
      plan.paf_target = 2;
      break;
  }
  return plan;
}

// Row packing: position i of the row lives at bit (n - 1 - i), so for +-1
// rows numeric order of `plus` is lexicographic order with - < +.
struct Packed {
  std::uint64_t plus = 0;
  std::uint64_t nz = 0;
};

struct Geometry {
  int n;
  int shifts;  // PAF is checked for s = 1 .. n/2
  std::uint64_t full;

  explicit Geometry(int order)
      : n(order), shifts(order / 2), full(order == 64 ? ~0ULL : ((1ULL << order) - 1)) {}

  std::uint64_t bit(int pos) const { return 1ULL << (n - 1 - pos); }

  std::uint64_t rot(std::uint64_t x, int s) const { return ((x << s) | (x >> (n - s))) & full; }

  int paf(const Packed& r, int s) const {
    const std::uint64_t both = r.nz & rot(r.nz, s);
    return std::popcount(both) - 2 * std::popcount((r.plus ^ rot(r.plus, s)) & both);
  }

  void paf_vector(const Packed& r, std::int8_t* out) const {
    for (int s = 1; s <= shifts; ++s) out[s - 1] = static_cast<std::int8_t>(paf(r, s));
  }

  static int sum(const Packed& r) { return 2 * std::popcount(r.plus) - std::popcount(r.nz); }

  int rank(const Packed& r, std::uint64_t b) const {
    if (!(r.nz & b)) return 1;
    return (r.plus & b) ? 2 : 0;
  }

  bool less(const Packed& a, const Packed& b) const {
    const std::uint64_t diff = (a.plus ^ b.plus) | (a.nz ^ b.nz);
    if (diff == 0) return false;
    const std::uint64_t top = 1ULL << (63 - std::countl_zero(diff));
    return rank(a, top) < rank(b, top);
  }

  static Packed negate(const Packed& r) { return {r.nz & ~r.plus, r.nz}; }

  bool canonical(const Packed& r, const Slot& slot) const {
    if (less(negate(r), r)) return false;
    if (slot.shape == SlotShape::symmetric || slot.zero_origin) return true;
    const std::uint64_t neg = full & ~r.plus;
    for (int s = 1; s < n; ++s)
      if (rot(r.plus, s) < r.plus || rot(neg, s) < r.plus) return false;
    return true;
  }

  FirstRow to_row(const Packed& r) const {
    std::vector<std::int8_t> v(n);
    for (int i = 0; i < n; ++i) v[i] = static_cast<std::int8_t>(rank(r, bit(i)) - 1);
    return FirstRow(std::move(v));
  }
};

// Row sums each slot may take, given parity, range, fixed targets and (when
// the filter is on) solvability of sum_k w_k r_k^2 = target.
std::vector<std::vector<bool>> allowed_sums(const Plan& plan, bool filter) {
  const int n = plan.n;
  const std::size_t count = plan.slots.size();
  std::vector<std::vector<int>> values(count);
  for (std::size_t k = 0; k < count; ++k) {
    const Slot& s = plan.slots[k];
    const int len = s.zero_origin ? n - 1 : n;
    for (int r = -len; r <= len; r += 2)
      if (!s.row_sum || *s.row_sum == r) values[k].push_back(r);
  }
  std::vector<std::vector<bool>> ok(count, std::vector<bool>(2 * n + 1, false));
  if (!filter) {
    for (std::size_t k = 0; k < count; ++k)
      for (int r : values[k]) ok[k][r + n] = true;
    return ok;
  }
  auto mark = [&](const std::array<int, 3>& r) {
    int total = 0;
    for (std::size_t k = 0; k < count; ++k) total += plan.slots[k].weight * r[k] * r[k];
    if (total != plan.sum_target) return;
    for (std::size_t k = 0; k < count; ++k) ok[k][r[k] + n] = true;
  };
  for (int r0 : values[0])
    for (int r1 : values[1]) {
      if (count == 2) {
        mark({r0, r1, 0});
        continue;
      }
      for (int r2 : values[2]) mark({r0, r1, r2});
    }
  return ok;
}

// Enumerates the rows of one slot in lexicographic order.
class RowSource {
 public:
  RowSource(const Geometry& g, const Slot& slot) : slot_(slot) {
    if (slot.shape == SlotShape::general) {
      bits_ = g.n;
      base_nz_ = g.full;
      if (slot.zero_origin) {
        bits_ = g.n - 1;
        base_nz_ = g.full & ~g.bit(0);
      }
      return;
    }
    const int start = slot.zero_origin ? 1 : 0;
    base_nz_ = slot.zero_origin ? (g.full & ~g.bit(0)) : g.full;
    std::vector<std::uint64_t> masks;
    for (int pos = start; pos <= g.n / 2; ++pos) masks.push_back(g.bit(pos) | g.bit((g.n - pos) % g.n));
    bits_ = static_cast<int>(masks.size());
    // Counter bit (bits-1-j) drives free position j, split into two tables.
    lo_bits_ = bits_ / 2;
    const int hi_bits = bits_ - lo_bits_;
    lo_.assign(std::size_t{1} << lo_bits_, 0);
    hi_.assign(std::size_t{1} << hi_bits, 0);
    for (std::size_t c = 0; c < lo_.size(); ++c)
      for (int j = 0; j < lo_bits_; ++j)
        if (c >> j & 1) lo_[c] |= masks[bits_ - 1 - j];
    for (std::size_t c = 0; c < hi_.size(); ++c)
      for (int j = 0; j < hi_bits; ++j)
        if (c >> j & 1) hi_[c] |= masks[hi_bits - 1 - j];
  }

  std::uint64_t count() const { return std::uint64_t{1} << bits_; }

  Packed at(std::uint64_t c) const {
    if (slot_.shape == SlotShape::general) return {c & base_nz_, base_nz_};
    const std::uint64_t lo_mask = (std::uint64_t{1} << lo_bits_) - 1;
    return {hi_[c >> lo_bits_] | lo_[c & lo_mask], base_nz_};
  }

 private:
  const Slot& slot_;
  int bits_ = 0;
  int lo_bits_ = 0;
  std::uint64_t base_nz_ = 0;
  std::vector<std::uint64_t> lo_;
  std::vector<std::uint64_t> hi_;
};

struct Candidates {
  std::vector<Packed> rows;
  std::vector<int> sums;
  std::vector<std::int8_t> pafs;  // rows.size() * shifts
};

class Budget {
 public:
  explicit Budget(std::uint64_t cap) : cap_(cap) {}
  void spend(std::uint64_t nodes) { used_ += nodes; }
  bool over() const { return cap_ != 0 && used_ >= cap_; }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t cap_;
  std::uint64_t used_ = 0;
};

// Materializes a slot; returns false if the budget ran out first.
bool materialize(const Geometry& g, const Slot& slot, const std::vector<bool>& sum_ok,
                 bool canonical, Budget& budget, Candidates& out) {
  RowSource src(g, slot);
  const std::uint64_t total = src.count();
  constexpr std::uint64_t kChunk = 1 << 20;
  for (std::uint64_t c = 0; c < total; ++c) {
    if ((c & (kChunk - 1)) == 0 && c != 0) {
      budget.spend(kChunk);
      if (budget.over()) return false;
    }
    const Packed r = src.at(c);
    const int s = Geometry::sum(r);
    if (!sum_ok[s + g.n]) continue;
    if (canonical && !g.canonical(r, slot)) continue;
    out.rows.push_back(r);
    out.sums.push_back(s);
  }
  budget.spend(total & (kChunk - 1));
  out.pafs.resize(out.rows.size() * g.shifts);
  for (std::size_t i = 0; i < out.rows.size(); ++i) g.paf_vector(out.rows[i], out.pafs.data() + i * g.shifts);
  return !budget.over();
}

std::uint64_t hash_pafs(const std::int8_t* v, int m) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (int i = 0; i < m; ++i) {
    h ^= static_cast<std::uint8_t>(v[i]);
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

struct Lookup {
  Candidates cand;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> index;
  std::vector<std::uint8_t> feasible;  // [shift][value + n]

  void build(const Geometry& g) {
    const int m = g.shifts;
    index.resize(cand.rows.size());
    for (std::size_t i = 0; i < cand.rows.size(); ++i)
      index[i] = {hash_pafs(cand.pafs.data() + i * m, m), static_cast<std::uint32_t>(i)};
    std::sort(index.begin(), index.end());
    feasible.assign(static_cast<std::size_t>(m) * (2 * g.n + 1), 0);
    for (std::size_t i = 0; i < cand.rows.size(); ++i)
      for (int s = 0; s < m; ++s) feasible[s * (2 * g.n + 1) + cand.pafs[i * m + s] + g.n] = 1;
  }
};

using PackedHit = std::array<Packed, 3>;

// Weighted Gram sum equals the kind's target; shapes are not checked.
bool gram_identity_holds(SearchKind kind, const std::vector<FirstRow>& rows);

struct Engine {
  const Plan& plan;
  const SearchSpec& spec;
  Geometry g;
  int outer = 0;
  int lookup = 1;
  int middle = -1;
  std::vector<std::vector<bool>> sum_ok;

  Engine(const Plan& p, const SearchSpec& s) : plan(p), spec(s), g(p.n) {}

  bool hit_less(const PackedHit& a, const PackedHit& b) const {
    for (std::size_t k = 0; k < plan.slots.size(); ++k) {
      if (g.less(a[k], b[k])) return true;
      if (g.less(b[k], a[k])) return false;
    }
    return false;
  }

  SearchResult run() {
    const auto& slots = plan.slots;
    if (slots.size() == 3) middle = 2;
    const bool big = static_cast<std::size_t>(plan.n) > kMaxMaterializedGeneral;
    if (big && slots[lookup].shape == SlotShape::general) std::swap(outer, lookup);
    if (big && slots[lookup].shape == SlotShape::general)
      throw std::invalid_argument("search: at most one general slot above order 24");
    if (big && middle >= 0 && slots[middle].shape == SlotShape::general)
      throw std::invalid_argument("search: general middle slot above order 24");

    sum_ok = allowed_sums(plan, spec.row_sum_filter);
    Budget budget(spec.budget);
    SearchResult result;

    Lookup table;
    Candidates mid;
    if (!materialize(g, slots[lookup], sum_ok[lookup], spec.canonical_only, budget, table.cand) ||
        (middle >= 0 && !materialize(g, slots[middle], sum_ok[middle], spec.canonical_only, budget, mid))) {
      result.exhausted = true;
      result.nodes = budget.used();
      return result;
    }
    table.build(g);

    // Middle rows grouped by row sum.
    std::vector<std::vector<std::uint32_t>> mid_by_sum(2 * plan.n + 1);
    for (std::size_t i = 0; i < mid.rows.size(); ++i)
      mid_by_sum[mid.sums[i] + plan.n].push_back(static_cast<std::uint32_t>(i));

    const bool stream_outer =
        slots[outer].shape == SlotShape::general && static_cast<std::size_t>(plan.n) > kMaxMaterializedGeneral;
    Candidates outer_cand;
    RowSource outer_src(g, slots[outer]);
    std::uint64_t total = 0;
    if (stream_outer) {
      total = outer_src.count();
    } else {
      if (!materialize(g, slots[outer], sum_ok[outer], spec.canonical_only, budget, outer_cand)) {
        result.exhausted = true;
        result.nodes = budget.used();
        return result;
      }
      total = outer_cand.rows.size();
    }

    const std::uint64_t batch = std::clamp<std::uint64_t>(total / 256, 64, std::uint64_t{1} << 16);
    const int threads = spec.threads > 0 ? spec.threads : omp_get_max_threads();
    std::vector<PackedHit> hits;

    for (std::uint64_t begin = 0; begin < total; begin += batch) {
      const std::uint64_t end = std::min(total, begin + batch);
      std::uint64_t batch_nodes = 0;
#pragma omp parallel num_threads(threads) reduction(+ : batch_nodes)
      {
        std::vector<PackedHit> local;
        std::vector<std::int8_t> opaf(g.shifts);
        std::vector<std::int8_t> want(g.shifts);
#pragma omp for schedule(dynamic, 8)
        for (std::int64_t i = static_cast<std::int64_t>(begin); i < static_cast<std::int64_t>(end); ++i) {
          Packed o;
          const std::int8_t* po = nullptr;
          if (stream_outer) {
            o = outer_src.at(static_cast<std::uint64_t>(i));
            ++batch_nodes;
            if (!sum_ok[outer][Geometry::sum(o) + plan.n]) continue;
            if (spec.canonical_only && !g.canonical(o, slots[outer])) continue;
            g.paf_vector(o, opaf.data());
            po = opaf.data();
          } else {
            o = outer_cand.rows[i];
            po = outer_cand.pafs.data() + static_cast<std::size_t>(i) * g.shifts;
            ++batch_nodes;
          }
          visit(o, po, mid, mid_by_sum, table, want, local, batch_nodes);
        }
#pragma omp critical(propus_search_merge)
        hits.insert(hits.end(), local.begin(), local.end());
      }
      budget.spend(batch_nodes);
      if (hits.size() >= spec.limit) break;
      if (budget.over() && end < total) {
        result.exhausted = true;
        break;
      }
    }

    std::sort(hits.begin(), hits.end(), [this](const PackedHit& a, const PackedHit& b) { return hit_less(a, b); });
    if (hits.size() > spec.limit) hits.resize(spec.limit);

    result.nodes = budget.used();
    result.hits.reserve(hits.size());
    for (const auto& h : hits) {
      SearchHit out;
      for (std::size_t k = 0; k < slots.size(); ++k) out.rows.push_back(g.to_row(h[k]));
      if (!gram_identity_holds(plan.kind, out.rows))
        throw std::logic_error("search produced a row set failing the Gram identity");
      result.hits.push_back(std::move(out));
    }
    return result;
  }

  void visit(const Packed& o, const std::int8_t* po, const Candidates& mid,
             const std::vector<std::vector<std::uint32_t>>& mid_by_sum, const Lookup& table,
             std::vector<std::int8_t>& want, std::vector<PackedHit>& out, std::uint64_t& nodes) const {
    const int n = plan.n;
    const int osum = Geometry::sum(o);
    const int wo = plan.slots[outer].weight;
    const int wl = plan.slots[lookup].weight;
    if (middle < 0) {
      probe(o, po, nullptr, nullptr, 0, table, want, out);
      return;
    }
    const int wm = plan.slots[middle].weight;
    for (int msum = -n; msum <= n; ++msum) {
      const auto& group = mid_by_sum[msum + n];
      if (group.empty()) continue;
      if (spec.row_sum_filter) {
        const int rest = plan.sum_target - wo * osum * osum - wm * msum * msum;
        if (rest < 0 || rest % wl != 0) continue;
        const int sq = rest / wl;
        const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(sq))));
        if (r * r != sq || r > n) continue;
        if (!sum_ok[lookup][r + n] && !sum_ok[lookup][n - r]) continue;
      }
      for (std::uint32_t j : group) {
        ++nodes;
        probe(o, po, &mid.rows[j], mid.pafs.data() + static_cast<std::size_t>(j) * g.shifts, wm, table, want,
              out);
      }
    }
  }

  // Shift-by-shift target for the lookup slot, then hash probe.
  void probe(const Packed& o, const std::int8_t* po, const Packed* m, const std::int8_t* pm, int wm,
             const Lookup& table, std::vector<std::int8_t>& want, std::vector<PackedHit>& out) const {
    const int n = plan.n;
    const int wo = plan.slots[outer].weight;
    const int wl = plan.slots[lookup].weight;
    const int span = 2 * n + 1;
    for (int s = 0; s < g.shifts; ++s) {
      int t = plan.paf_target - wo * po[s];
      if (pm) t -= wm * pm[s];
      if (t % wl != 0) return;
      t /= wl;
      if (t < -n || t > n || !table.feasible[s * span + t + n]) return;
      want[s] = static_cast<std::int8_t>(t);
    }
    const std::uint64_t key = hash_pafs(want.data(), g.shifts);
    auto it = std::lower_bound(table.index.begin(), table.index.end(), std::make_pair(key, std::uint32_t{0}));
    for (; it != table.index.end() && it->first == key; ++it) {
      const std::size_t idx = it->second;
      if (!std::equal(want.begin(), want.end(), table.cand.pafs.begin() + idx * g.shifts)) continue;
      if (spec.row_sum_filter) {
        int total = wo * Geometry::sum(o) * Geometry::sum(o);
        total += wl * table.cand.sums[idx] * table.cand.sums[idx];
        if (m) total += wm * Geometry::sum(*m) * Geometry::sum(*m);
        if (total != plan.sum_target) continue;
      }
      PackedHit h{};
      h[outer] = o;
      h[lookup] = table.cand.rows[idx];
      if (m) h[middle] = *m;
      out.push_back(h);
    }
  }
};

IntMatrix identity_target(SearchKind kind, std::size_t n) {
  const auto ni = static_cast<std::int32_t>(n);
  switch (kind) {
    case SearchKind::propus: return IntMatrix::identity(n, 4 * ni);
    case SearchKind::turyn:
    case SearchKind::conference: return IntMatrix::identity(n, 2 * ni - 1);
    case SearchKind::doptimal: return IntMatrix::identity(n, 2 * ni - 2) + IntMatrix::all_ones(n, 2);
  }
  return IntMatrix(n);
}

std::vector<int> slot_weights(SearchKind kind) {
  if (kind == SearchKind::propus) return {1, 2, 1};
  return {1, 1};
}

bool pm1(const FirstRow& r) {
  return std::none_of(r.values().begin(), r.values().end(), [](auto v) { return v == 0; });
}

bool gram_identity_holds(SearchKind kind, const std::vector<FirstRow>& rows) {
  const std::size_t n = rows[0].size();
  const auto weights = slot_weights(kind);
  IntMatrix sum(n);
  for (std::size_t k = 0; k < rows.size(); ++k) sum += weights[k] * gram(circulant(rows[k]));
  return sum == identity_target(kind, n);
}

}  // namespace

std::string to_string(SearchKind kind) {
  switch (kind) {
    case SearchKind::propus: return "propus";
    case SearchKind::turyn: return "turyn";
    case SearchKind::conference: return "conference";
    case SearchKind::doptimal: return "doptimal";
  }
  return "?";
}

SearchKind parse_search_kind(const std::string& name) {
  if (name == "propus") return SearchKind::propus;
  if (name == "turyn") return SearchKind::turyn;
  if (name == "conference") return SearchKind::conference;
  if (name == "doptimal") return SearchKind::doptimal;
  throw std::invalid_argument("unknown kind '" + name + "'");
}

std::size_t slot_count(SearchKind kind) { return kind == SearchKind::propus ? 3 : 2; }

std::vector<SlotShape> default_shapes(SearchKind kind) {
  switch (kind) {
    case SearchKind::propus: return {SlotShape::symmetric, SlotShape::symmetric, SlotShape::symmetric};
    case SearchKind::turyn:
    case SearchKind::conference: return {SlotShape::symmetric, SlotShape::symmetric};
    case SearchKind::doptimal: return {SlotShape::symmetric, SlotShape::general};
  }
  return {};
}

bool hit_less(const SearchHit& a, const SearchHit& b) noexcept {
  return std::lexicographical_compare(a.rows.begin(), a.rows.end(), b.rows.begin(), b.rows.end(),
                                      [](const FirstRow& x, const FirstRow& y) { return lex_less(x, y); });
}

bool satisfies_identity(SearchKind kind, const std::vector<FirstRow>& rows) {
  if (rows.size() != slot_count(kind) || rows[0].size() == 0) return false;
  const std::size_t n = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != n || r.type() != CirculantType::type1) return false;

  switch (kind) {
    case SearchKind::propus:
      if (!std::all_of(rows.begin(), rows.end(), pm1)) return false;
      break;
    case SearchKind::turyn:
    case SearchKind::conference: {
      const auto& x = rows[0];
      if (x[0] != 0) return false;
      for (std::size_t i = 1; i < n; ++i)
        if (x[i] == 0) return false;
      if (!x.symmetric() || !pm1(rows[1]) || !rows[1].symmetric()) return false;
      break;
    }
    case SearchKind::doptimal:
      if (!pm1(rows[0]) || !pm1(rows[1]) || !rows[0].symmetric()) return false;
      break;
  }

  return gram_identity_holds(kind, rows);
}

SearchResult search(const SearchSpec& spec) {
  const Plan plan = make_plan(spec);
  Engine engine(plan, spec);
  return engine.run();
}

SearchResult search_propus(const SearchSpec& spec) {
  if (spec.kind != SearchKind::propus) throw std::invalid_argument("search_propus: kind must be propus");
  return search(spec);
}

SearchResult search_turyn_pair(const SearchSpec& spec) {
  if (spec.kind != SearchKind::turyn) throw std::invalid_argument("search_turyn_pair: kind must be turyn");
  return search(spec);
}

SearchResult search_two_circulant(const SearchSpec& spec) {
  if (spec.kind != SearchKind::conference && spec.kind != SearchKind::doptimal)
    throw std::invalid_argument("search_two_circulant: kind must be conference or doptimal");
  return search(spec);
}

namespace reference {

namespace {

std::vector<std::vector<std::int8_t>> all_rows(std::size_t n, bool zero_origin) {
  const std::size_t free = zero_origin ? n - 1 : n;
  std::vector<std::vector<std::int8_t>> out;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << free); ++c) {
    std::vector<std::int8_t> v(n, 0);
    for (std::size_t i = 0; i < free; ++i) v[zero_origin ? i + 1 : i] = (c >> i & 1) ? 1 : -1;
    out.push_back(std::move(v));
  }
  return out;
}

bool orbit_minimal(const FirstRow& r, bool rotations) {
  std::vector<std::vector<std::int8_t>> orbit;
  const std::size_t n = r.size();
  const std::size_t shifts = rotations ? n : 1;
  for (std::size_t s = 0; s < shifts; ++s)
    for (int sign : {1, -1}) {
      std::vector<std::int8_t> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::int8_t>(sign * r[(i + s) % n]);
      orbit.push_back(std::move(v));
    }
  const auto& best = *std::min_element(orbit.begin(), orbit.end());
  return std::equal(best.begin(), best.end(), r.values().begin());
}

}  // namespace

SearchResult search_naive(const SearchSpec& spec) {
  const Plan plan = make_plan(spec);
  const std::size_t n = spec.n;
  const std::size_t count = plan.slots.size();

  std::vector<std::vector<FirstRow>> rows(count);
  std::vector<std::vector<IntMatrix>> grams(count);
  for (std::size_t k = 0; k < count; ++k) {
    const Slot& slot = plan.slots[k];
    for (auto& v : all_rows(n, slot.zero_origin)) {
      FirstRow r(std::move(v));
      if (slot.shape == SlotShape::symmetric && !r.symmetric()) continue;
      if (slot.row_sum && r.sum() != *slot.row_sum) continue;
      if (spec.canonical_only &&
          !orbit_minimal(r, slot.shape == SlotShape::general && !slot.zero_origin))
        continue;
      grams[k].push_back(slot.weight * gram(circulant(r)));
      rows[k].push_back(std::move(r));
    }
  }

  const IntMatrix target = identity_target(spec.kind, n);
  SearchResult result;
  for (std::size_t i = 0; i < rows[0].size(); ++i)
    for (std::size_t j = 0; j < rows[1].size(); ++j) {
      const IntMatrix partial = grams[0][i] + grams[1][j];
      if (count == 2) {
        ++result.nodes;
        if (partial == target) result.hits.push_back({{rows[0][i], rows[1][j]}});
        continue;
      }
      for (std::size_t k = 0; k < rows[2].size(); ++k) {
        ++result.nodes;
        if (partial + grams[2][k] == target) result.hits.push_back({{rows[0][i], rows[1][j], rows[2][k]}});
      }
    }
  std::sort(result.hits.begin(), result.hits.end(), hit_less);
  if (result.hits.size() > spec.limit) result.hits.resize(spec.limit);
  return result;
}

}  // namespace reference

}  // namespace propus
