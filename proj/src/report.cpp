#include "propus/report.hpp"

#include <algorithm>
#include <sstream>

#include "propus/errors.hpp"

namespace propus {

namespace {

bool contains(const std::vector<int>& list, int n) { return std::binary_search(list.begin(), list.end(), n); }

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return "{" + out + "}";
}

}  // namespace

const std::vector<int>& published_resolved_orders() {
  static const std::vector<int> v = {1,   3,   5,   7,   9,   13,  15,  19,  21,  25,  27,  31,  37,  41,
                                     45,  49,  51,  55,  57,  59,  61,  63,  67,  69,  75,  79,  81,  85,
                                     87,  89,  91,  97,  99,  105, 111, 115, 117, 119, 121, 127, 129, 135,
                                     139, 141, 145, 147, 157, 159, 169, 175, 177, 181, 187, 195, 199};
  return v;
}

const std::vector<int>& published_doptimal_orders() {
  static const std::vector<int> v = {3, 7, 19, 31};
  return v;
}

const std::vector<int>& published_miyamoto_orders() {
  static const std::vector<int> v = {11, 83};
  return v;
}

const std::vector<int>& published_unresolved_orders() {
  static const std::vector<int> v = {17,  23,  29,  33,  35,  39,  47,  53,  65,  71,  73,  77,  93,  95,  97,
                                     99,  101, 103, 107, 109, 113, 125, 131, 133, 137, 143, 149, 151, 153, 155,
                                     161, 163, 165, 167, 171, 173, 179, 183, 185, 189, 191, 193, 197};
  return v;
}

std::string to_string(OrderClass c) {
  switch (c) {
    case OrderClass::constructed: return "constructed";
    case OrderClass::catalog_dependent: return "catalog-dependent";
    case OrderClass::unresolved: return "unresolved";
  }
  return "unresolved";
}

std::vector<int> CoverageReport::with_class(OrderClass c) const {
  std::vector<int> out;
  for (const auto& o : orders)
    if (o.cls == c) out.push_back(o.n);
  return out;
}

std::vector<int> CoverageReport::flagged() const {
  std::vector<int> out;
  for (const auto& o : orders)
    if (!o.flags.empty()) out.push_back(o.n);
  return out;
}

std::string CoverageReport::render() const {
  std::ostringstream out;
  out << "# n order class method published\n";
  for (const auto& o : orders) {
    std::string listed = o.published_resolved ? "resolved" : "-";
    if (o.published_unresolved) listed = o.published_resolved ? "resolved+unresolved" : "unresolved";
    out << o.n << ' ' << 4 * o.n << ' ' << to_string(o.cls) << ' '
        << (o.cls == OrderClass::constructed ? to_string(o.method) : "-") << ' ' << listed << '\n';
  }
  for (const auto& o : orders)
    for (const auto& f : o.flags) out << "!! n=" << o.n << ": " << f << '\n';
  for (auto c : {OrderClass::constructed, OrderClass::catalog_dependent, OrderClass::unresolved}) {
    const auto v = with_class(c);
    out << to_string(c) << " (" << v.size() << "): " << join(v) << '\n';
  }
  return out.str();
}

CoverageReport coverage_report(const ReportOptions& opts) {
  PairOptions pair_opts;
  pair_opts.catalog = opts.catalog;
  pair_opts.budget = opts.budget;
  pair_opts.threads = opts.threads;

  CoverageReport report;
  for (int n = 1; n < opts.max_n; n += 2) {
    OrderStatus s;
    s.n = n;
    s.published_resolved = contains(published_resolved_orders(), n) || contains(published_doptimal_orders(), n) ||
                       contains(published_miyamoto_orders(), n);
    s.published_unresolved = contains(published_unresolved_orders(), n);

    bool built = false;
    try {
      const RouteResult r = construct_order(static_cast<std::size_t>(4 * n), Method::automatic, pair_opts);
      const PropertyReport p = check_properties(r.construction.matrix);
      built = p.is_hadamard && p.is_symmetric;
      s.method = r.method;
    } catch (const Error&) {
      built = false;
    }

    if (built) {
      s.cls = OrderClass::constructed;
      if (s.published_unresolved)
        s.flags.push_back("DISCREPANCY: published as unresolved, but a symmetric Hadamard matrix of order " +
                          std::to_string(4 * n) + " was built and verified here by " + to_string(s.method));
    } else if (s.published_unresolved) {
      s.cls = OrderClass::unresolved;
    } else if (s.published_resolved) {
      s.cls = OrderClass::catalog_dependent;
    } else {
      s.cls = OrderClass::catalog_dependent;
      s.flags.push_back("in none of the published lists; taken as resolved by the external tables they cite");
    }
    if (s.published_resolved && s.published_unresolved)
      s.flags.push_back("this n is published both as resolved and as unresolved");
    report.orders.push_back(std::move(s));
  }
  return report;
}

}  // namespace propus
