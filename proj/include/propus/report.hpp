#pragma once

// Coverage of odd n (orders 4n) against the published order lists: resolved
// orders, the D-optimal orders, the two Miyamoto orders and the unresolved
// cases.

#include <cstdint>
#include <string>
#include <vector>

#include "propus/catalog.hpp"
#include "propus/routes.hpp"

namespace propus {

const std::vector<int>& published_resolved_orders();
const std::vector<int>& published_doptimal_orders();
const std::vector<int>& published_miyamoto_orders();
const std::vector<int>& published_unresolved_orders();

enum class OrderClass { constructed, catalog_dependent, unresolved };

std::string to_string(OrderClass c);

struct OrderStatus {
  int n = 0;
  OrderClass cls = OrderClass::unresolved;
  Method method = Method::automatic;  // route that built it, when constructed
  bool published_resolved = false;    // in the resolved, D-optimal or Miyamoto lists
  bool published_unresolved = false;  // in the unresolved list
  std::vector<std::string> flags;
};

struct ReportOptions {
  int max_n = 200;                   // odd n < max_n
  const Catalog* catalog = nullptr;  // nullptr selects builtin_catalog()
  std::uint64_t budget = 2'000'000;  // search node cap per ingredient
  int threads = 0;
};

struct CoverageReport {
  std::vector<OrderStatus> orders;

  std::vector<int> with_class(OrderClass c) const;
  // Orders carrying at least one flag.
  std::vector<int> flagged() const;
  std::string render() const;
};

// Every constructed entry was built and verified in this call.
CoverageReport coverage_report(const ReportOptions& opts = {});

}  // namespace propus
