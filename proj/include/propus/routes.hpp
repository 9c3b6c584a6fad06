#pragma once

// Order-driven dispatch over the construction routes, shared by the CLI and
// the coverage report.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "propus/catalog.hpp"
#include "propus/constructions.hpp"

namespace propus {

enum class Method { automatic, paley_turyn, conference, doptimal, three_equal, miyamoto, search };

std::string to_string(Method m);
// Throws std::invalid_argument for an unknown name.
Method parse_method(const std::string& name);

// Cheapest first; `search` is never tried automatically.
const std::vector<Method>& auto_methods();

struct RouteResult {
  Method method = Method::automatic;
  // First rows of the ingredient (Turyn pair, D-optimal pair, propus triple);
  // absent for three-equal.
  std::optional<CatalogEntry> ingredient;
  Construction construction;
};

// Builds a symmetric Hadamard matrix of the given order by one route.
// Throws UnsupportedOrder when the route cannot produce this order, NotFound
// or NotInCatalog when an ingredient is missing, and NotFound listing every
// attempt for Method::automatic.
RouteResult construct_order(std::size_t order, Method method, const PairOptions& opts = {});

}  // namespace propus
