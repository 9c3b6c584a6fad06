#pragma once

// Line-oriented first-row catalog:
//
//   <kind> <n> <row>[ <row>[ <row>]] # <provenance>
//
// kind is propus (rows A B D), turyn, conference or doptimal (rows X Y);
// rows are strings over {+,-,0} of length n. Blank lines and lines whose
// first non-blank character is '#' are ignored. Every entry is checked
// against its kind's Gram identity on load; failures are reported, never kept.

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "propus/matrix.hpp"
#include "propus/search.hpp"

namespace propus {

struct CatalogEntry {
  SearchKind kind = SearchKind::propus;
  std::size_t n = 0;
  std::vector<FirstRow> rows;
  std::string provenance;

  bool operator==(const CatalogEntry&) const = default;
};

std::string serialize(const CatalogEntry& entry);

// Structural parse only (no Gram check). Throws ParseError carrying line_no.
CatalogEntry parse_entry(std::string_view line, std::size_t line_no = 1);

bool verify_entry(const CatalogEntry& entry);

CatalogEntry entry_from_hit(SearchKind kind, const SearchHit& hit, std::string provenance);

struct Rejection {
  std::size_t line = 0;
  std::string text;
  std::string reason;
};

class Catalog {
 public:
  Catalog() = default;

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  const std::vector<Rejection>& rejected() const noexcept { return rejected_; }
  bool empty() const noexcept { return entries_.empty(); }

  // Entries of this kind and order, in load order.
  std::vector<const CatalogEntry*> find(SearchKind kind, std::size_t n) const;

  // Entries of `other` not already present are appended; rejections too.
  void merge(const Catalog& other);

  friend Catalog load_catalog(std::istream& in);

 private:
  // Verifies; duplicates (same kind, n and rows) are dropped.
  bool add(CatalogEntry entry, std::size_t line, const std::string& text);

  std::vector<CatalogEntry> entries_;
  std::vector<Rejection> rejected_;
};

Catalog load_catalog(std::istream& in);
Catalog load_catalog_text(std::string_view text);
// Throws std::runtime_error if the file cannot be opened.
Catalog load_catalog_file(const std::string& path);

// Rows produced by the search module during development, shipped in the
// library (data/builtin_catalog.txt).
const Catalog& builtin_catalog();
std::string_view builtin_catalog_text();

}  // namespace propus
