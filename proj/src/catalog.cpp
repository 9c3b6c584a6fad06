#include "propus/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "propus/errors.hpp"

namespace propus {

namespace detail {
extern const std::string_view kBuiltinCatalogText;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool skippable(std::string_view line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

}  // namespace

std::string serialize(const CatalogEntry& entry) {
  std::string out = to_string(entry.kind) + " " + std::to_string(entry.n);
  for (const auto& r : entry.rows) out += " " + r.to_string();
  if (!entry.provenance.empty()) out += " # " + entry.provenance;
  return out;
}

CatalogEntry parse_entry(std::string_view line, std::size_t line_no) {
  std::string_view body = line;
  std::string provenance;
  if (const auto hash = line.find('#'); hash != std::string_view::npos) {
    body = line.substr(0, hash);
    provenance = std::string(trim(line.substr(hash + 1)));
  }
  const auto tokens = split(trim(body));
  if (tokens.size() < 2) throw ParseError(line_no, "expected '<kind> <n> <rows...>'");

  CatalogEntry e;
  try {
    e.kind = parse_search_kind(std::string(tokens[0]));
  } catch (const std::invalid_argument&) {
    throw ParseError(line_no, "unknown kind '" + std::string(tokens[0]) + "'");
  }

  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(tokens[1].data(), tokens[1].data() + tokens[1].size(), n);
  if (ec != std::errc{} || ptr != tokens[1].data() + tokens[1].size() || n == 0)
    throw ParseError(line_no, "bad order '" + std::string(tokens[1]) + "'");
  e.n = n;

  const std::size_t want = slot_count(e.kind);
  if (tokens.size() - 2 != want)
    throw ParseError(line_no, to_string(e.kind) + " needs " + std::to_string(want) + " rows, got " +
                                  std::to_string(tokens.size() - 2));
  for (std::size_t k = 2; k < tokens.size(); ++k) {
    const auto tok = tokens[k];
    if (tok.size() != n)
      throw ParseError(line_no, "row '" + std::string(tok) + "' has length " + std::to_string(tok.size()) +
                                    ", expected " + std::to_string(n));
    if (tok.find_first_not_of("+-0") != std::string_view::npos)
      throw ParseError(line_no, "illegal character in row '" + std::string(tok) + "'");
    e.rows.push_back(FirstRow::parse(tok));
  }
  e.provenance = std::move(provenance);
  return e;
}

bool verify_entry(const CatalogEntry& entry) {
  if (entry.rows.size() != slot_count(entry.kind)) return false;
  for (const auto& r : entry.rows)
    if (r.size() != entry.n) return false;
  return satisfies_identity(entry.kind, entry.rows);
}

CatalogEntry entry_from_hit(SearchKind kind, const SearchHit& hit, std::string provenance) {
  CatalogEntry e;
  e.kind = kind;
  e.n = hit.rows.empty() ? 0 : hit.rows.front().size();
  e.rows = hit.rows;
  e.provenance = std::move(provenance);
  return e;
}

std::vector<const CatalogEntry*> Catalog::find(SearchKind kind, std::size_t n) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_)
    if (e.kind == kind && e.n == n) out.push_back(&e);
  return out;
}

bool Catalog::add(CatalogEntry entry, std::size_t line, const std::string& text) {
  if (!verify_entry(entry)) {
    rejected_.push_back({line, text, "rows fail the " + to_string(entry.kind) + " Gram identity"});
    return false;
  }
  const bool dup = std::any_of(entries_.begin(), entries_.end(), [&](const CatalogEntry& e) {
    return e.kind == entry.kind && e.n == entry.n && e.rows == entry.rows;
  });
  if (!dup) entries_.push_back(std::move(entry));
  return true;
}

void Catalog::merge(const Catalog& other) {
  for (const auto& e : other.entries_) add(e, 0, serialize(e));
  rejected_.insert(rejected_.end(), other.rejected_.begin(), other.rejected_.end());
}

Catalog load_catalog(std::istream& in) {
  Catalog cat;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    try {
      cat.add(parse_entry(line, line_no), line_no, line);
    } catch (const ParseError& err) {
      cat.rejected_.push_back({line_no, line, err.what()});
    }
  }
  return cat;
}

Catalog load_catalog_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_catalog(in);
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read catalog '" + path + "'");
  return load_catalog(in);
}

std::string_view builtin_catalog_text() { return detail::kBuiltinCatalogText; }

const Catalog& builtin_catalog() {
  static const Catalog cat = load_catalog_text(detail::kBuiltinCatalogText);
  return cat;
}

}  // namespace propus
