#include "propus/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "propus/catalog.hpp"
#include "propus/constructions.hpp"
#include "propus/errors.hpp"
#include "propus/render.hpp"
#include "propus/report.hpp"
#include "propus/routes.hpp"
#include "propus/search.hpp"

namespace propus::cli {

namespace {

constexpr std::uint64_t kDefaultBudget = 200'000'000;

std::string_view trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
}

// First meaningful line starts with a catalog kind.
bool looks_like_catalog(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const std::string word(t.substr(0, t.find_first_of(" \t")));
    try {
      parse_search_kind(word);
      return true;
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  return false;
}

Catalog catalog_with(const std::string& extra) {
  Catalog cat = builtin_catalog();
  if (!extra.empty()) cat.merge(load_catalog_file(extra));
  return cat;
}

// Matrix a catalog entry stands for when rendered.
SignMatrix entry_matrix(const CatalogEntry& e) {
  switch (e.kind) {
    case SearchKind::propus:
      return p_array(PropusTriple::from_rows(e.rows[0], e.rows[1], e.rows[2]));
    case SearchKind::turyn:
    case SearchKind::conference:
      return conference_matrix(ConferencePair(e.rows[0], e.rows[1]));
    case SearchKind::doptimal: {
      // [[X, Y], [Y^T, -X^T]]
      const SignMatrix x = circulant(e.rows[0]);
      const SignMatrix y = circulant(e.rows[1]);
      const std::size_t n = e.n;
      std::vector<std::int8_t> v(4 * n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          v[i * 2 * n + j] = static_cast<std::int8_t>(x(i, j));
          v[i * 2 * n + n + j] = static_cast<std::int8_t>(y(i, j));
          v[(n + i) * 2 * n + j] = static_cast<std::int8_t>(y(j, i));
          v[(n + i) * 2 * n + n + j] = static_cast<std::int8_t>(-x(j, i));
        }
      return SignMatrix(2 * n, std::move(v));
    }
  }
  throw std::logic_error("entry_matrix: bad kind");
}

struct ConstructArgs {
  std::size_t order = 0;
  std::string method = "auto";
  std::string out;
  std::string format = "matrix";
  std::string catalog;
  std::uint64_t budget = kDefaultBudget;
  int threads = 0;
};

int do_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  const Method method = parse_method(a.method);
  const Catalog cat = catalog_with(a.catalog);
  PairOptions opts;
  opts.catalog = &cat;
  opts.budget = a.budget;
  opts.threads = a.threads;
  std::optional<RouteResult> built;
  try {
    built = construct_order(a.order, method, opts);
  } catch (const NotHadamard& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const Error& e) {
    err << "construct: " << e.what() << '\n';
    return kNothingFound;
  }
  const RouteResult& r = *built;
  const SignMatrix& h = r.construction.matrix;
  const PropertyReport p = check_properties(h);
  if (!p.is_hadamard || !p.is_symmetric) {
    err << "verification failed: " << p.describe() << '\n';
    return kVerifyFailed;
  }
  std::string text;
  if (a.format == "catalog" && r.ingredient) {
    text = serialize(*r.ingredient) + "\n";
  } else {
    if (a.format == "catalog") err << "note: " << to_string(r.method) << " has no catalog ingredient; writing the matrix\n";
    std::vector<std::string> comments = {"symmetric Hadamard matrix of order " + std::to_string(h.order()) + " by " +
                                         to_string(r.method)};
    if (r.ingredient) comments.push_back(serialize(*r.ingredient));
    text = format_matrix(h, comments);
  }
  write_text(a.out, text, out);
  err << "built order " << h.order() << " by " << to_string(r.method) << ": " << p.describe() << '\n';
  return kOk;
}

struct SearchArgs {
  std::string kind;
  std::size_t n = 0;
  std::size_t limit = 1;
  std::uint64_t budget = 0;
  bool canonical = false;
  int threads = 0;
};

int do_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  SearchSpec spec;
  spec.kind = parse_search_kind(a.kind);
  spec.n = a.n;
  spec.limit = a.limit;
  spec.budget = a.budget;
  spec.canonical_only = a.canonical;
  spec.threads = a.threads;
  const SearchResult res = search(spec);
  for (const auto& hit : res.hits) out << serialize(entry_from_hit(spec.kind, hit, "search")) << '\n';
  err << res.hits.size() << " hit(s), " << res.nodes << " nodes" << (res.exhausted ? ", budget exhausted" : "")
      << '\n';
  return res.hits.empty() ? kNothingFound : kOk;
}

int do_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  const std::string text = read_file(path);
  if (looks_like_catalog(text)) {
    const Catalog cat = load_catalog_text(text);
    for (const auto& e : cat.entries()) out << "ok " << serialize(e) << '\n';
    for (const auto& r : cat.rejected()) out << "REJECTED line " << r.line << ": " << r.reason << '\n';
    if (cat.entries().empty() && cat.rejected().empty()) {
      err << "verify: no entries in '" << path << "'\n";
      return kVerifyFailed;
    }
    return cat.rejected().empty() ? kOk : kVerifyFailed;
  }
  const auto mats = parse_matrix_text(text);
  if (mats.empty()) {
    err << "verify: no matrix in '" << path << "'\n";
    return kVerifyFailed;
  }
  bool ok = true;
  for (std::size_t k = 0; k < mats.size(); ++k) {
    const PropertyReport p = check_properties(mats[k]);
    out << "matrix " << k + 1 << " order " << mats[k].order() << ": " << p.describe() << '\n';
    ok = ok && (p.is_hadamard || p.is_conference);
  }
  return ok ? kOk : kVerifyFailed;
}

int do_render(const std::string& path, const std::string& image, std::ostream& err) {
  const std::string text = read_file(path);
  SignMatrix m;
  if (looks_like_catalog(text)) {
    const Catalog cat = load_catalog_text(text);
    if (cat.entries().empty()) {
      err << "render: no valid entry in '" << path << "'\n";
      return kVerifyFailed;
    }
    m = entry_matrix(cat.entries().front());
  } else {
    const auto mats = parse_matrix_text(text);
    if (mats.empty()) {
      err << "render: no matrix in '" << path << "'\n";
      return kVerifyFailed;
    }
    m = mats.front();
  }
  render_image(m, image);
  return kOk;
}

struct ReportArgs {
  int max_n = 200;
  std::uint64_t budget = 2'000'000;
  std::string catalog;
  int threads = 0;
};

int do_report(const ReportArgs& a, std::ostream& out) {
  const Catalog cat = catalog_with(a.catalog);
  ReportOptions opts;
  opts.max_n = a.max_n;
  opts.catalog = &cat;
  opts.budget = a.budget;
  opts.threads = a.threads;
  out << coverage_report(opts).render();
  return kOk;
}

}  // namespace

std::vector<SignMatrix> parse_matrix_text(std::string_view text) {
  std::vector<SignMatrix> out;
  std::vector<std::string> rows;
  std::size_t first_line = 0;
  auto flush = [&] {
    if (rows.empty()) return;
    for (const auto& r : rows)
      if (r.size() != rows.size())
        throw ParseError(first_line, "matrix starting here is not square (" + std::to_string(rows.size()) +
                                         " rows, a row of length " + std::to_string(r.size()) + ")");
    out.push_back(SignMatrix::from_strings(rows));
    rows.clear();
  };
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (!t.empty() && t.front() == '#') continue;
    if (t.empty()) {
      flush();
      continue;
    }
    if (t.find_first_not_of("+-0") != std::string_view::npos)
      throw ParseError(line_no, "matrix rows use only '+', '-' and '0'");
    if (rows.empty()) first_line = line_no;
    rows.emplace_back(t);
  }
  flush();
  return out;
}

std::string format_matrix(const SignMatrix& m, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  for (const auto& row : m.to_strings()) out += row + "\n";
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric propus-Hadamard matrices: construct, search, verify, render, report"};
  app.name("propus");
  app.require_subcommand(1, 1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a symmetric Hadamard matrix of a given order");
  construct->add_option("--order", ca.order, "Matrix order (a multiple of 4)")->required();
  construct->add_option("--method", ca.method, "auto|paley-turyn|conference|doptimal|three-equal|miyamoto|search")
      ->check(CLI::IsMember({"auto", "paley-turyn", "conference", "doptimal", "three-equal", "miyamoto", "search"}));
  construct->add_option("--out", ca.out, "Output file (default: standard output)");
  construct->add_option("--format", ca.format, "matrix|catalog")->check(CLI::IsMember({"matrix", "catalog"}));
  construct->add_option("--catalog", ca.catalog, "Extra catalog file merged over the built-in one");
  construct->add_option("--budget", ca.budget, "Search node cap per ingredient (0 = unlimited)");
  construct->add_option("--threads", ca.threads, "OpenMP threads (0 = runtime default)");

  SearchArgs sa;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive first-row search; prints catalog lines");
  search_cmd->add_option("--kind", sa.kind, "propus|turyn|conference|doptimal")
      ->required()
      ->check(CLI::IsMember({"propus", "turyn", "conference", "doptimal"}));
  search_cmd->add_option("--n", sa.n, "Circulant order")->required()->check(CLI::Range(1, 64));
  search_cmd->add_option("--limit", sa.limit, "Maximum number of results")->check(CLI::PositiveNumber);
  search_cmd->add_option("--budget", sa.budget, "Node cap (0 = unlimited)");
  search_cmd->add_flag("--canonical", sa.canonical, "One representative per negation/rotation orbit");
  search_cmd->add_option("--threads", sa.threads, "OpenMP threads (0 = runtime default)");

  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "Check a catalog or matrix file");
  verify->add_option("--file", verify_file, "Catalog or matrix text file")->required();

  std::string render_file;
  std::string render_out;
  auto* render = app.add_subcommand("render", "Write a PGM (P2) image of a matrix or catalog entry");
  render->add_option("--file", render_file, "Catalog or matrix text file")->required();
  render->add_option("--out", render_out, "Image path")->required();

  ReportArgs ra;
  auto* report = app.add_subcommand("report", "Coverage of odd n against the published order lists");
  report->add_option("--max-n", ra.max_n, "Report odd n below this bound")->check(CLI::Range(1, 2501));
  report->add_option("--budget", ra.budget, "Search node cap per ingredient");
  report->add_option("--catalog", ra.catalog, "Extra catalog file merged over the built-in one");
  report->add_option("--threads", ra.threads, "OpenMP threads (0 = runtime default)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    for (auto* sub : app.get_subcommands()) err << sub->help();
    return kUsage;
  }

  try {
    if (construct->parsed()) return do_construct(ca, out, err);
    if (search_cmd->parsed()) return do_search(sa, out, err);
    if (verify->parsed()) return do_verify(verify_file, out, err);
    if (render->parsed()) return do_render(render_file, render_out, err);
    if (report->parsed()) return do_report(ra, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace propus::cli
