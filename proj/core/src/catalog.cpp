#include "skolem/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include "skolem/blocks.hpp"
#include "skolem/error.hpp"

namespace skolem {

Sequence CatalogEntry::sequence() const { return parse_sequence(text, kind(), order); }

std::string CatalogEntry::where() const {
  return "table " + std::to_string(table) + " row " + std::to_string(row) + " (n=" +
         std::to_string(order) + ")";
}

std::vector<const CatalogEntry*> Catalog::rows_for(char type) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_) {
    if (e.table >= 1 && e.type == type) out.push_back(&e);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CatalogEntry* a, const CatalogEntry* b) { return a->order < b->order; });
  return out;
}

const CatalogEntry* Catalog::find(char type, int order) const {
  for (const auto& e : entries_) {
    if (e.table >= 1 && e.type == type && e.order == order) return &e;
  }
  return nullptr;
}

const CatalogEntry* Catalog::seed_for(char type) const {
  for (const auto& e : entries_) {
    if (e.table == 0 && e.type == type) return &e;
  }
  return nullptr;
}

int Catalog::max_order(char type) const {
  int best = 0;
  for (const auto& e : entries_) {
    if (e.table >= 1 && e.type == type) best = std::max(best, e.order);
  }
  return best;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

int parse_int(const std::string& tok, int line) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("catalog line " + std::to_string(line) + ": expected a number, got '" + tok + "'");
  return std::atoi(tok.c_str());
}

}  // namespace

Catalog parse_catalog(const std::string& content) {
  std::vector<CatalogEntry> entries;
  std::map<int, int> rows_in_table;
  std::istringstream in(content);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw[0] == '#') continue;
    const auto cols = split(raw, '\t');
    if (cols.size() != 5)
      throw ParseError("catalog line " + std::to_string(line) + ": expected 5 tab-separated columns, got " +
                       std::to_string(cols.size()));
    CatalogEntry e;
    e.line = line;
    e.table = parse_int(cols[0], line);
    e.order = parse_int(cols[1], line);
    e.text = cols[2];
    e.declared = cols[3];
    if (cols[4].size() != 1 || cols[4][0] < 'a' || cols[4][0] > 'k')
      throw ParseError("catalog line " + std::to_string(line) + ": type must be a letter a..k");
    e.type = cols[4][0];
    e.row = ++rows_in_table[e.table];

    if (e.type == 'k') {
      for (const auto& t : split(e.declared, ';')) {
        const auto xs = split(t, ',');
        if (xs.size() != 3)
          throw ParseError("catalog line " + std::to_string(line) + ": bad triple '" + t + "'");
        e.triples.push_back({parse_int(xs[0], line), parse_int(xs[1], line), parse_int(xs[2], line)});
      }
    } else {
      for (const auto& p : split(e.declared, ',')) {
        const int v = p.size() == 1 ? symbol_value(p[0]) : -1;
        if (v < 1)
          throw ParseError("catalog line " + std::to_string(line) + ": bad pivot '" + p + "'");
        e.pivots.push_back(v);
      }
    }
    entries.push_back(std::move(e));
  }
  return Catalog(std::move(entries));
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open catalog '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

std::string default_catalog_path() {
  if (const char* env = std::getenv("SKOLEM_CATALOG")) {
    if (*env) return env;
  }
  std::error_code ec;
  if (std::filesystem::exists(SKOLEM_SOURCE_CATALOG, ec)) return SKOLEM_SOURCE_CATALOG;
  return SKOLEM_INSTALLED_CATALOG;
}

namespace {

std::mutex catalog_mutex;
std::string catalog_path_override;
std::unique_ptr<Catalog> catalog_cache;

}  // namespace

const Catalog& bundled_catalog() {
  std::lock_guard<std::mutex> lock(catalog_mutex);
  if (!catalog_cache) {
    const std::string path =
        catalog_path_override.empty() ? default_catalog_path() : catalog_path_override;
    catalog_cache = std::make_unique<Catalog>(load_catalog(path));
  }
  return *catalog_cache;
}

void set_catalog_path(const std::string& path) {
  std::lock_guard<std::mutex> lock(catalog_mutex);
  catalog_path_override = path;
  catalog_cache.reset();
}

namespace {

void verify_triples(const CatalogEntry& e, const Sequence& seq, std::vector<std::string>& problems) {
  const PairSet ps = pairs(seq);
  const int n = e.order;
  if (static_cast<int>(e.triples.size()) != n) {
    problems.push_back("expected " + std::to_string(n) + " triples, found " +
                       std::to_string(e.triples.size()));
    return;
  }
  std::set<int> used;
  std::vector<BlockTriple> blocks;
  for (const auto& t : e.triples) {
    auto b = identify_block(t, ps, n);
    if (!b) {
      problems.push_back("triple " + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                         std::to_string(t[2]) + " is not built from any pair of the sequence");
      continue;
    }
    if (!used.insert(b->difference).second)
      problems.push_back("difference " + std::to_string(b->difference) + " used twice");
    blocks.push_back(*b);
  }
  if (problems.empty() && !check_heffter(blocks, n, e.hooked()))
    problems.push_back("triples do not cover the required differences");
}

}  // namespace

CatalogReport catalog_verify(const Catalog& catalog) {
  CatalogReport report;
  for (const auto& e : catalog.entries()) {
    ++report.rows_checked;
    std::vector<std::string> problems;
    try {
      const Sequence seq = e.sequence();
      const auto v = validate(seq);
      for (const auto& viol : v.violations) problems.push_back(viol.message);
      if (v.ok()) {
        if (e.type == 'k') {
          verify_triples(e, seq, problems);
        } else {
          const PairSet ps = pairs(seq);
          const int two_n = 2 * e.order;
          for (int i : e.pivots) {
            if (!ps.contains(i)) {
              problems.push_back("declared pivot " + std::to_string(i) + " is not a difference");
              continue;
            }
            const int reach = ps.at(i).second + i;
            const bool ok = e.hooked() ? (reach <= two_n + 1 && reach != two_n) : reach <= two_n;
            if (!ok)
              problems.push_back("declared pivot " + std::to_string(i) + " fails: b+i = " +
                                 std::to_string(reach));
          }
        }
      }
    } catch (const Error& ex) {
      problems.push_back(ex.what());
    }
    for (auto& p : problems) report.issues.push_back({e.table, e.row, e.line, e.where() + ": " + p});
  }
  return report;
}

}  // namespace skolem
