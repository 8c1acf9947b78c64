#pragma once

// Bundled table of (hooked) Skolem sequences with three usable pivots per
// windmill type, plus the mixed-form triples used for Type (k).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "skolem/sequence.hpp"

namespace skolem {

struct CatalogEntry {
  int table = 0;   // 1..11 for Types (a)..(k); 0 for the seed rows
  int row = 0;     // 1-based position within its table
  int line = 0;    // line in the file
  int order = 0;
  std::string text;
  std::string declared;  // raw pivots-or-triples column
  char type = '?';
  std::vector<int> pivots;                      // empty for Type (k)
  std::vector<std::array<int, 3>> triples;      // Type (k) only

  bool hooked() const { return static_cast<int>(text.size()) == 2 * order + 1; }
  SeqKind kind() const { return hooked() ? SeqKind::hooked_skolem() : SeqKind::skolem(); }
  // Parses the sequence text; throws ParseError on malformed text.
  Sequence sequence() const;
  std::string where() const;  // "table T row R (n=N)"
};

class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {}

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Table rows (table >= 1) of the given type, ascending by order.
  std::vector<const CatalogEntry*> rows_for(char type) const;
  const CatalogEntry* find(char type, int order) const;
  // The table-0 row a type's order extension starts from.
  const CatalogEntry* seed_for(char type) const;
  int max_order(char type) const;

 private:
  std::vector<CatalogEntry> entries_;
};

// Throws ParseError (with the line number) on structurally malformed rows.
// Semantic problems are left for catalog_verify.
Catalog parse_catalog(const std::string& content);
Catalog load_catalog(const std::string& path);

// SKOLEM_CATALOG if set, else the source-tree copy, else the installed copy.
std::string default_catalog_path();

// Loaded once from the path last passed to set_catalog_path (or the default).
const Catalog& bundled_catalog();
void set_catalog_path(const std::string& path);

struct CatalogIssue {
  int table = 0;
  int row = 0;
  int line = 0;
  std::string message;
};

struct CatalogReport {
  std::size_t rows_checked = 0;
  std::vector<CatalogIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Validates every sequence, confirms each declared pivot against the pivot
// inequality, and for Type (k) rows re-derives every declared triple from the
// sequence's pairs.
CatalogReport catalog_verify(const Catalog& catalog);

}  // namespace skolem
