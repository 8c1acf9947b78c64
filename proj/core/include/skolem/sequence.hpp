#pragma once

// Skolem-type sequences: Skolem, hooked Skolem, Langford, hooked Langford,
// p-extended Langford and the modified extended Langford sequences used when
// attaching vanes. Positions are 1-based everywhere.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skolem {

enum class KindTag {
  skolem,
  hooked_skolem,
  langford,
  hooked_langford,
  p_extended_langford,
  // A p-extended Langford sequence whose hook is filled with an extra symbol
  // whose second copy sits in an appended slot. With `hooked` set, one more
  // empty slot sits before that appended copy.
  modified_extended_langford,
};

struct SeqKind {
  KindTag tag = KindTag::skolem;
  int defect = 1;  // smallest Langford difference; 1 for Skolem kinds
  int hook = 0;    // p for the extended kinds
  int extra = 0;   // extra symbol of the modified kind
  bool hooked = false;  // modified kind only

  static SeqKind skolem() { return {KindTag::skolem, 1, 0, 0, false}; }
  static SeqKind hooked_skolem() { return {KindTag::hooked_skolem, 1, 0, 0, false}; }
  static SeqKind langford(int d) { return {KindTag::langford, d, 0, 0, false}; }
  static SeqKind hooked_langford(int d) { return {KindTag::hooked_langford, d, 0, 0, false}; }
  static SeqKind p_extended(int d, int p) {
    return {KindTag::p_extended_langford, d, p, 0, false};
  }
  static SeqKind modified_extended(int d, int p, int extra, bool hooked = false) {
    return {KindTag::modified_extended_langford, d, p, extra, hooked};
  }

  bool is_skolem_family() const {
    return tag == KindTag::skolem || tag == KindTag::hooked_skolem;
  }
  // True when the last-but-one slot is the hook (hooked Skolem / Langford).
  bool has_trailing_hook() const {
    return tag == KindTag::hooked_skolem || tag == KindTag::hooked_langford;
  }

  // Length of a sequence of this kind with `order` Langford differences.
  int length(int order) const;
  // 1-based position that must hold 0, or 0 when there is none.
  int hook_position(int order) const;
  // Every difference that must appear, ascending.
  std::vector<int> differences(int order) const;

  std::string name() const;
  friend bool operator==(const SeqKind&, const SeqKind&) = default;
};

// Parses CLI-style kind names: skolem, hooked-skolem, langford, hooked-langford,
// extended-langford. Defect and hook are supplied separately.
SeqKind kind_from_name(std::string_view name, int defect = 1, int hook = 0);

class Sequence {
 public:
  // Stores the entries as given; call validate() to check the definition.
  Sequence(std::vector<int> entries, SeqKind kind, int order);

  const std::vector<int>& entries() const { return entries_; }
  const SeqKind& kind() const { return kind_; }
  int order() const { return order_; }
  int size() const { return static_cast<int>(entries_.size()); }
  // 1-based access.
  int at(int position) const { return entries_.at(static_cast<std::size_t>(position - 1)); }

  Sequence reversed(SeqKind kind) const;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<int> entries_;
  SeqKind kind_;
  int order_;
};

struct Violation {
  int symbol = 0;    // 0 when the violation is not tied to a symbol
  int position = 0;  // 0 when not tied to a position
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const Sequence& seq);

// Throws InvalidInput with the first violation when `seq` is not valid.
void require_valid(const Sequence& seq);

struct PositionPair {
  int first = 0;
  int second = 0;
  friend bool operator==(const PositionPair&, const PositionPair&) = default;
};

struct PairSet {
  int order = 0;
  int defect = 1;
  std::map<int, PositionPair> pairs;  // difference -> (a_i, b_i)

  const PositionPair& at(int difference) const { return pairs.at(difference); }
  bool contains(int difference) const { return pairs.count(difference) != 0; }
};

PairSet pairs(const Sequence& seq);

// Differences i whose pair can be moved up by i: b_i + i <= 2n for Skolem
// sequences, 2n != b_i + i <= 2n + 1 for hooked ones.
std::vector<int> pivots(const Sequence& seq);

// Compact text form: 1-9, A-Z for 10-35, 0 for the hook. Sequences using a
// symbol above 35 print as comma-separated decimals.
std::string to_text(const Sequence& seq);
std::string symbol_text(int symbol);
int symbol_value(char c);

// The order is derived from the text length and kind; an explicit order is
// checked against it and bounds the symbols.
Sequence parse_sequence(std::string_view text, const SeqKind& kind,
                        std::optional<int> order = std::nullopt);

}  // namespace skolem
