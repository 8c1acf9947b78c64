#include "skolem/sequence.hpp"

#include <algorithm>
#include <sstream>

#include "skolem/error.hpp"

namespace skolem {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::search_exhausted: return "search-exhausted";
    case ErrorKind::verification_failed: return "verification-failed";
  }
  return "error";
}

int SeqKind::length(int order) const {
  switch (tag) {
    case KindTag::skolem:
    case KindTag::langford:
      return 2 * order;
    case KindTag::hooked_skolem:
    case KindTag::hooked_langford:
    case KindTag::p_extended_langford:
      return 2 * order + 1;
    case KindTag::modified_extended_langford:
      return 2 * order + (hooked ? 3 : 2);
  }
  return 0;
}

int SeqKind::hook_position(int order) const {
  switch (tag) {
    case KindTag::hooked_skolem:
    case KindTag::hooked_langford:
      return 2 * order;
    case KindTag::p_extended_langford:
      return hook;
    case KindTag::modified_extended_langford:
      return hooked ? 2 * order + 2 : 0;
    default:
      return 0;
  }
}

std::vector<int> SeqKind::differences(int order) const {
  std::vector<int> out;
  if (tag == KindTag::modified_extended_langford) out.push_back(extra);
  for (int k = defect; k < defect + order; ++k) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

std::string SeqKind::name() const {
  std::ostringstream os;
  switch (tag) {
    case KindTag::skolem: os << "skolem"; break;
    case KindTag::hooked_skolem: os << "hooked-skolem"; break;
    case KindTag::langford: os << "langford(d=" << defect << ")"; break;
    case KindTag::hooked_langford: os << "hooked-langford(d=" << defect << ")"; break;
    case KindTag::p_extended_langford:
      os << "extended-langford(d=" << defect << ",p=" << hook << ")";
      break;
    case KindTag::modified_extended_langford:
      os << (hooked ? "hooked-" : "") << "modified-extended-langford(d=" << defect
         << ",p=" << hook << ",extra=" << extra << ")";
      break;
  }
  return os.str();
}

SeqKind kind_from_name(std::string_view name, int defect, int hook) {
  if (name == "skolem") return SeqKind::skolem();
  if (name == "hooked-skolem") return SeqKind::hooked_skolem();
  if (name == "langford") return SeqKind::langford(defect);
  if (name == "hooked-langford") return SeqKind::hooked_langford(defect);
  if (name == "extended-langford" || name == "p-extended-langford")
    return SeqKind::p_extended(defect, hook);
  throw ParseError("unknown sequence kind '" + std::string(name) + "'");
}

Sequence::Sequence(std::vector<int> entries, SeqKind kind, int order)
    : entries_(std::move(entries)), kind_(kind), order_(order) {}

Sequence Sequence::reversed(SeqKind kind) const {
  std::vector<int> rev(entries_.rbegin(), entries_.rend());
  return Sequence(std::move(rev), kind, order_);
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].message;
  }
  return os.str();
}

ValidationReport validate(const Sequence& seq) {
  ValidationReport report;
  auto fail = [&](int symbol, int position, std::string msg) {
    report.violations.push_back({symbol, position, std::move(msg)});
  };

  const SeqKind& kind = seq.kind();
  const int order = seq.order();
  if (seq.entries().empty()) {
    fail(0, 0, "sequence is empty");
    return report;
  }
  if (order < 1) {
    fail(0, 0, "order must be positive");
    return report;
  }
  if (kind.defect < 1) {
    fail(0, 0, "defect must be positive");
    return report;
  }
  const int expected_len = kind.length(order);
  if (seq.size() != expected_len) {
    std::ostringstream os;
    os << "length " << seq.size() << " but " << kind.name() << " of order " << order
       << " needs " << expected_len;
    fail(0, 0, os.str());
    return report;
  }

  const int hook = kind.hook_position(order);
  if (kind.tag == KindTag::p_extended_langford && (hook < 1 || hook > expected_len)) {
    fail(0, hook, "hook position " + std::to_string(hook) + " outside the sequence");
    return report;
  }
  if (hook != 0 && seq.at(hook) != 0) {
    fail(seq.at(hook), hook,
         "position " + std::to_string(hook) + " must be the hook (0), found " +
             std::to_string(seq.at(hook)));
  }

  const std::vector<int> diffs = kind.differences(order);
  std::map<int, std::vector<int>> seen;
  for (int pos = 1; pos <= seq.size(); ++pos) {
    const int v = seq.at(pos);
    if (v == 0) {
      if (pos != hook)
        fail(0, pos, "empty slot (0) at position " + std::to_string(pos) + " is not the hook");
      continue;
    }
    if (v < 0 || !std::binary_search(diffs.begin(), diffs.end(), v)) {
      fail(v, pos, "symbol " + std::to_string(v) + " at position " + std::to_string(pos) +
                       " is outside the difference set");
      continue;
    }
    seen[v].push_back(pos);
  }

  for (int k : diffs) {
    auto it = seen.find(k);
    const std::size_t count = it == seen.end() ? 0 : it->second.size();
    if (count != 2) {
      fail(k, 0, "symbol " + std::to_string(k) + " occurs " + std::to_string(count) +
                     " times, expected 2");
      continue;
    }
    const int gap = it->second[1] - it->second[0];
    if (gap != k) {
      fail(k, it->second[0],
           "symbol " + std::to_string(k) + "'s positions " + std::to_string(it->second[0]) +
               " and " + std::to_string(it->second[1]) + " differ by " + std::to_string(gap));
    }
  }

  if (kind.tag == KindTag::modified_extended_langford) {
    auto it = seen.find(kind.extra);
    if (it != seen.end() && it->second.size() == 2 &&
        (it->second[0] != kind.hook || it->second[1] != expected_len)) {
      fail(kind.extra, it->second[0],
           "extra symbol must sit at positions " + std::to_string(kind.hook) + " and " +
               std::to_string(expected_len));
    }
  }
  return report;
}

void require_valid(const Sequence& seq) {
  auto report = validate(seq);
  if (!report.ok())
    throw InvalidInput("invalid " + seq.kind().name() + ": " + report.violations.front().message);
}

PairSet pairs(const Sequence& seq) {
  require_valid(seq);
  PairSet out;
  out.order = seq.order();
  out.defect = seq.kind().defect;
  for (int pos = 1; pos <= seq.size(); ++pos) {
    const int v = seq.at(pos);
    if (v == 0) continue;
    auto [it, fresh] = out.pairs.try_emplace(v, PositionPair{pos, 0});
    if (!fresh) it->second.second = pos;
  }
  return out;
}

std::vector<int> pivots(const Sequence& seq) {
  const auto tag = seq.kind().tag;
  if (tag != KindTag::skolem && tag != KindTag::hooked_skolem)
    throw InvalidInput("pivots are defined for Skolem and hooked Skolem sequences only, got " +
                       seq.kind().name());
  const PairSet ps = pairs(seq);
  const int two_n = 2 * seq.order();
  std::vector<int> out;
  for (const auto& [i, pr] : ps.pairs) {
    const int reach = pr.second + i;
    const bool ok = tag == KindTag::skolem ? reach <= two_n
                                           : (reach <= two_n + 1 && reach != two_n);
    if (ok) out.push_back(i);
  }
  return out;
}

std::string symbol_text(int symbol) {
  if (symbol >= 0 && symbol <= 9) return std::string(1, static_cast<char>('0' + symbol));
  if (symbol >= 10 && symbol <= 35) return std::string(1, static_cast<char>('A' + symbol - 10));
  return std::to_string(symbol);
}

int symbol_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

std::string to_text(const Sequence& seq) {
  const auto& e = seq.entries();
  const bool wide = std::any_of(e.begin(), e.end(), [](int v) { return v > 35; });
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (wide) {
      if (i) out += ',';
      out += std::to_string(e[i]);
    } else {
      out += symbol_text(e[i]);
    }
  }
  return out;
}

namespace {

std::vector<int> parse_entries(std::string_view text) {
  std::vector<int> entries;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(start, end - start);
      if (tok.empty()) throw ParseError("empty entry in comma-separated sequence");
      int v = 0;
      for (char c : tok) {
        if (c < '0' || c > '9')
          throw ParseError("bad character '" + std::string(1, c) + "' in sequence");
        v = v * 10 + (c - '0');
        if (v > 1000000) throw ParseError("sequence entry too large");
      }
      entries.push_back(v);
      start = end + 1;
    }
    return entries;
  }
  for (char c : text) {
    const int v = symbol_value(c);
    if (v < 0) throw ParseError("bad character '" + std::string(1, c) + "' in sequence");
    entries.push_back(v);
  }
  return entries;
}

int order_from_length(const SeqKind& kind, int len) {
  switch (kind.tag) {
    case KindTag::skolem:
    case KindTag::langford:
      if (len % 2 != 0) throw ParseError(kind.name() + " needs an even length, got " +
                                         std::to_string(len));
      return len / 2;
    case KindTag::hooked_skolem:
    case KindTag::hooked_langford:
    case KindTag::p_extended_langford:
      if (len % 2 != 1) throw ParseError(kind.name() + " needs an odd length, got " +
                                         std::to_string(len));
      return (len - 1) / 2;
    case KindTag::modified_extended_langford: {
      const int base = len - (kind.hooked ? 3 : 2);
      if (base < 0 || base % 2 != 0)
        throw ParseError(kind.name() + " has an impossible length " + std::to_string(len));
      return base / 2;
    }
  }
  return 0;
}

}  // namespace

Sequence parse_sequence(std::string_view text, const SeqKind& kind, std::optional<int> order) {
  if (text.empty()) throw ParseError("empty sequence text");
  std::vector<int> entries = parse_entries(text);
  const int len = static_cast<int>(entries.size());
  const int n = order_from_length(kind, len);
  if (order && *order != n)
    throw ParseError("length " + std::to_string(len) + " does not match order " +
                     std::to_string(*order) + " for " + kind.name());
  if (n < 1) throw ParseError("sequence too short for " + kind.name());

  const int hook = kind.hook_position(n);
  const std::vector<int> diffs = kind.differences(n);
  for (int pos = 1; pos <= len; ++pos) {
    const int v = entries[static_cast<std::size_t>(pos - 1)];
    if (v == 0 && pos != hook)
      throw ParseError("hook (0) at position " + std::to_string(pos) +
                       " is not a legal hook position for " + kind.name());
    if (v != 0 && !std::binary_search(diffs.begin(), diffs.end(), v))
      throw ParseError("symbol " + std::to_string(v) + " out of range for " + kind.name() +
                       " of order " + std::to_string(n));
  }
  return Sequence(std::move(entries), kind, n);
}

}  // namespace skolem
