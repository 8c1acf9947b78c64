#include "skolem/compose.hpp"

#include <algorithm>

#include "skolem/error.hpp"
#include "skolem/search.hpp"

namespace skolem {

ExistenceVerdict exists(const SeqKind& kind, int order) {
  ExistenceVerdict v;
  const int m = order;
  const int d = kind.defect;
  if (m < 1) return {false, true, "order must be positive"};
  const int r = m % 4;
  switch (kind.tag) {
    case KindTag::skolem:
      v.exists = r == 0 || r == 1;
      v.rule = "n = " + std::to_string(m) + " is " + (v.exists ? "" : "not ") + "0 or 1 mod 4";
      return v;
    case KindTag::hooked_skolem:
      v.exists = r == 2 || r == 3;
      v.rule = "n = " + std::to_string(m) + " is " + (v.exists ? "" : "not ") + "2 or 3 mod 4";
      return v;
    case KindTag::langford: {
      if (d < 1) return {false, true, "defect must be positive"};
      if (m < 2 * d - 1) {
        v.rule = "m = " + std::to_string(m) + " < 2d-1 = " + std::to_string(2 * d - 1);
        return v;
      }
      const bool odd = d % 2 == 1;
      v.exists = odd ? (r == 0 || r == 1) : (r == 0 || r == 3);
      v.rule = std::string("m >= 2d-1 and ") + (odd ? "d odd needs m = 0,1" : "d even needs m = 0,3") +
               " mod 4 (m mod 4 = " + std::to_string(r) + ")";
      return v;
    }
    case KindTag::hooked_langford: {
      if (d < 1) return {false, true, "defect must be positive"};
      const long long slack = static_cast<long long>(m) * (m - 2 * d + 1) + 2;
      if (slack < 0) {
        v.rule = "m(m-2d+1)+2 = " + std::to_string(slack) + " < 0";
        return v;
      }
      const bool odd = d % 2 == 1;
      v.exists = odd ? (r == 2 || r == 3) : (r == 1 || r == 2);
      v.rule = std::string("m(m-2d+1)+2 >= 0 and ") +
               (odd ? "d odd needs m = 2,3" : "d even needs m = 1,2") + " mod 4 (m mod 4 = " +
               std::to_string(r) + ")";
      return v;
    }
    case KindTag::p_extended_langford:
    case KindTag::modified_extended_langford:
      return {false, false, "no closed-form condition; use search"};
  }
  return v;
}

Sequence concatenate(const Sequence& s, const Sequence& langford) {
  require_valid(s);
  require_valid(langford);
  const SeqKind& sk = s.kind();
  const SeqKind& lk = langford.kind();
  if (!sk.is_skolem_family())
    throw InvalidInput("first operand must be a Skolem or hooked Skolem sequence, got " + sk.name());
  if (lk.tag != KindTag::langford && lk.tag != KindTag::hooked_langford)
    throw InvalidInput("second operand must be a Langford or hooked Langford sequence, got " +
                       lk.name());
  if (lk.defect != s.order() + 1)
    throw InvalidInput("defect mismatch: Langford defect " + std::to_string(lk.defect) +
                       " needs a Skolem sequence of order " + std::to_string(lk.defect - 1) +
                       ", got order " + std::to_string(s.order()));
  const bool s_hooked = sk.tag == KindTag::hooked_skolem;
  const bool l_hooked = lk.tag == KindTag::hooked_langford;
  if (s_hooked && l_hooked)
    throw InvalidInput("two hooked operands combine by interlacing, not concatenation");

  const int order = s.order() + langford.order();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(s.size() + langford.size()));
  const auto& a = s_hooked ? langford.entries() : s.entries();
  const auto& b = s_hooked ? s.entries() : langford.entries();
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  const SeqKind kind = (s_hooked || l_hooked) ? SeqKind::hooked_skolem() : SeqKind::skolem();
  Sequence result(std::move(out), kind, order);
  const auto report = validate(result);
  if (!report.ok()) throw VerificationFailed("concatenation is not valid: " + report.summary());
  return result;
}

Sequence interlace(const Sequence& hs, const Sequence& hl) {
  require_valid(hs);
  require_valid(hl);
  if (hs.kind().tag != KindTag::hooked_skolem)
    throw InvalidInput("interlace needs a hooked Skolem sequence, got " + hs.kind().name());
  if (hl.kind().tag != KindTag::hooked_langford)
    throw InvalidInput("interlace needs a hooked Langford sequence, got " + hl.kind().name());
  if (hl.kind().defect != hs.order() + 1)
    throw InvalidInput("defect mismatch: hooked Langford defect " +
                       std::to_string(hl.kind().defect) + " needs order " +
                       std::to_string(hl.kind().defect - 1) + ", got " +
                       std::to_string(hs.order()));

  const int l = hl.order();
  const int order = l + hs.order();
  std::vector<int> out(static_cast<std::size_t>(2 * order), 0);
  for (int p = 1; p <= hl.size(); ++p) out[static_cast<std::size_t>(p - 1)] = hl.at(p);
  // Reversed hs: entry j lands on position 2l + j - 1; its first entry fills
  // hl's hook, and its own hook (j = 2) sits on hl's last entry.
  const int len = hs.size();
  for (int j = 1; j <= len; ++j) {
    const int v = hs.at(len + 1 - j);
    if (v == 0) continue;
    const int pos = 2 * l + j - 1;
    int& slot = out[static_cast<std::size_t>(pos - 1)];
    if (slot != 0)
      throw VerificationFailed("interlace collision at position " + std::to_string(pos));
    slot = v;
  }
  Sequence result(std::move(out), SeqKind::skolem(), order);
  const auto report = validate(result);
  if (!report.ok()) throw VerificationFailed("interlaced sequence is not valid: " + report.summary());
  return result;
}

std::optional<Sequence> langford_search(int d, int l, bool hooked, std::uint64_t node_budget) {
  const SeqKind kind = hooked ? SeqKind::hooked_langford(d) : SeqKind::langford(d);
  return find_first(kind, l, node_budget);
}

ExtendResult extend_order(const Sequence& seed, const std::vector<int>& keep, int m,
                          std::uint64_t node_budget) {
  require_valid(seed);
  if (!seed.kind().is_skolem_family())
    throw InvalidInput("order extension needs a Skolem or hooked Skolem seed");
  const int n = seed.order();
  if (m < 3 * n + 1)
    throw InvalidInput("target order " + std::to_string(m) + " is below 3n+1 = " +
                       std::to_string(3 * n + 1));
  const auto seed_pivots = pivots(seed);
  for (int i : keep) {
    if (!std::binary_search(seed_pivots.begin(), seed_pivots.end(), i))
      throw InvalidInput(std::to_string(i) + " is not a pivot of the seed");
  }

  const int d = n + 1;
  const int l = m - n;
  const bool seed_hooked = seed.kind().tag == KindTag::hooked_skolem;
  const bool target_hooked = !(m % 4 == 0 || m % 4 == 1);
  // Skolem->Skolem and hooked->hooked use a plain Langford sequence; the two
  // mixed cases use a hooked one.
  const bool hooked_l = seed_hooked != target_hooked;
  const SeqKind lkind = hooked_l ? SeqKind::hooked_langford(d) : SeqKind::langford(d);
  const auto verdict = exists(lkind, l);
  if (!verdict.exists)
    throw Infeasible("no " + lkind.name() + " of order " + std::to_string(l) + ": " + verdict.rule);
  auto lang = find_first(lkind, l, node_budget);
  if (!lang)
    throw SearchExhausted("no " + lkind.name() + " of order " + std::to_string(l) + " found");

  std::optional<Sequence> out;
  std::string how;
  if (!seed_hooked) {
    out = concatenate(seed, *lang);
    how = "seed followed by " + lkind.name();
  } else if (!hooked_l) {
    out = concatenate(seed, *lang);
    how = lkind.name() + " followed by seed";
  } else {
    out = interlace(seed, *lang).reversed(SeqKind::skolem());
    how = "reversed interlace of seed and " + lkind.name();
  }
  const auto report = validate(*out);
  if (!report.ok()) throw VerificationFailed("extended sequence invalid: " + report.summary());

  const auto pv = pivots(*out);
  for (int i : keep) {
    if (!std::binary_search(pv.begin(), pv.end(), i))
      throw Infeasible("pivot " + std::to_string(i) + " lost when extending to order " +
                       std::to_string(m));
  }
  return ExtendResult{*out, *lang, pv, how};
}

Sequence modify_extended(const Sequence& els, int extra, bool hooked) {
  require_valid(els);
  if (els.kind().tag != KindTag::p_extended_langford)
    throw InvalidInput("expected a p-extended Langford sequence, got " + els.kind().name());
  const int p = els.kind().hook;
  std::vector<int> e = els.entries();
  e[static_cast<std::size_t>(p - 1)] = extra;
  if (hooked) e.push_back(0);
  e.push_back(extra);
  const int len = static_cast<int>(e.size());
  if (len - p != extra)
    throw InvalidInput("extra symbol " + std::to_string(extra) + " cannot sit at positions " +
                       std::to_string(p) + " and " + std::to_string(len));
  Sequence out(std::move(e), SeqKind::modified_extended(els.kind().defect, p, extra, hooked),
               els.order());
  const auto report = validate(out);
  if (!report.ok()) throw VerificationFailed("modified sequence invalid: " + report.summary());
  return out;
}

std::optional<Sequence> extended_langford_search(int d, int m, int p, std::optional<int> extra,
                                                 bool hooked, std::uint64_t node_budget) {
  if (d < 1 || m < 1) throw InvalidInput("defect and order must be positive");
  if (p < 1 || p > 2 * m + 1)
    throw InvalidInput("hook position " + std::to_string(p) + " outside 1.." +
                       std::to_string(2 * m + 1));
  SeqKind kind = SeqKind::p_extended(d, p);
  if (extra) {
    kind = SeqKind::modified_extended(d, p, *extra, hooked);
    if (kind.length(m) - p != *extra)
      throw InvalidInput("extra symbol " + std::to_string(*extra) + " at position " +
                         std::to_string(p) + " cannot reach the last slot " +
                         std::to_string(kind.length(m)));
    if (*extra >= d && *extra < d + m)
      throw InvalidInput("extra symbol must lie outside the Langford differences");
  }
  return find_first(kind, m, node_budget);
}

}  // namespace skolem
