#include "skolem/labeller.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "skolem/catalog.hpp"
#include "skolem/compose.hpp"
#include "skolem/error.hpp"
#include "skolem/search.hpp"

namespace skolem {

namespace {

struct Owner {
  AttachDescriptor::Host host;
  int index;
  int slot;
};

void set_why(std::string* why, std::string msg) {
  if (why) *why = std::move(msg);
}

}  // namespace

std::optional<DerivedWindmill> derive_windmill(const std::vector<BlockTriple>& blocks,
                                               int centre_label, std::string* why) {
  const int n = static_cast<int>(blocks.size());
  if (n == 0) {
    set_why(why, "no triples");
    return std::nullopt;
  }
  std::set<int> all;
  for (const auto& b : blocks) all.insert(b.values.begin(), b.values.end());
  if (static_cast<int>(all.size()) != 2 * n + 1) {
    set_why(why, "triples use " + std::to_string(all.size()) + " distinct labels, a cactus of " +
                     std::to_string(n) + " triangles has " + std::to_string(2 * n + 1) + " vertices");
    return std::nullopt;
  }

  DerivedWindmill d;
  std::vector<std::size_t> vane_ids;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    (blocks[i].contains(centre_label) ? vane_ids : rest).push_back(i);
  if (vane_ids.empty()) {
    set_why(why, "no triple contains the centre label " + std::to_string(centre_label));
    return std::nullopt;
  }
  d.spec.blocks = n;
  const int V = static_cast<int>(vane_ids.size());
  // Vertex numbering needs the final pendant count up front.
  d.spec.pendants.resize(rest.size());
  d.labels.assign(static_cast<std::size_t>(2 * n + 1), -1);
  d.labels[0] = centre_label;

  std::map<int, Owner> owner;
  for (int v = 0; v < V; ++v) {
    const auto& b = blocks[vane_ids[static_cast<std::size_t>(v)]];
    std::vector<int> outer;
    for (int x : b.values)
      if (x != centre_label) outer.push_back(x);
    for (int s = 0; s < 2; ++s) {
      d.labels[static_cast<std::size_t>(outer_vertex(d.spec, v, s))] = outer[static_cast<std::size_t>(s)];
      owner[outer[static_cast<std::size_t>(s)]] = {AttachDescriptor::Host::vane, v, s};
    }
    d.vane_blocks.push_back(b);
  }

  std::vector<bool> placed(rest.size(), false);
  std::size_t done = 0;
  int next = 0;
  while (done < rest.size()) {
    bool progress = false;
    for (std::size_t r = 0; r < rest.size(); ++r) {
      if (placed[r]) continue;
      const auto& b = blocks[rest[r]];
      std::vector<int> common;
      for (int x : b.values)
        if (owner.count(x) || x == centre_label) common.push_back(x);
      if (common.empty()) continue;
      if (common.size() > 1) {
        set_why(why, "triple " + b.to_string() + " meets the others in " +
                         std::to_string(common.size()) + " labels");
        return std::nullopt;
      }
      const Owner& o = owner.at(common[0]);
      const int k = next++;
      d.spec.pendants[static_cast<std::size_t>(k)] = {o.host, o.index, o.slot};
      std::vector<int> free;
      for (int x : b.values)
        if (x != common[0]) free.push_back(x);
      for (int s = 0; s < 2; ++s) {
        d.labels[static_cast<std::size_t>(free_vertex(d.spec, k, s))] = free[static_cast<std::size_t>(s)];
        owner[free[static_cast<std::size_t>(s)]] = {AttachDescriptor::Host::pendant, k, s};
      }
      d.pendant_blocks.push_back(b);
      placed[r] = true;
      ++done;
      progress = true;
    }
    if (!progress) {
      set_why(why, "some triples are not connected to the windmill");
      return std::nullopt;
    }
  }
  return d;
}

Graph LabellingPlan::graph() const {
  Graph g = build_windmill(spec);
  g.labels = labels;
  return g;
}

std::string LabellingPlan::summary() const {
  std::ostringstream os;
  os << spec.describe();
  if (!pivots_used.empty()) {
    os << "; pivots";
    for (int i : pivots_used) os << ' ' << i;
  }
  for (std::size_t k = 0; k < pendant_blocks.size(); ++k) {
    const auto& a = attachments[k];
    os << "; pendant " << k << " {" << pendant_blocks[k].to_string() << "} ("
       << to_string(pendant_blocks[k].provenance) << ") at label " << a.label;
  }
  return os.str();
}

namespace {

// Vertex map from `t` to `d` (same shape), trying pendant correspondences in
// lexicographic order.
std::optional<std::vector<int>> match_specs(const WindmillSpec& t, const WindmillSpec& d,
                                            std::vector<int>* vane_map, std::vector<int>* pendant_map) {
  const int V = t.vanes();
  const int P = static_cast<int>(t.pendants.size());
  if (d.vanes() != V || static_cast<int>(d.pendants.size()) != P || t.blocks != d.blocks)
    return std::nullopt;
  std::vector<int> perm(static_cast<std::size_t>(P));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> sigma(static_cast<std::size_t>(V), -1);
    std::vector<bool> taken(static_cast<std::size_t>(V), false);
    std::vector<int> vflip(static_cast<std::size_t>(V), -1);
    std::vector<int> pflip(static_cast<std::size_t>(P), -1);
    bool ok = true;
    auto set_flip = [&](std::vector<int>& flips, int idx, int f) {
      int& cur = flips[static_cast<std::size_t>(idx)];
      if (cur == -1) cur = f;
      return cur == f;
    };
    for (int k = 0; k < P && ok; ++k) {
      const auto& a = t.pendants[static_cast<std::size_t>(k)];
      const auto& b = d.pendants[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
      if (a.host != b.host) {
        ok = false;
        break;
      }
      const int f = a.slot ^ b.slot;
      if (a.host == AttachDescriptor::Host::vane) {
        int& s = sigma[static_cast<std::size_t>(a.index)];
        if (s == -1) {
          if (taken[static_cast<std::size_t>(b.index)]) {
            ok = false;
            break;
          }
          s = b.index;
          taken[static_cast<std::size_t>(b.index)] = true;
        } else if (s != b.index) {
          ok = false;
          break;
        }
        ok = set_flip(vflip, a.index, f);
      } else {
        if (perm[static_cast<std::size_t>(a.index)] != b.index) {
          ok = false;
          break;
        }
        ok = set_flip(pflip, a.index, f);
      }
    }
    if (!ok) continue;
    int spare = 0;
    for (int v = 0; v < V; ++v) {
      if (sigma[static_cast<std::size_t>(v)] != -1) continue;
      while (taken[static_cast<std::size_t>(spare)]) ++spare;
      sigma[static_cast<std::size_t>(v)] = spare;
      taken[static_cast<std::size_t>(spare)] = true;
    }
    std::vector<int> map(static_cast<std::size_t>(2 * t.blocks + 1), 0);
    for (int v = 0; v < V; ++v) {
      const int f = std::max(0, vflip[static_cast<std::size_t>(v)]);
      for (int s = 0; s < 2; ++s)
        map[static_cast<std::size_t>(outer_vertex(t, v, s))] = outer_vertex(d, sigma[static_cast<std::size_t>(v)], s ^ f);
    }
    for (int k = 0; k < P; ++k) {
      const int f = std::max(0, pflip[static_cast<std::size_t>(k)]);
      for (int s = 0; s < 2; ++s)
        map[static_cast<std::size_t>(free_vertex(t, k, s))] = free_vertex(d, perm[static_cast<std::size_t>(k)], s ^ f);
    }
    if (vane_map) *vane_map = sigma;
    if (pendant_map) *pendant_map = perm;
    return map;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace

LabellingPlan plan_from_blocks(const std::vector<BlockTriple>& blocks, const WindmillSpec& spec,
                               int centre_label) {
  build_windmill(spec);  // validates the spec
  std::string why;
  auto d = derive_windmill(blocks, centre_label, &why);
  if (!d) throw Infeasible("triples do not form a windmill: " + why);
  std::vector<int> vane_map, pendant_map;
  auto map = match_specs(spec, d->spec, &vane_map, &pendant_map);
  if (!map)
    throw Infeasible("triples give " + d->spec.describe() + ", which does not match " + spec.describe());

  LabellingPlan plan;
  plan.spec = spec;
  plan.centre_label = centre_label;
  plan.labels.resize(map->size());
  for (std::size_t v = 0; v < map->size(); ++v)
    plan.labels[v] = d->labels[static_cast<std::size_t>((*map)[v])];
  for (int v : vane_map) plan.vane_blocks.push_back(d->vane_blocks[static_cast<std::size_t>(v)]);
  for (int p : pendant_map) plan.pendant_blocks.push_back(d->pendant_blocks[static_cast<std::size_t>(p)]);
  for (int k = 0; k < static_cast<int>(spec.pendants.size()); ++k)
    plan.attachments.push_back({k, spec.pendants[static_cast<std::size_t>(k)],
                                plan.labels[static_cast<std::size_t>(attachment_vertex(spec, k))]});
  return plan;
}

namespace {

void combinations(const std::vector<int>& items, std::size_t k, std::size_t start, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < items.size(); ++i) {
    cur.push_back(items[i]);
    combinations(items, k, i + 1, cur, out);
    cur.pop_back();
  }
}

bool is_hooked(const Sequence& seq) { return seq.kind().tag == KindTag::hooked_skolem; }

std::optional<LabellingPlan> try_pivots(const Sequence& seq, const std::vector<BlockTriple>& base,
                                        const WindmillSpec& spec, const std::vector<int>& chosen) {
  std::vector<BlockTriple> blocks = base;
  for (int i : chosen) {
    auto it = std::find_if(blocks.begin(), blocks.end(), [i](const BlockTriple& b) { return b.difference == i; });
    if (it == blocks.end()) throw InvalidInput(std::to_string(i) + " is not a difference of the sequence");
    *it = pivot_block(*it, seq.order(), is_hooked(seq));
  }
  try {
    LabellingPlan plan = plan_from_blocks(blocks, spec);
    plan.sequence = seq;
    plan.pivots_used = chosen;
    return plan;
  } catch (const Infeasible&) {
    return std::nullopt;
  }
}

}  // namespace

LabellingPlan plan_labelling(const Sequence& seq, const WindmillSpec& spec,
                             std::optional<std::vector<int>> chosen_pivots) {
  require_valid(seq);
  if (!seq.kind().is_skolem_family())
    throw InvalidInput("windmill labelling needs a Skolem or hooked Skolem sequence");
  const int n = seq.order();
  if (spec.blocks != n)
    throw InvalidInput("sequence of order " + std::to_string(n) + " cannot label " +
                       std::to_string(spec.blocks) + " blocks");
  build_windmill(spec);
  const auto base = base_blocks(pairs(seq), n, BlockForm::standard);
  const std::size_t k = spec.pendants.size();

  std::vector<std::vector<int>> subsets;
  if (chosen_pivots) {
    if (chosen_pivots->size() != k)
      throw InvalidInput("need " + std::to_string(k) + " pivots, got " + std::to_string(chosen_pivots->size()));
    std::vector<int> c = *chosen_pivots;
    std::sort(c.begin(), c.end());
    subsets.push_back(c);
  } else {
    std::vector<int> cur;
    combinations(pivots(seq), k, 0, cur, subsets);
  }
  for (const auto& c : subsets) {
    if (auto plan = try_pivots(seq, base, spec, c)) return *plan;
  }
  throw Infeasible("no choice of " + std::to_string(k) + " pivots of " + to_text(seq) + " gives " +
                   spec.describe());
}

Verdict expected_mode(int n) {
  return (n % 4 == 0 || n % 4 == 1) ? Verdict::graceful : Verdict::near_graceful;
}

namespace {

LabelledWindmill finish(const LabellingPlan& plan, std::string method, std::string detail) {
  LabelledWindmill out;
  out.spec = plan.spec;
  out.type = plan.spec.pendants.size() == 3 ? classify(plan.spec) : '-';
  out.graph = plan.graph();
  out.verdict = verify_labelling(out.graph);
  out.sequence = plan.sequence;
  out.blocks = plan.vane_blocks;
  out.blocks.insert(out.blocks.end(), plan.pendant_blocks.begin(), plan.pendant_blocks.end());
  out.method = std::move(method);
  out.detail = detail.empty() ? plan.summary() : detail + "; " + plan.summary();
  const Verdict want = expected_mode(plan.spec.blocks);
  if (out.verdict.verdict != want)
    throw VerificationFailed(std::string("assembled labelling is ") + to_string(out.verdict.verdict) +
                             ", expected " + to_string(want));
  return out;
}

}  // namespace

LabelledWindmill label_windmill(const Sequence& seq, const std::vector<BlockForm>& forms) {
  require_valid(seq);
  if (!seq.kind().is_skolem_family())
    throw InvalidInput("windmill labelling needs a Skolem or hooked Skolem sequence");
  const auto blocks = base_blocks(pairs(seq), seq.order(), forms);
  LabellingPlan plan = plan_from_blocks(blocks, plain_windmill(seq.order()));
  plan.sequence = seq;
  return finish(plan, "plain", "");
}

LabelledWindmill label_windmill(int n, std::optional<Verdict> mode, BlockForm form) {
  if (n < 1) throw InvalidInput("order must be positive");
  const Verdict want = expected_mode(n);
  if (mode && *mode != want)
    throw Infeasible(std::string("a windmill of order ") + std::to_string(n) + " cannot be " +
                     to_string(*mode) + " (n mod 4 = " + std::to_string(n % 4) + ")");
  const SeqKind kind = want == Verdict::graceful ? SeqKind::skolem() : SeqKind::hooked_skolem();
  auto seq = find_first(kind, n);
  if (!seq) throw SearchExhausted("no " + kind.name() + " of order " + std::to_string(n) + " found");
  return label_windmill(*seq, std::vector<BlockForm>(static_cast<std::size_t>(n), form));
}

LabelledWindmill label_type(char type, const Sequence& seq, std::optional<std::vector<int>> chosen_pivots) {
  if (type == 'k') throw InvalidInput("Type (k) is labelled from mixed triples, not pivots");
  const WindmillSpec spec = canonical_spec(type, seq.order());
  return finish(plan_labelling(seq, spec, std::move(chosen_pivots)), "sequence", "");
}

LabelledWindmill label_type(char type, int n, const LabelOptions& opts) {
  if (!is_type_letter(type)) throw InvalidInput(std::string("unknown windmill type '") + type + "'");
  if (type == 'k') return label_type_k(n);
  const WindmillSpec spec = canonical_spec(type, n);
  const Catalog& cat = bundled_catalog();

  const CatalogEntry* row = cat.find(type, n);
  if (!row) {
    const CatalogEntry* seed = cat.seed_for(type);
    if (seed && seed->order == n) row = seed;
  }
  if (row) return finish(plan_labelling(row->sequence(), spec, row->pivots), "catalog", row->where());

  // Smallest row the order extension reaches: the Langford part then has a
  // small defect relative to its order, which the search finds quickly.
  const CatalogEntry* base = nullptr;
  for (const auto& e : cat.entries()) {
    if (e.type != type || 3 * e.order + 1 > n) continue;
    if (!base || e.order < base->order) base = &e;
  }
  if (base) {
    auto ext = extend_order(base->sequence(), base->pivots, n);
    return finish(plan_labelling(ext.sequence, spec, base->pivots), "extend",
                  "from " + base->where() + " via " + ext.construction);
  }

  const Verdict want = expected_mode(n);
  const SeqKind kind = want == Verdict::graceful ? SeqKind::skolem() : SeqKind::hooked_skolem();
  if (n <= 10) {
    for (const auto& seq : enumerate(kind, n, 0, opts.workers)) {
      try {
        return finish(plan_labelling(seq, spec), "pivot-search", "");
      } catch (const Infeasible&) {
      }
    }
  }

  if (opts.allow_exhaustive) {
    Graph g = build_windmill(spec);
    bool complete = true;
    auto labels = find_labelling(g, want, opts.node_budget, &complete);
    if (labels) {
      LabelledWindmill out;
      out.spec = spec;
      out.type = type;
      g.labels = *labels;
      out.graph = g;
      out.verdict = verify_labelling(out.graph);
      out.method = "exhaustive";
      out.detail = "no sequence of order " + std::to_string(n) +
                   " has a suitable pivot set; labelling found by direct search";
      if (out.verdict.verdict != want) throw VerificationFailed("exhaustive labelling did not certify");
      return out;
    }
    if (complete)
      throw SearchExhausted(std::string("no ") + to_string(want) + " labelling of Type (" + type +
                            ") at n = " + std::to_string(n) + " exists");
  }
  throw SearchExhausted(std::string("no labelling found for Type (") + type + ") at n = " + std::to_string(n));
}

namespace {

// Differences 1..n0 (the seed's) choose among: standard, alt, or a standard
// block shifted by c in 1..n0; exactly `shifted` of them are shifted.
std::optional<LabellingPlan> search_mixed_forms(const Sequence& seq, int n0, int shifted,
                                                const WindmillSpec& spec) {
  const int n = seq.order();
  const PairSet ps = pairs(seq);
  const auto standard = base_blocks(ps, n, BlockForm::standard);
  const auto alt = base_blocks(ps, n, BlockForm::alt);
  const bool hooked = is_hooked(seq);
  const int top = hooked ? 3 * n + 1 : 3 * n;

  std::vector<int> diffs(static_cast<std::size_t>(n0));
  std::iota(diffs.begin(), diffs.end(), 1);
  std::vector<std::vector<int>> chosen_sets;
  std::vector<int> cur;
  combinations(diffs, static_cast<std::size_t>(shifted), 0, cur, chosen_sets);

  for (const auto& chosen : chosen_sets) {
    std::vector<int> others;
    for (int i : diffs)
      if (!std::count(chosen.begin(), chosen.end(), i)) others.push_back(i);
    const long shift_space = static_cast<long>(std::pow(n0, shifted));
    for (long sidx = 0; sidx < shift_space; ++sidx) {
      std::vector<BlockTriple> blocks = standard;
      bool in_range = true;
      long rem = sidx;
      for (int i : chosen) {
        const int c = static_cast<int>(rem % n0) + 1;
        rem /= n0;
        BlockTriple& b = blocks[static_cast<std::size_t>(i - 1)];
        try {
          b = shift_block(b, c, top);
        } catch (const Infeasible&) {
          in_range = false;
          break;
        }
        if (hooked && b.contains(3 * n)) {
          in_range = false;
          break;
        }
      }
      if (!in_range) continue;
      for (unsigned mask = 0; mask < (1u << others.size()); ++mask) {
        for (std::size_t j = 0; j < others.size(); ++j) {
          const auto idx = static_cast<std::size_t>(others[j] - 1);
          blocks[idx] = (mask >> j) & 1u ? alt[idx] : standard[idx];
        }
        try {
          LabellingPlan plan = plan_from_blocks(blocks, spec);
          plan.sequence = seq;
          return plan;
        } catch (const Infeasible&) {
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

LabelledWindmill label_type_k(int n) {
  const WindmillSpec spec = canonical_spec('k', n);
  const Catalog& cat = bundled_catalog();
  const CatalogEntry* row = cat.find('k', n);
  if (!row) {
    const CatalogEntry* seed = cat.seed_for('k');
    if (seed && seed->order == n) row = seed;
  }
  if (row) {
    const Sequence seq = row->sequence();
    const PairSet ps = pairs(seq);
    std::vector<BlockTriple> blocks;
    for (const auto& t : row->triples) {
      auto b = identify_block(t, ps, n);
      if (!b) throw VerificationFailed(row->where() + ": triple does not come from the sequence");
      blocks.push_back(*b);
    }
    LabellingPlan plan = plan_from_blocks(blocks, spec);
    plan.sequence = seq;
    return finish(plan, "catalog", row->where());
  }

  const CatalogEntry* seed = cat.seed_for('k');
  if (!seed) throw SearchExhausted("no Type (k) seed in the catalog");
  if (n < 3 * seed->order + 1)
    throw SearchExhausted("no Type (k) row for n = " + std::to_string(n) + " and n is below the extension bound");
  auto ext = extend_order(seed->sequence(), {}, n);
  auto plan = search_mixed_forms(ext.sequence, seed->order, 3, spec);
  if (!plan)
    throw SearchExhausted("no mixed-form assignment gives Type (k) at n = " + std::to_string(n));
  return finish(*plan, "extend", "from " + seed->where() + " via " + ext.construction);
}

AttachResult attach_vanes(const Graph& g, int l, int which_case, std::optional<Sequence> supplied,
                          std::uint64_t node_budget) {
  if (l < 0) throw InvalidInput("vane count must be non-negative");
  if (which_case < 1 || which_case > 4) throw InvalidInput("case must be 1..4");
  const LabellingVerdict before = verify_labelling(g);
  const bool needs_near = which_case == 1 || which_case == 4;
  const Verdict need = needs_near ? Verdict::near_graceful : Verdict::graceful;
  if (before.verdict != need)
    throw InvalidInput(std::string("case ") + std::to_string(which_case) + " needs a " + to_string(need) +
                       " graph, got " + to_string(before.verdict));
  if (l == 0) return AttachResult{g, before, std::nullopt, {}};

  const auto zero = std::find(g.labels.begin(), g.labels.end(), 0);
  if (zero == g.labels.end()) throw InvalidInput("no vertex is labelled 0");
  const int x = static_cast<int>(zero - g.labels.begin());
  const int m = g.edge_count();

  SeqKind kind;
  int K = 0;
  switch (which_case) {
    case 1:
    case 4: {
      const bool hooked = which_case == 4;
      const int len = 2 * l + (hooked ? 3 : 2);
      const int p = len - m;
      if (p < 1) throw Infeasible("too few vanes: the extra symbol " + std::to_string(m) + " does not fit");
      kind = SeqKind::modified_extended(m + 2, p, m, hooked);
      K = m + l + 1;
      break;
    }
    case 2:
      kind = SeqKind::langford(m + 1);
      K = m + l;
      break;
    case 3:
      kind = SeqKind::hooked_langford(m + 1);
      K = m + l;
      break;
  }

  std::optional<Sequence> seq = std::move(supplied);
  if (seq) {
    if (!(seq->kind() == kind) || seq->order() != l)
      throw InvalidInput("supplied sequence must be a " + kind.name() + " of order " + std::to_string(l) +
                         ", got " + seq->kind().name() + " of order " + std::to_string(seq->order()));
    require_valid(*seq);
  } else {
    seq = find_first(kind, l, node_budget);
    if (!seq) throw SearchExhausted("no " + kind.name() + " of order " + std::to_string(l) + " found");
  }

  AttachResult out{g, {}, seq, {}};
  Graph& h = out.graph;
  if (static_cast<int>(h.labels.size()) != h.vertex_count) h.labels.resize(static_cast<std::size_t>(h.vertex_count), -1);
  for (const auto& [i, pr] : pairs(*seq).pairs) {
    BlockTriple b;
    b.values = {0, pr.first + K, pr.second + K};
    b.difference = i;
    b.provenance = Provenance::standard;
    const int u = h.vertex_count++;
    const int w = h.vertex_count++;
    h.labels.push_back(b.values[1]);
    h.labels.push_back(b.values[2]);
    h.edges.emplace_back(x, u);
    h.edges.emplace_back(u, w);
    h.edges.emplace_back(x, w);
    h.blocks.push_back({x, u, w});
    out.added.push_back(b);
  }
  out.verdict = verify_labelling(h);
  const Verdict want = which_case <= 2 ? Verdict::graceful : Verdict::near_graceful;
  if (out.verdict.verdict != want)
    throw VerificationFailed(std::string("attached graph is ") + to_string(out.verdict.verdict) + ", expected " +
                             to_string(want));
  return out;
}

LabelledWindmill four_pendant_demo() {
  const Sequence s8({4, 8, 5, 7, 4, 1, 1, 5, 6, 8, 7, 2, 3, 2, 6, 3}, SeqKind::skolem(), 8);
  const Sequence l917({24, 17, 21, 22, 18, 14, 11, 19, 25, 23, 10, 20, 9, 16, 13, 15, 12,
                       11, 17, 14, 10, 9, 18, 21, 24, 22, 19, 13, 12, 16, 15, 20, 23, 25},
                      SeqKind::langford(9), 17);
  const Sequence s25 = concatenate(s8, l917);
  const std::vector<int> chosen{1, 2, 4, 11};
  auto blocks = base_blocks(pairs(s25), 25, BlockForm::standard);
  for (int i : chosen) blocks[static_cast<std::size_t>(i - 1)] = pivot_block(blocks[static_cast<std::size_t>(i - 1)], 25, false);
  std::string why;
  auto derived = derive_windmill(blocks, 0, &why);
  if (!derived) throw VerificationFailed("four-pendant triples do not form a windmill: " + why);
  LabellingPlan plan = plan_from_blocks(blocks, derived->spec);
  plan.sequence = s25;
  plan.pivots_used = chosen;
  return finish(plan, "demo", "S8 followed by a Langford sequence of defect 9 and order 17");
}

}  // namespace skolem
