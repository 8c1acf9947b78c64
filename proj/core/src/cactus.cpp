#include "skolem/cactus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "skolem/error.hpp"

namespace skolem {

bool Graph::labelled() const {
  return static_cast<int>(labels.size()) == vertex_count &&
         std::all_of(labels.begin(), labels.end(), [](int l) { return l >= 0; });
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count));
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  return adj;
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("a cycle needs at least 3 vertices");
  Graph g;
  g.vertex_count = n;
  for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  return g;
}

Graph graph_from_blocks(int vertex_count, const std::vector<std::array<int, 3>>& blocks) {
  Graph g;
  g.vertex_count = vertex_count;
  g.blocks = blocks;
  for (const auto& b : blocks) {
    for (int v : b) {
      if (v < 0 || v >= vertex_count)
        throw InvalidInput("block vertex " + std::to_string(v) + " out of range");
    }
    g.edges.emplace_back(b[0], b[1]);
    g.edges.emplace_back(b[1], b[2]);
    g.edges.emplace_back(b[0], b[2]);
  }
  return g;
}

CactusReport check_cactus(const Graph& g) {
  CactusReport r;
  auto key = [](int u, int v) { return std::make_pair(std::min(u, v), std::max(u, v)); };
  std::map<std::pair<int, int>, int> edge_count;
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count) {
      r.problems.push_back("edge endpoint out of range");
      return r;
    }
    if (u == v) r.problems.push_back("self-loop at " + std::to_string(u));
    ++edge_count[key(u, v)];
  }
  for (const auto& [e, c] : edge_count) {
    if (c > 1)
      r.problems.push_back("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                           " repeated");
  }

  std::map<std::pair<int, int>, int> covered;
  for (std::size_t i = 0; i < g.blocks.size(); ++i) {
    const auto& b = g.blocks[i];
    if (b[0] == b[1] || b[1] == b[2] || b[0] == b[2]) {
      r.problems.push_back("block " + std::to_string(i) + " is not a triangle");
      continue;
    }
    for (auto e : {key(b[0], b[1]), key(b[1], b[2]), key(b[0], b[2])}) {
      if (!edge_count.count(e))
        r.problems.push_back("block " + std::to_string(i) + " side " + std::to_string(e.first) +
                             "-" + std::to_string(e.second) + " is not an edge");
      if (++covered[e] > 1)
        r.problems.push_back("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                             " lies in two blocks");
    }
    for (std::size_t j = 0; j < i; ++j) {
      int shared = 0;
      for (int v : b) shared += std::count(g.blocks[j].begin(), g.blocks[j].end(), v) ? 1 : 0;
      if (shared > 1)
        r.problems.push_back("blocks " + std::to_string(j) + " and " + std::to_string(i) +
                             " share " + std::to_string(shared) + " vertices");
    }
  }
  for (const auto& [e, c] : edge_count) {
    if (!covered.count(e))
      r.problems.push_back("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                           " is in no block");
  }

  if (g.vertex_count > 0) {
    const auto adj = g.adjacency();
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          ++reached;
          q.push(v);
        }
      }
    }
    if (reached != g.vertex_count) r.problems.push_back("graph is not connected");
  }
  // Connected and edge-disjoint triangles: the block/vertex incidence graph
  // is a tree exactly when V = 2b + 1.
  if (r.ok() && g.vertex_count != 2 * static_cast<int>(g.blocks.size()) + 1)
    r.problems.push_back("triangles form a cycle of blocks");
  return r;
}

std::string WindmillSpec::describe() const {
  std::ostringstream os;
  os << "n=" << blocks << " vanes=" << vanes();
  if (!pendants.empty()) {
    os << " pendants:";
    for (const auto& p : pendants)
      os << ' ' << (p.host == AttachDescriptor::Host::vane ? 'v' : 'p') << p.index << ".s" << p.slot;
  }
  return os.str();
}

int outer_vertex(const WindmillSpec&, int vane, int slot) { return 1 + 2 * vane + slot; }

int free_vertex(const WindmillSpec& spec, int pendant, int slot) {
  return 1 + 2 * spec.vanes() + 2 * pendant + slot;
}

int attachment_vertex(const WindmillSpec& spec, int pendant) {
  const auto& d = spec.pendants.at(static_cast<std::size_t>(pendant));
  return d.host == AttachDescriptor::Host::vane ? outer_vertex(spec, d.index, d.slot)
                                                : free_vertex(spec, d.index, d.slot);
}

namespace {

void check_spec(const WindmillSpec& spec) {
  if (spec.blocks < 1) throw InvalidInput("a windmill needs at least one block");
  if (spec.vanes() < 1)
    throw Infeasible("not enough triangles: " + std::to_string(spec.blocks) + " blocks leave no vane for " +
                     std::to_string(spec.pendants.size()) + " pendants");
  for (std::size_t k = 0; k < spec.pendants.size(); ++k) {
    const auto& d = spec.pendants[k];
    if (d.slot != 0 && d.slot != 1)
      throw InvalidInput("pendant " + std::to_string(k) + " has slot " + std::to_string(d.slot));
    if (d.host == AttachDescriptor::Host::vane) {
      if (d.index < 0 || d.index >= spec.vanes())
        throw Infeasible("pendant " + std::to_string(k) + " needs vane " + std::to_string(d.index) +
                         " but there are only " + std::to_string(spec.vanes()) + " vanes");
    } else {
      if (d.index == static_cast<int>(k))
        throw InvalidInput("pendant " + std::to_string(k) + " cannot host itself");
      if (d.index < 0 || d.index > static_cast<int>(k))
        throw InvalidInput("pendant " + std::to_string(k) + " must hang from an earlier pendant");
    }
  }
}

}  // namespace

Graph build_windmill(const WindmillSpec& spec) {
  check_spec(spec);
  const int V = spec.vanes();
  std::vector<std::array<int, 3>> blocks;
  for (int v = 0; v < V; ++v) blocks.push_back({0, outer_vertex(spec, v, 0), outer_vertex(spec, v, 1)});
  for (int k = 0; k < static_cast<int>(spec.pendants.size()); ++k)
    blocks.push_back({attachment_vertex(spec, k), free_vertex(spec, k, 0), free_vertex(spec, k, 1)});
  Graph g = graph_from_blocks(2 * spec.blocks + 1, blocks);
  const auto report = check_cactus(g);
  if (!report.ok()) throw VerificationFailed("built windmill is not a cactus: " + report.problems.front());
  return g;
}

char classify(const WindmillSpec& spec) {
  check_spec(spec);
  if (spec.pendants.size() != 3)
    throw InvalidInput("classification needs exactly three pendants, got " +
                       std::to_string(spec.pendants.size()));
  const auto& P = spec.pendants;
  auto on_vane = [&](int k) { return P[static_cast<std::size_t>(k)].host == AttachDescriptor::Host::vane; };
  std::vector<int> level1;
  for (int k = 0; k < 3; ++k)
    if (on_vane(k)) level1.push_back(k);

  if (level1.size() == 3) {
    std::set<int> vanes;
    for (int k : level1) vanes.insert(P[static_cast<std::size_t>(k)].index);
    if (vanes.size() == 3) return 'a';
    std::set<int> vertices;
    for (int k : level1) vertices.insert(attachment_vertex(spec, k));
    if (vanes.size() == 2) {
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
          if (P[static_cast<std::size_t>(a)].index == P[static_cast<std::size_t>(b)].index)
            return attachment_vertex(spec, a) == attachment_vertex(spec, b) ? 'c' : 'b';
    }
    return vertices.size() == 1 ? 'f' : 'e';
  }
  if (level1.size() == 2) {
    const auto& x = P[static_cast<std::size_t>(level1[0])];
    const auto& y = P[static_cast<std::size_t>(level1[1])];
    if (x.index != y.index) return 'd';
    return attachment_vertex(spec, level1[0]) == attachment_vertex(spec, level1[1]) ? 'i' : 'g';
  }
  const int root = level1.at(0);
  std::vector<int> kids;
  for (int k = 0; k < 3; ++k)
    if (!on_vane(k) && P[static_cast<std::size_t>(k)].index == root) kids.push_back(k);
  if (kids.size() == 2)
    return attachment_vertex(spec, kids[0]) == attachment_vertex(spec, kids[1]) ? 'h' : 'k';
  return 'j';
}

bool is_type_letter(char type) { return type >= 'a' && type <= 'k'; }

int minimum_order(char type) {
  switch (type) {
    case 'a': return 6;
    case 'b': case 'c': case 'd': case 'k': return 5;
    case 'e': case 'f': case 'g': case 'h': case 'i': case 'j': return 4;
    default: throw InvalidInput(std::string("unknown windmill type '") + type + "'");
  }
}

WindmillSpec canonical_spec(char type, int n) {
  const int min = minimum_order(type);
  if (n < min)
    throw Infeasible(std::string("not enough triangles: Type (") + type + ") needs n >= " +
                     std::to_string(min) + ", got " + std::to_string(n));
  using A = AttachDescriptor;
  WindmillSpec s;
  s.blocks = n;
  switch (type) {
    case 'a': s.pendants = {A::on_vane(0), A::on_vane(1), A::on_vane(2)}; break;
    case 'b': s.pendants = {A::on_vane(0), A::on_vane(0, 1), A::on_vane(1)}; break;
    case 'c': s.pendants = {A::on_vane(0), A::on_vane(0), A::on_vane(1)}; break;
    case 'd': s.pendants = {A::on_vane(0), A::on_pendant(0), A::on_vane(1)}; break;
    case 'e': s.pendants = {A::on_vane(0), A::on_vane(0), A::on_vane(0, 1)}; break;
    case 'f': s.pendants = {A::on_vane(0), A::on_vane(0), A::on_vane(0)}; break;
    case 'g': s.pendants = {A::on_vane(0), A::on_vane(0, 1), A::on_pendant(0)}; break;
    case 'h': s.pendants = {A::on_vane(0), A::on_pendant(0), A::on_pendant(0)}; break;
    case 'i': s.pendants = {A::on_vane(0), A::on_vane(0), A::on_pendant(0)}; break;
    case 'j': s.pendants = {A::on_vane(0), A::on_pendant(0), A::on_pendant(1)}; break;
    case 'k': s.pendants = {A::on_vane(0), A::on_pendant(0), A::on_pendant(0, 1)}; break;
  }
  return s;
}

WindmillSpec plain_windmill(int n) {
  if (n < 1) throw InvalidInput("order must be positive");
  WindmillSpec s;
  s.blocks = n;
  return s;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::graceful: return "graceful";
    case Verdict::near_graceful: return "near-graceful";
    case Verdict::neither: return "neither";
  }
  return "neither";
}

LabellingVerdict verify_labelling(const Graph& g) {
  if (static_cast<int>(g.labels.size()) != g.vertex_count)
    throw InvalidInput("labelling covers " + std::to_string(g.labels.size()) + " of " +
                       std::to_string(g.vertex_count) + " vertices");
  for (int v = 0; v < g.vertex_count; ++v) {
    if (g.labels[static_cast<std::size_t>(v)] < 0)
      throw InvalidInput("vertex " + std::to_string(v) + " is unlabelled");
  }
  LabellingVerdict out;
  const int m = g.edge_count();

  std::map<int, int> vcount;
  for (int l : g.labels) ++vcount[l];
  for (auto [l, c] : vcount)
    if (c > 1) out.repeated_vertex_labels.push_back(l);
  const int max_label = g.labels.empty() ? 0 : *std::max_element(g.labels.begin(), g.labels.end());

  for (auto [u, v] : g.edges)
    out.edge_labels.push_back(std::abs(g.labels[static_cast<std::size_t>(u)] - g.labels[static_cast<std::size_t>(v)]));
  std::sort(out.edge_labels.begin(), out.edge_labels.end());

  std::map<int, int> ecount;
  for (int e : out.edge_labels) ++ecount[e];
  for (auto [e, c] : ecount)
    if (c > 1) out.duplicates.push_back(e);

  const bool near_shape = ecount.count(m + 1) != 0 && m >= 1;
  std::vector<int> target;
  for (int k = 1; k <= m; ++k) target.push_back(k);
  if (near_shape) target.back() = m + 1;
  for (int k : target)
    if (!ecount.count(k)) out.missing.push_back(k);

  const bool injective = out.repeated_vertex_labels.empty();
  const bool exact = out.edge_labels == target;
  if (injective && exact && !near_shape && max_label <= m) {
    out.verdict = Verdict::graceful;
  } else if (injective && exact && near_shape && max_label <= m + 1) {
    out.verdict = Verdict::near_graceful;
  } else {
    out.verdict = Verdict::neither;
    if (!injective)
      out.reason = "vertex labels repeat";
    else if (max_label > m + 1)
      out.reason = "vertex label " + std::to_string(max_label) + " exceeds m+1 = " + std::to_string(m + 1);
    else
      out.reason = "edge labels are not {1..m} or {1..m-1, m+1}";
  }
  return out;
}

bool necessary_condition(int n, Verdict target) {
  if (n < 1) return false;
  const int r = n % 4;
  switch (target) {
    case Verdict::graceful: return r == 0 || r == 1;
    case Verdict::near_graceful: return r == 2 || r == 3;
    case Verdict::neither: return false;
  }
  return false;
}

namespace {

class LabelSearch {
 public:
  LabelSearch(const Graph& g, Verdict target, std::uint64_t budget) : g_(g), budget_(budget) {
    m_ = g.edge_count();
    top_ = target == Verdict::graceful ? m_ : m_ + 1;
    allowed_.assign(static_cast<std::size_t>(top_) + 1, false);
    for (int k = 1; k <= m_; ++k) allowed_[static_cast<std::size_t>(k)] = true;
    if (target == Verdict::near_graceful) {
      allowed_[static_cast<std::size_t>(m_)] = false;
      allowed_[static_cast<std::size_t>(m_ + 1)] = true;
    }
    adj_ = g.adjacency();
    // Highest-degree vertex first, then breadth-first so every later vertex
    // has at least one labelled neighbour.
    int start = 0;
    for (int v = 0; v < g.vertex_count; ++v)
      if (adj_[static_cast<std::size_t>(v)].size() > adj_[static_cast<std::size_t>(start)].size()) start = v;
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count), false);
    std::queue<int> q;
    q.push(start);
    seen[static_cast<std::size_t>(start)] = true;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      order_.push_back(u);
      auto nb = adj_[static_cast<std::size_t>(u)];
      std::sort(nb.begin(), nb.end());
      for (int v : nb) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          q.push(v);
        }
      }
    }
    for (int v = 0; v < g.vertex_count; ++v)
      if (!seen[static_cast<std::size_t>(v)]) order_.push_back(v);
    labels_.assign(static_cast<std::size_t>(g.vertex_count), -1);
    used_label_.assign(static_cast<std::size_t>(top_) + 1, false);
    used_edge_.assign(static_cast<std::size_t>(top_) + 1, false);
  }

  std::optional<std::vector<int>> run() {
    if (g_.vertex_count == 0 || g_.vertex_count > top_ + 1) return std::nullopt;
    if (dfs(0)) return labels_;
    return std::nullopt;
  }
  bool budget_hit() const { return budget_hit_; }

 private:
  bool dfs(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (budget_ != 0 && ++nodes_ > budget_) {
      budget_hit_ = true;
      return false;
    }
    const int v = order_[depth];
    // Complement symmetry: the first vertex takes the lower half only.
    const int hi = depth == 0 ? top_ / 2 : top_;
    std::vector<int> fresh;
    for (int l = 0; l <= hi; ++l) {
      if (used_label_[static_cast<std::size_t>(l)]) continue;
      fresh.clear();
      bool ok = true;
      for (int u : adj_[static_cast<std::size_t>(v)]) {
        const int lu = labels_[static_cast<std::size_t>(u)];
        if (lu < 0) continue;
        const int e = std::abs(l - lu);
        if (e == 0 || !allowed_[static_cast<std::size_t>(e)] || used_edge_[static_cast<std::size_t>(e)] ||
            std::find(fresh.begin(), fresh.end(), e) != fresh.end()) {
          ok = false;
          break;
        }
        fresh.push_back(e);
      }
      if (!ok) continue;
      labels_[static_cast<std::size_t>(v)] = l;
      used_label_[static_cast<std::size_t>(l)] = true;
      for (int e : fresh) used_edge_[static_cast<std::size_t>(e)] = true;
      if (dfs(depth + 1)) return true;
      for (int e : fresh) used_edge_[static_cast<std::size_t>(e)] = false;
      used_label_[static_cast<std::size_t>(l)] = false;
      labels_[static_cast<std::size_t>(v)] = -1;
      if (budget_hit_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
  int m_ = 0;
  int top_ = 0;
  std::vector<bool> allowed_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> order_;
  std::vector<int> labels_;
  std::vector<bool> used_label_;
  std::vector<bool> used_edge_;
};

}  // namespace

std::optional<std::vector<int>> find_labelling(const Graph& g, Verdict target,
                                               std::uint64_t node_budget, bool* complete) {
  if (target == Verdict::neither) throw InvalidInput("search target must be graceful or near-graceful");
  LabelSearch s(g, target, node_budget);
  auto out = s.run();
  if (complete) *complete = !s.budget_hit();
  return out;
}

}  // namespace skolem
