#include "dimred/signed_graph.hpp"

#include <algorithm>
#include <queue>

namespace dimred {

namespace {

struct ComponentInfo {
  std::vector<int> vertices;
  int edges = 0;
  bool balanced = true;
};

// BFS over one signed multigraph, assigning vertex signs; a component is
// unbalanced iff some edge contradicts the propagated signing.
std::vector<ComponentInfo> analyse(const SignedGraph& g) {
  const int n = g.vertices();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.i)].push_back({e.j, static_cast<int>(e.sign)});
    adj[static_cast<std::size_t>(e.j)].push_back({e.i, static_cast<int>(e.sign)});
  }
  std::vector<int> vsign(static_cast<std::size_t>(n), 0);
  std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
  std::vector<ComponentInfo> comps;
  for (int s = 0; s < n; ++s) {
    if (comp_of[static_cast<std::size_t>(s)] >= 0) continue;
    ComponentInfo info;
    const int cid = static_cast<int>(comps.size());
    std::queue<int> q;
    q.push(s);
    comp_of[static_cast<std::size_t>(s)] = cid;
    vsign[static_cast<std::size_t>(s)] = 1;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      info.vertices.push_back(u);
      for (auto [v, sg] : adj[static_cast<std::size_t>(u)]) {
        const int want = vsign[static_cast<std::size_t>(u)] * sg;
        if (comp_of[static_cast<std::size_t>(v)] < 0) {
          comp_of[static_cast<std::size_t>(v)] = cid;
          vsign[static_cast<std::size_t>(v)] = want;
          q.push(v);
        } else if (vsign[static_cast<std::size_t>(v)] != want) {
          info.balanced = false;
        }
      }
    }
    std::sort(info.vertices.begin(), info.vertices.end());
    comps.push_back(std::move(info));
  }
  for (const auto& e : g.edges()) ++comps[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(e.i)])].edges;
  return comps;
}

std::size_t pair_index(int n, int i, int j) {
  return static_cast<std::size_t>(i * n - i * (i + 1) / 2 + (j - i - 1));
}

}  // namespace

SignedGraph::SignedGraph(int vertices, std::vector<SignedEdge> edges) : n_(vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw PreconditionError("SignedGraph: negative vertex count");
  for (auto& e : edges_) {
    if (e.i == e.j) throw PreconditionError("SignedGraph: loops are not permitted");
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.i < 0 || e.j >= n_) throw PreconditionError("SignedGraph: edge endpoint out of range");
  }
  for (std::size_t a = 0; a < edges_.size(); ++a)
    for (std::size_t b = a + 1; b < edges_.size(); ++b)
      if (edges_[a] == edges_[b]) throw PreconditionError("SignedGraph: duplicate signed edge");
}

std::vector<std::vector<int>> SignedGraph::components() const {
  std::vector<std::vector<int>> out;
  for (auto& c : analyse(*this)) out.push_back(std::move(c.vertices));
  return out;
}

SignedGraph SignedGraph::induced(const std::vector<int>& vertices) const {
  std::vector<int> relabel(static_cast<std::size_t>(n_), -1);
  for (std::size_t k = 0; k < vertices.size(); ++k) relabel[static_cast<std::size_t>(vertices[k])] = static_cast<int>(k);
  std::vector<SignedEdge> es;
  for (const auto& e : edges_) {
    const int a = relabel[static_cast<std::size_t>(e.i)];
    const int b = relabel[static_cast<std::size_t>(e.j)];
    if (a >= 0 && b >= 0) es.push_back({std::min(a, b), std::max(a, b), e.sign});
  }
  return SignedGraph(static_cast<int>(vertices.size()), std::move(es));
}

bool is_balanced(const SignedGraph& g) {
  for (const auto& c : analyse(g))
    if (!c.balanced) return false;
  return true;
}

ComponentSplit split_components(const SignedGraph& g) {
  std::vector<int> bal;
  std::vector<int> unbal;
  for (const auto& c : analyse(g)) {
    auto& dst = c.balanced ? bal : unbal;
    dst.insert(dst.end(), c.vertices.begin(), c.vertices.end());
  }
  std::sort(bal.begin(), bal.end());
  std::sort(unbal.begin(), unbal.end());
  SignedGraph gb = g.induced(bal);
  SignedGraph gu = g.induced(unbal);
  return {std::move(bal), std::move(unbal), std::move(gb), std::move(gu)};
}

long long balanced_liftings(const SimpleGraph& g) {
  if (g.vertices < 1) throw PreconditionError("balanced_liftings: graph has no vertices");
  std::vector<SignedEdge> es;
  for (auto [i, j] : g.edges) es.push_back({i, j, Sign::plus});
  const SignedGraph sg(g.vertices, std::move(es));
  for (std::size_t a = 0; a < g.edges.size(); ++a)
    for (std::size_t b = a + 1; b < g.edges.size(); ++b)
      if (sg.edges()[a].i == sg.edges()[b].i && sg.edges()[a].j == sg.edges()[b].j)
        throw PreconditionError("balanced_liftings: graph must be simple");
  if (sg.components().size() != 1) throw PreconditionError("balanced_liftings: graph is disconnected");
  return 1LL << (g.vertices - 1);
}

int signed_graph_rank(const SignedGraph& g) {
  int balanced = 0;
  for (const auto& c : analyse(g))
    if (c.balanced) ++balanced;
  return g.vertices() - balanced;
}

bool is_Dn_independent(const SignedGraph& g) {
  for (const auto& c : analyse(g)) {
    const int v = static_cast<int>(c.vertices.size());
    if (c.edges > v) return false;
    if (c.edges == v && c.balanced) return false;
  }
  return true;
}

bool is_Dn_base(const SignedGraph& g) {
  for (const auto& c : analyse(g)) {
    if (c.edges != static_cast<int>(c.vertices.size())) return false;
    if (c.balanced) return false;
  }
  return true;
}

int coxeter_d_index(int n, const SignedEdge& e) {
  if (e.i < 0 || e.j >= n || e.i >= e.j) throw PreconditionError("coxeter_d_index: bad edge");
  return static_cast<int>(2 * pair_index(n, e.i, e.j) + (e.sign == Sign::plus ? 0 : 1));
}

SignedGraph signed_graph_of(int n, GroundSubset subset) {
  std::vector<SignedEdge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int base = static_cast<int>(2 * pair_index(n, i, j));
      if (subset.contains(base)) es.push_back({i, j, Sign::plus});
      if (subset.contains(base + 1)) es.push_back({i, j, Sign::minus});
    }
  return SignedGraph(n, std::move(es));
}

GroundSubset coxeter_d_subset(const SignedGraph& g) {
  GroundSubset s;
  for (const auto& e : g.edges()) s = s.with(coxeter_d_index(g.vertices(), e));
  return s;
}

}  // namespace dimred
