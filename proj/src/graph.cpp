#include "wed/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace wed {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                  "," + std::to_string(v) + ")");
    if (u == v)
      throw std::invalid_argument("loop edge rejected at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  int m = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    m += static_cast<int>(nb.size());
  }
  g.m_ = m / 2;
  return g;
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::complement() const {
  std::vector<std::pair<int, int>> comp_edges;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) comp_edges.emplace_back(u, v);
  return from_edges(n_, comp_edges);
}

VertexSet DistanceLevels::residual() const {
  VertexSet r;
  for (std::size_t i = 2; i < levels.size(); ++i)
    r.insert(r.end(), levels[i].begin(), levels[i].end());
  r.insert(r.end(), unreachable.begin(), unreachable.end());
  std::sort(r.begin(), r.end());
  return r;
}

int DistanceLevels::level_of(int v, int n) const {
  if (v == root) return 0;
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (set_contains(levels[i], v)) return static_cast<int>(i) + 1;
  (void)n;
  return -1;
}

DistanceLevels distance_levels(const Graph& g, int root) {
  int n = g.vertex_count();
  if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
  std::vector<int> dist(n, -1);
  dist[root] = 0;
  std::queue<int> q;
  q.push(root);
  int maxd = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u))
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        maxd = std::max(maxd, dist[v]);
        q.push(v);
      }
  }
  DistanceLevels out;
  out.root = root;
  out.levels.assign(maxd, {});
  for (int v = 0; v < n; ++v) {
    if (v == root) continue;
    if (dist[v] < 0)
      out.unreachable.push_back(v);
    else
      out.levels[dist[v] - 1].push_back(v);
  }
  return out;
}

VertexSet anti_neighborhood(const Graph& g, const VertexSet& u) {
  int n = g.vertex_count();
  std::vector<char> blocked(n, 0);
  for (int v : u) {
    blocked[v] = 1;
    for (int w : g.neighbors(v)) blocked[w] = 1;
  }
  VertexSet out;
  for (int v = 0; v < n; ++v)
    if (!blocked[v]) out.push_back(v);
  return out;
}

VertexSet neighborhood_of_set(const Graph& g, const VertexSet& u) {
  int n = g.vertex_count();
  std::vector<char> in_u(n, 0), seen(n, 0);
  for (int v : u) in_u[v] = 1;
  VertexSet out;
  for (int v : u)
    for (int w : g.neighbors(v))
      if (!in_u[w] && !seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> components(const Graph& g, bool complemented) {
  int n = g.vertex_count();
  std::vector<VertexSet> out;
  if (!complemented) {
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      VertexSet comp;
      std::queue<int> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        comp.push_back(u);
        for (int v : g.neighbors(u))
          if (!seen[v]) {
            seen[v] = 1;
            q.push(v);
          }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }
  // Complement BFS: the unvisited non-neighbors of u are exactly its
  // complement-neighbors among the remaining vertices.
  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<char> mark(n, 0);
  while (!remaining.empty()) {
    int s = remaining.front();
    VertexSet comp{s};
    std::vector<int> frontier{s};
    remaining.erase(remaining.begin());
    while (!frontier.empty()) {
      int u = frontier.back();
      frontier.pop_back();
      for (int w : g.neighbors(u)) mark[w] = 1;
      std::vector<int> keep, grabbed;
      for (int w : remaining)
        (mark[w] ? keep : grabbed).push_back(w);
      for (int w : g.neighbors(u)) mark[w] = 0;
      remaining.swap(keep);
      for (int w : grabbed) {
        comp.push_back(w);
        frontier.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<int, int> min_degree_vertex(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("empty graph has no minimum-degree vertex");
  int best = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(best)) best = v;
  return {best, g.degree(best)};
}

std::pair<Graph, std::vector<int>> induced(const Graph& g, const VertexSet& s) {
  std::vector<int> to_old(s.begin(), s.end());
  std::vector<int> to_new(g.vertex_count(), -1);
  for (std::size_t i = 0; i < to_old.size(); ++i) to_new[to_old[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (int v : s)
    for (int w : g.neighbors(v))
      if (v < w && to_new[w] >= 0) edges.emplace_back(to_new[v], to_new[w]);
  return {Graph::from_edges(static_cast<int>(s.size()), edges), std::move(to_old)};
}

VertexSet universal_in(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (int v : s) {
    int hits = 0;
    for (int w : g.neighbors(v))
      if (set_contains(s, w)) ++hits;
    if (hits == static_cast<int>(s.size()) - 1) out.push_back(v);
  }
  return out;
}

bool set_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string join_ints(const VertexSet& s, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << sep;
    os << s[i];
  }
  return os.str();
}

}  // namespace wed
