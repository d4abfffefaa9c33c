#include "csf/graphs.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "csf/parallel.hpp"

namespace csf {

SimpleGraph::SimpleGraph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 1) throw UsageError("graph needs at least one vertex");
  std::vector<std::pair<int, int>> seen;
  for (auto& [u, v] : edges_) {
    if (u < 1 || v < 1 || u > n_ || v > n_) throw UsageError("edge endpoint out of range");
    if (u == v) throw UsageError("loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw UsageError("multi-edges are not allowed");
}

SimpleGraph SimpleGraph::path(int n) {
  if (n < 1) throw UsageError("path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return SimpleGraph(n, std::move(e));
}

SimpleGraph SimpleGraph::spider(const Partition& legs) {
  if (legs.empty()) throw UsageError("spider needs at least one leg");
  const int n = legs.modulus() + 1;
  std::vector<std::pair<int, int>> e;
  int next = 2;
  for (int i = 0; i < legs.length(); ++i) {
    int prev = 1;
    for (int j = 0; j < legs.part(i); ++j) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return SimpleGraph(n, std::move(e));
}

SimpleGraph SimpleGraph::from_edge_list_text(const std::string& text) {
  std::vector<std::pair<int, int>> e;
  int maxv = 1;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    std::stringstream ls(line);
    int u, v;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v)) throw UsageError("edge line needs two vertices: '" + line + "'");
    e.emplace_back(u, v);
    maxv = std::max({maxv, u, v});
  }
  return SimpleGraph(maxv, std::move(e));
}

SimpleGraph SimpleGraph::parse_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("graph spec needs 'kind:arg': " + spec);
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (kind == "path") return path(std::stoi(arg));
  if (kind == "spider") {
    std::vector<int> legs;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) legs.push_back(std::stoi(item));
    return spider(Partition::from_multiset(legs));
  }
  if (kind == "file") {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot open graph file " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_edge_list_text(buf.str());
  }
  throw UsageError("unknown graph kind '" + kind + "'");
}

std::vector<int> SimpleGraph::degrees() const {
  std::vector<int> d(static_cast<size_t>(n_), 0);
  for (const auto& [u, v] : edges_) {
    ++d[static_cast<size_t>(u - 1)];
    ++d[static_cast<size_t>(v - 1)];
  }
  return d;
}

namespace {

// Union-find with union by size and an undo stack, shared along the DFS over
// edge subsets.
struct RollbackDsu {
  std::vector<int> parent, size;
  std::vector<std::pair<int, int>> trail;  // (child root, old parent size)

  explicit RollbackDsu(int n) : parent(static_cast<size_t>(n)), size(static_cast<size_t>(n), 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) const {
    while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[static_cast<size_t>(a)] < size[static_cast<size_t>(b)]) std::swap(a, b);
    parent[static_cast<size_t>(b)] = a;
    size[static_cast<size_t>(a)] += size[static_cast<size_t>(b)];
    trail.emplace_back(b, a);
    return true;
  }
  size_t mark() const { return trail.size(); }
  void rollback(size_t to) {
    while (trail.size() > to) {
      auto [child, root] = trail.back();
      trail.pop_back();
      size[static_cast<size_t>(root)] -= size[static_cast<size_t>(child)];
      parent[static_cast<size_t>(child)] = child;
    }
  }
};

// Component-size partition of the current DSU state.
Partition component_partition(const RollbackDsu& dsu) {
  std::vector<int> sizes;
  for (size_t v = 0; v < dsu.parent.size(); ++v)
    if (dsu.parent[v] == static_cast<int>(v)) sizes.push_back(dsu.size[v]);
  return Partition::from_multiset(std::move(sizes));
}

void subset_sum(const SimpleGraph& g, size_t from, size_t fixed_mask, size_t fixed_edges,
                std::map<Partition, Integer>& acc) {
  RollbackDsu dsu(g.vertex_count());
  int sign0 = 0;
  for (size_t i = 0; i < fixed_edges; ++i)
    if (fixed_mask & (size_t{1} << i)) {
      dsu.unite(g.edges()[i].first - 1, g.edges()[i].second - 1);
      ++sign0;
    }
  std::function<void(size_t, int)> rec = [&](size_t i, int sign) {
    if (i == g.edges().size()) {
      acc[component_partition(dsu)] += (sign % 2 == 0 ? 1 : -1);
      return;
    }
    rec(i + 1, sign);  // edge excluded
    const size_t m = dsu.mark();
    dsu.unite(g.edges()[i].first - 1, g.edges()[i].second - 1);
    rec(i + 1, sign + 1);
    dsu.rollback(m);
  };
  rec(from, sign0);
}

}  // namespace

SymElement csf_powersum(const SimpleGraph& g, int max_edges, int threads) {
  if (g.edge_count() > max_edges)
    throw CapExceeded("csf_powersum: " + std::to_string(g.edge_count()) + " edges exceed cap " +
                      std::to_string(max_edges) + " (2^" + std::to_string(g.edge_count()) +
                      " subsets)");
  const size_t E = static_cast<size_t>(g.edge_count());
  size_t split = 0;  // parallelize over fixed include/exclude prefixes
  if (threads > 1 && E >= 10) split = std::min<size_t>(6, E - 4);
  const size_t jobs = size_t{1} << split;
  std::vector<std::map<Partition, Integer>> parts(jobs);
  parallel_for(jobs, threads,
               [&](size_t j) { subset_sum(g, split, j, split, parts[j]); });
  SymElement out(g.vertex_count(), SymBasis::P);
  std::map<Partition, Integer> total;
  for (const auto& m : parts)
    for (const auto& [p, c] : m) total[p] += c;
  for (const auto& [p, c] : total) out.add_term(p, Rational(c));
  return out;
}

SymElement csf_colorings(const SimpleGraph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices)
    throw CapExceeded("csf_colorings: " + std::to_string(n) + " vertices exceed cap " +
                      std::to_string(max_vertices));
  // Adjacency restricted to earlier vertices, so properness is checked as
  // colors are assigned.
  std::vector<std::vector<int>> earlier(static_cast<size_t>(n));
  for (const auto& [u, v] : g.edges())
    earlier[static_cast<size_t>(std::max(u, v) - 1)].push_back(std::min(u, v) - 1);
  std::map<std::vector<int>, Integer> counts;  // canonical content -> colorings
  std::vector<int> color(static_cast<size_t>(n), 0);
  std::vector<int> used(static_cast<size_t>(n) + 1, 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      std::vector<int> content;
      for (int c = 1; c <= n; ++c)
        if (used[static_cast<size_t>(c)] > 0) content.push_back(used[static_cast<size_t>(c)]);
      std::sort(content.begin(), content.end(), std::greater<>());
      // Count only colorings using colors 1..l with the sorted profile, i.e.
      // the canonical representative of each monomial orbit.
      bool canonical = true;
      int maxc = 0;
      for (int c = 1; c <= n; ++c)
        if (used[static_cast<size_t>(c)] > 0) maxc = c;
      for (int c = 1; c <= maxc; ++c)
        if (used[static_cast<size_t>(c)] == 0) canonical = false;
      for (int c = 1; c < maxc; ++c)
        if (used[static_cast<size_t>(c)] < used[static_cast<size_t>(c + 1)]) canonical = false;
      if (canonical) counts[content] += 1;
      return;
    }
    for (int c = 1; c <= n; ++c) {
      bool ok = true;
      for (int u : earlier[static_cast<size_t>(v)])
        if (color[static_cast<size_t>(u)] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[static_cast<size_t>(v)] = c;
      ++used[static_cast<size_t>(c)];
      rec(v + 1);
      --used[static_cast<size_t>(c)];
    }
  };
  rec(0);
  SymElement out(n, SymBasis::Monomial);
  for (const auto& [content, c] : counts) out.add_term(Partition(content), Rational(c));
  return out;
}

SymElement path_csf(int n) {
  static std::mutex mu;
  static std::map<int, SymElement> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  SymElement x = to_monomials(csf_powersum(SimpleGraph::path(n), 64));
  return cache.emplace(n, std::move(x)).first->second;
}

SymElement spider_csf_reduction(int a, int b, int c) {
  if (!(a >= b && b >= c && c >= 1)) throw UsageError("spider reduction needs a >= b >= c >= 1");
  const int n = a + b + c + 1;
  SymElement x = path_csf(n);
  for (int i = 1; i <= c; ++i) {
    x += path_csf(i) * path_csf(n - i);
    x -= path_csf(b + i) * path_csf(n - b - i);
  }
  return x;
}

}  // namespace csf
