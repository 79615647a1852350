#include "prem/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace prem {

namespace {

struct Edge {
  int src, label, dst;  // src --label--> dst, label in 1..rank
  bool operator<(const Edge& rhs) const {
    return std::tie(src, label, dst) < std::tie(rhs.src, rhs.label, rhs.dst);
  }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Identifies vertices until no label conflicts remain.  Quadratic, which is
// fine at the graph sizes this library deals with.
std::set<Edge> fold_edges(std::set<Edge> edges, int vertex_count, int* base) {
  UnionFind uf(vertex_count);
  for (;;) {
    std::set<Edge> canon;
    for (const Edge& e : edges)
      canon.insert(Edge{uf.find(e.src), e.label, uf.find(e.dst)});
    bool merged = false;
    std::map<std::pair<int, int>, int> seen_out, seen_in;
    for (const Edge& e : canon) {
      auto [it_o, fresh_o] = seen_out.try_emplace({e.src, e.label}, e.dst);
      if (!fresh_o && it_o->second != e.dst) {
        uf.unite(it_o->second, e.dst);
        merged = true;
        break;
      }
      auto [it_i, fresh_i] = seen_in.try_emplace({e.dst, e.label}, e.src);
      if (!fresh_i && it_i->second != e.src) {
        uf.unite(it_i->second, e.src);
        merged = true;
        break;
      }
    }
    edges = std::move(canon);
    if (!merged) break;
  }
  *base = uf.find(*base);
  return edges;
}

}  // namespace

SubgroupGraph SubgroupGraph::fold(const std::vector<FreeWord>& generators,
                                  int rank) {
  for (const auto& g : generators)
    if (g.rank() != rank)
      throw std::invalid_argument("SubgroupGraph: generator rank mismatch");

  std::set<Edge> edges;
  int vertices = 1;  // vertex 0 is the base
  for (const auto& g : generators) {
    int cur = 0;
    const auto& ls = g.letters();
    for (std::size_t k = 0; k < ls.size(); ++k) {
      const int next = (k + 1 == ls.size()) ? 0 : vertices++;
      const int a = ls[k];
      if (a > 0)
        edges.insert(Edge{cur, a, next});
      else
        edges.insert(Edge{next, -a, cur});
      cur = next;
    }
  }

  int base = 0;
  edges = fold_edges(std::move(edges), vertices, &base);

  // Trim to the core: drop non-base vertices of total degree <= 1.
  for (bool removed = true; removed;) {
    removed = false;
    std::map<int, int> degree;
    for (const Edge& e : edges) {
      degree[e.src]++;
      degree[e.dst]++;
    }
    for (const auto& [v, d] : degree) {
      if (v == base || d > 1) continue;
      std::set<Edge> kept;
      for (const Edge& e : edges)
        if (e.src != v && e.dst != v) kept.insert(e);
      edges = std::move(kept);
      removed = true;
      break;
    }
  }

  // Compact vertex ids.
  std::map<int, int> id;
  id[base] = 0;
  for (const Edge& e : edges) {
    id.try_emplace(e.src, static_cast<int>(id.size()));
    id.try_emplace(e.dst, static_cast<int>(id.size()));
  }

  SubgroupGraph g;
  g.rank_ = rank;
  g.base_ = 0;
  g.fwd_.assign(id.size(), std::vector<int>(rank, -1));
  g.bwd_.assign(id.size(), std::vector<int>(rank, -1));
  for (const Edge& e : edges) {
    g.fwd_[id[e.src]][e.label - 1] = id[e.dst];
    g.bwd_[id[e.dst]][e.label - 1] = id[e.src];
  }
  g.generators_ = generators;
  return g;
}

int SubgroupGraph::step(int vertex, int letter) const {
  return letter > 0 ? fwd_[vertex][letter - 1] : bwd_[vertex][-letter - 1];
}

bool SubgroupGraph::contains(const FreeWord& w) const {
  if (w.rank() != rank_)
    throw std::invalid_argument("SubgroupGraph: word rank mismatch");
  int cur = base_;
  for (int a : w.letters()) {
    cur = step(cur, a);
    if (cur < 0) return false;
  }
  return cur == base_;
}

std::vector<FreeWord> SubgroupGraph::loops_up_to(int max_len) const {
  std::vector<FreeWord> out;
  std::vector<int> word;
  // Depth-first over reduced traces from the base.
  auto rec = [&](auto&& self, int vertex, int last) -> void {
    if (vertex == base_) out.push_back(FreeWord(rank_, word));
    if (static_cast<int>(word.size()) == max_len) return;
    for (int a = -rank_; a <= rank_; ++a) {
      if (a == 0 || a == -last) continue;
      const int next = step(vertex, a);
      if (next < 0) continue;
      word.push_back(a);
      self(self, next, a);
      word.pop_back();
    }
  };
  rec(rec, base_, 0);
  return out;
}

bool subgroup_contains(const SubgroupGraph& H, const FreeWord& w) {
  return H.contains(w);
}

namespace {

// Mutable copy of a folded graph that can sprout a tail while tracing a word.
struct TracedGraph {
  int rank;
  std::vector<std::vector<int>> fwd, bwd;

  int step(int vertex, int letter) const {
    return letter > 0 ? fwd[vertex][letter - 1] : bwd[vertex][-letter - 1];
  }

  int trace_extending(int start, const FreeWord& w) {
    int cur = start;
    for (int a : w.letters()) {
      int next = step(cur, a);
      if (next < 0) {
        next = static_cast<int>(fwd.size());
        fwd.emplace_back(rank, -1);
        bwd.emplace_back(rank, -1);
        if (a > 0) {
          fwd[cur][a - 1] = next;
          bwd[next][a - 1] = cur;
        } else {
          fwd[next][-a - 1] = cur;
          bwd[cur][-a - 1] = next;
        }
      }
      cur = next;
    }
    return cur;
  }
};

}  // namespace

bool double_coset_equal(const SubgroupGraph& H, const FreeWord& g,
                        const FreeWord& g_prime) {
  if (g.rank() != H.rank_ || g_prime.rank() != H.rank_)
    throw std::invalid_argument("double_coset_equal: rank mismatch");

  // An element w with w in Hg and w in g'H exists iff g' in HgH.  Words of
  // Hg are exactly the reduced traces base -> t in H's graph extended along
  // g; words of g'H are the traces t' -> base in the extension along g'^-1.
  TracedGraph left{H.rank_, H.fwd_, H.bwd_};
  const int target_left = left.trace_extending(H.base_, g);
  TracedGraph right{H.rank_, H.fwd_, H.bwd_};
  const int start_right = right.trace_extending(H.base_, g_prime.inverse());

  const int nl = static_cast<int>(left.fwd.size());
  const int nr = static_cast<int>(right.fwd.size());
  std::vector<char> seen(static_cast<std::size_t>(nl) * nr, 0);
  std::deque<std::pair<int, int>> queue;
  auto visit = [&](int a, int b) {
    const std::size_t key = static_cast<std::size_t>(a) * nr + b;
    if (!seen[key]) {
      seen[key] = 1;
      queue.emplace_back(a, b);
    }
  };
  visit(H.base_, start_right);
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    if (a == target_left && b == H.base_) return true;
    for (int letter = -H.rank_; letter <= H.rank_; ++letter) {
      if (letter == 0) continue;
      const int na = left.step(a, letter);
      const int nb = right.step(b, letter);
      if (na >= 0 && nb >= 0) visit(na, nb);
    }
  }
  return false;
}

}  // namespace prem
