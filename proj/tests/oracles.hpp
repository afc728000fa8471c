// Slow, independent reimplementations used to cross-check the library.
// Nothing here calls into the code under test except Permutation storage.
#ifndef CAYLEYLAB_TESTS_ORACLES_HPP
#define CAYLEYLAB_TESTS_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "cayleylab/perm.hpp"

namespace cayleylab::oracle {

using Images = std::vector<int>;
using Adjacency = std::vector<std::vector<bool>>;

inline Images images(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

inline Images compose(const Images& a, const Images& b) {
  Images r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Images inverse(const Images& a) {
  Images r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

inline int cycle_count(const Images& a) {
  std::vector<bool> seen(a.size());
  int cycles = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (size_t j = i; !seen[j]; j = a[j]) seen[j] = true;
  }
  return cycles;
}

// Lexicographic order of image arrays.
inline std::vector<Images> all_images(int n) {
  std::vector<Images> out;
  Images p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for (const auto& p : all_images(n)) out.emplace_back(std::span<const int>(p));
  return out;
}

inline Images transposition(int n, int i, int j) {
  Images t(n);
  std::iota(t.begin(), t.end(), 0);
  std::swap(t[i - 1], t[j - 1]);
  return t;
}

// Adjacency of Cay(S_n, S) indexed by the library's vertex numbering
// (`index_of`), built from products tau * alpha computed here.
template <typename IndexOf>
Adjacency cayley_adjacency(int n, const std::vector<Images>& gens, size_t count,
                           IndexOf index_of) {
  Adjacency adj(count, std::vector<bool>(count));
  for (const auto& a : all_images(n)) {
    const size_t u = index_of(a);
    for (const auto& t : gens) adj[u][index_of(compose(t, a))] = true;
  }
  return adj;
}

inline bool preserves_edges(const Adjacency& adj, const std::vector<int>& g) {
  for (size_t u = 0; u < adj.size(); ++u)
    for (size_t v = 0; v < adj.size(); ++v)
      if (adj[u][v] && !adj[g[u]][g[v]]) return false;
  return true;
}

inline bool is_symmetric(const Adjacency& adj) {
  for (size_t u = 0; u < adj.size(); ++u)
    for (size_t v = 0; v < adj.size(); ++v)
      if (adj[u][v] != adj[v][u]) return false;
  return true;
}

// Every permutation of the vertex set, filtered. Only viable up to ~8
// vertices.
inline std::vector<Images> automorphisms_exhaustive(const Adjacency& adj) {
  std::vector<Images> out;
  Images p(adj.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (preserves_edges(adj, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Plain backtracking in BFS order from vertex 0; a vertex may go anywhere
// consistent with all earlier assignments. No invariants beyond adjacency.
inline std::vector<Images> automorphisms_backtrack(const Adjacency& adj) {
  const size_t nv = adj.size();
  std::vector<int> order;
  std::vector<bool> queued(nv);
  std::queue<int> q;
  q.push(0);
  queued[0] = true;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    order.push_back(u);
    for (size_t v = 0; v < nv; ++v) {
      if (adj[u][v] && !queued[v]) {
        queued[v] = true;
        q.push(static_cast<int>(v));
      }
    }
  }
  std::vector<Images> out;
  Images image(nv, -1);
  std::vector<bool> used(nv);
  auto recurse = [&](auto&& self, size_t depth) -> void {
    if (depth == nv) {
      out.push_back(image);
      return;
    }
    const int u = order[depth];
    for (size_t c = 0; c < nv; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (size_t d = 0; d < depth && ok; ++d) {
        const int w = order[d];
        ok = adj[u][w] == adj[c][image[w]];
      }
      if (!ok) continue;
      image[u] = static_cast<int>(c);
      used[c] = true;
      self(self, depth + 1);
      used[c] = false;
      image[u] = -1;
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Breadth-first closure under right multiplication by generators.
inline std::set<Images> closure(const std::vector<Images>& gens, size_t domain) {
  Images id(domain);
  std::iota(id.begin(), id.end(), 0);
  std::set<Images> seen{id};
  std::queue<Images> q;
  q.push(id);
  while (!q.empty()) {
    const Images x = q.front();
    q.pop();
    for (const auto& g : gens) {
      Images y = compose(x, g);
      if (seen.insert(y).second) q.push(std::move(y));
    }
  }
  return seen;
}

// BFS distances from `root`.
inline std::vector<int> distances(const Adjacency& adj, size_t root) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<size_t> q;
  dist[root] = 0;
  q.push(root);
  while (!q.empty()) {
    const size_t u = q.front();
    q.pop();
    for (size_t v = 0; v < adj.size(); ++v) {
      if (adj[u][v] && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

// 4-cycles (as edge sets) through the three given vertices, counted by
// enumerating every closed walk a-x-y-z-a on 4 distinct vertices.
inline int four_cycles_through(const Adjacency& adj, size_t a, size_t b, size_t c) {
  const size_t nv = adj.size();
  std::set<std::set<std::pair<size_t, size_t>>> cycles;
  for (size_t x = 0; x < nv; ++x) {
    if (!adj[a][x]) continue;
    for (size_t y = 0; y < nv; ++y) {
      if (!adj[x][y] || y == a) continue;
      for (size_t z = 0; z < nv; ++z) {
        if (!adj[y][z] || !adj[z][a] || z == x) continue;
        const std::set<size_t> vs{a, x, y, z};
        if (vs.size() != 4 || !vs.count(b) || !vs.count(c)) continue;
        auto e = [](size_t p, size_t q) { return std::pair{std::min(p, q), std::max(p, q)}; };
        cycles.insert({e(a, x), e(x, y), e(y, z), e(z, a)});
      }
    }
  }
  return static_cast<int>(cycles.size());
}

}  // namespace cayleylab::oracle

#endif  // CAYLEYLAB_TESTS_ORACLES_HPP
