#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "topoidx/functionals.hpp"
#include "topoidx/graph.hpp"

namespace testsupport {

using topoidx::Graph;
using topoidx::Vertex;

// Erdos-Renyi draw repeated until connected.
inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    Graph g = Graph::build(n, edges);
    if (g.is_connected()) return g;
  }
}

// Every family instance whose principal parameter is at most max_n.
inline std::vector<topoidx::FamilySpec> family_samples(long max_n) {
  using topoidx::Family;
  std::vector<topoidx::FamilySpec> out;
  for (long n = 3; n <= max_n; ++n) {
    for (long r = 2; r < n; ++r) {
      if ((n * r) % 2 == 0) out.push_back({Family::Regular, {n, r}});
    }
    out.push_back({Family::Cycle, {n}});
    out.push_back({Family::Path, {n}});
    out.push_back({Family::Complete, {n}});
    out.push_back({Family::Star, {n}});
    out.push_back({Family::Wheel, {n}});
    out.push_back({Family::Sunflower, {n}});
    for (long m = 1; m <= n; ++m) out.push_back({Family::CompleteBipartite, {m, n}});
    for (long q = 1; q <= n; ++q) out.push_back({Family::DoubleStar, {n, q}});
  }
  out.push_back({Family::FrenchWindmill, {3, 3}});
  out.push_back({Family::FrenchWindmill, {4, 3}});
  return out;
}

// Domination degree straight from the definition: enumerate every vertex
// subset, keep the dominating ones with no dominating proper subset.
inline std::vector<std::size_t> brute_force_domination(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::uint32_t total = 1u << n;
  std::vector<bool> dominating(total, false);
  for (std::uint32_t s = 0; s < total; ++s) {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      if (s >> v & 1u) continue;
      bool covered = false;
      for (Vertex w : g.neighbors(v)) covered = covered || (s >> w & 1u);
      ok = covered;
    }
    dominating[s] = ok;
  }
  std::vector<std::size_t> best(n, n + 1);
  for (std::uint32_t s = 0; s < total; ++s) {
    if (!dominating[s]) continue;
    bool minimal = true;
    for (std::uint32_t sub = (s - 1) & s;; sub = (sub - 1) & s) {
      if (dominating[sub]) {
        minimal = false;
        break;
      }
      if (sub == 0) break;
    }
    if (!minimal) continue;
    const auto size = static_cast<std::size_t>(__builtin_popcount(s));
    for (Vertex v = 0; v < n; ++v) {
      if (s >> v & 1u) best[v] = std::min(best[v], size);
    }
  }
  return best;
}

}  // namespace testsupport
