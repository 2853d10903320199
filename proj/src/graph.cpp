#include "topoidx/graph.hpp"

#include <algorithm>
#include <deque>

#include "topoidx/error.hpp"

namespace topoidx {

Graph Graph::build(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g;
  g.adjacency_.resize(vertex_count);
  g.edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") outside 0.." +
                      std::to_string(vertex_count == 0 ? 0 : vertex_count - 1));
    }
    if (a == b) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (const auto& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  if (vertex_count > 0) {
    auto [lo, hi] = std::minmax_element(g.adjacency_.begin(), g.adjacency_.end(),
                                        [](const auto& x, const auto& y) { return x.size() < y.size(); });
    g.min_degree_ = lo->size();
    g.max_degree_ = hi->size();
  }
  return g;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& nbrs = adjacency_.at(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

bool Graph::is_connected() const {
  if (vertex_count() <= 1) return true;
  auto dist = bfs_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreachable; });
}

std::uint64_t Graph::fingerprint() const {
  // FNV-1a over (n, u0, v0, u1, v1, ...).
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(vertex_count());
  for (const auto& e : edges_) {
    mix(e.u);
    mix(e.v);
  }
  return h;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.vertex_count()) {
    throw Error(ErrorCode::VertexOutOfRange, "BFS source " + std::to_string(source) + " out of range");
  }
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] != kUnreachable) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

}  // namespace topoidx
