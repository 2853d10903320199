#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace topoidx {

using Vertex = std::uint32_t;

/// Undirected edge with u < v.
struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph. Edges are stored sorted and
/// deduplicated; adjacency lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Builds the simple graph on `vertex_count` vertices. Duplicate pairs in
  /// either orientation collapse to one edge. Throws SelfLoop or
  /// VertexOutOfRange.
  static Graph build(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex a, Vertex b) const;

  /// Largest (Delta) and smallest (delta) degree; both 0 on the empty graph.
  std::size_t max_degree() const { return max_degree_; }
  std::size_t min_degree() const { return min_degree_; }

  bool is_connected() const;
  /// Stable 64-bit hash of the vertex count and edge set.
  std::uint64_t fingerprint() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t max_degree_ = 0;
  std::size_t min_degree_ = 0;
};

inline constexpr std::uint32_t kUnreachable = UINT32_MAX;

/// Hop distances from `source`; unreachable vertices get kUnreachable.
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source);

/// Graph families with closed forms.
enum class Family {
  Regular,            // (n, r)
  Cycle,              // (n)
  Path,               // (n)
  Complete,           // (n)
  CompleteBipartite,  // (m, n)
  Star,               // (n) leaves, K_{1,n}
  DoubleStar,         // (p, q) leaves on the two centers
  Wheel,              // (n) rim vertices
  Sunflower,          // (n)
  FrenchWindmill,     // (n, m): m copies of K_n sharing one vertex
};

struct FamilySpec {
  Family family;
  std::vector<long> params;

  std::string to_string() const;
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
/// Number of integer parameters the family takes.
std::size_t family_arity(Family f);
/// Parameter names in order, e.g. {"m", "n"}.
std::vector<std::string_view> family_param_names(Family f);

/// Validates the parameters and builds the graph with deterministic vertex
/// numbering (hub first, then rim, outer, pendant). Throws InvalidFamilyParams.
Graph generate(const FamilySpec& spec);

/// Edge-list text format:
///   # comment
///   n <vertex_count>
///   u v
/// Parse errors carry the offending line number.
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(const std::string& path);
std::string format_edge_list(const Graph& g, std::string_view comment = {});

}  // namespace topoidx
