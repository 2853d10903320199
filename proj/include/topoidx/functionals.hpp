#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "topoidx/exactnum.hpp"
#include "topoidx/graph.hpp"

namespace topoidx {

/// Degree-like functionals an index can be parameterized over.
enum class DegreeSource { Plain, Revan, Banhatti, Temperature, Domination, KV, NbdSum };

inline constexpr DegreeSource kAllSources[] = {
    DegreeSource::Plain,      DegreeSource::Revan, DegreeSource::Banhatti, DegreeSource::Temperature,
    DegreeSource::Domination, DegreeSource::KV,    DegreeSource::NbdSum};

std::string_view source_name(DegreeSource s);
std::optional<DegreeSource> source_from_name(std::string_view name);

/// Per-vertex values of one functional on one graph.
struct FunctionalTable {
  std::string_view kind;
  std::uint64_t fingerprint = 0;
  std::vector<Rat> values;
};

/// Endpoint values for every edge, aligned with Graph::edges(): first is the
/// value at e.u, second at e.v.
using EdgeValues = std::vector<std::pair<Rat, Rat>>;

inline constexpr std::size_t kDefaultDominationMax = 24;

FunctionalTable plain_degree(const Graph& g);
/// r(u) = Delta + delta - d(u).
FunctionalTable revan_degree(const Graph& g);
/// T(u) = d(u) / (n - d(u)); throws TemperatureUndefined.
FunctionalTable temperature(const Graph& g);
/// M(u) = product of neighbour degrees, 1 for an isolated vertex.
FunctionalTable kv(const Graph& g);
/// S(u) = sum of neighbour degrees.
FunctionalTable nbd_sum(const Graph& g);
/// c(u) = (n - 1) / sum of distances; throws DisconnectedGraph.
FunctionalTable closeness(const Graph& g);
/// CL(u) = max |d(u) - d(w)| over neighbours w, 0 for an isolated vertex.
FunctionalTable cl_degree(const Graph& g);

/// Minimum size of a minimal dominating set that contains v, for every v.
/// Throws GraphTooLarge when |V| exceeds `max_vertices` (hard cap 63).
FunctionalTable domination_degree(const Graph& g, std::size_t max_vertices = kDefaultDominationMax);

/// (B(u), B(v)) for the edge uv with B(x) = (d(u) + d(v) - 2) / (n - d(x)).
/// Throws BanhattiUndefined.
std::pair<Rat, Rat> banhatti(const Graph& g, const Edge& e);

/// Endpoint values of `source` for each edge.
EdgeValues endpoint_values(const Graph& g, DegreeSource source,
                           std::size_t domination_max = kDefaultDominationMax);
EdgeValues endpoint_values(const Graph& g, const FunctionalTable& table);

/// Per-vertex table for any vertex-valued source. Banhatti is edge-valued and
/// throws UnsupportedEvaluation here.
FunctionalTable vertex_table(const Graph& g, DegreeSource source,
                             std::size_t domination_max = kDefaultDominationMax);

}  // namespace topoidx
