#include "topoidx/functionals.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <string>

#include "topoidx/error.hpp"

namespace topoidx {

namespace {

constexpr std::array<std::pair<DegreeSource, std::string_view>, 7> kSourceNames{{
    {DegreeSource::Plain, "plain"},
    {DegreeSource::Revan, "revan"},
    {DegreeSource::Banhatti, "banhatti"},
    {DegreeSource::Temperature, "temperature"},
    {DegreeSource::Domination, "domination"},
    {DegreeSource::KV, "kv"},
    {DegreeSource::NbdSum, "nbdsum"},
}};

FunctionalTable make_table(const Graph& g, std::string_view kind) {
  FunctionalTable t;
  t.kind = kind;
  t.fingerprint = g.fingerprint();
  t.values.reserve(g.vertex_count());
  return t;
}

long as_long(std::size_t v) { return static_cast<long>(v); }

}  // namespace

std::string_view source_name(DegreeSource s) {
  for (const auto& [src, name] : kSourceNames) {
    if (src == s) return name;
  }
  return "?";
}

std::optional<DegreeSource> source_from_name(std::string_view name) {
  std::string key;
  for (char c : name) {
    if (c == '_' || c == '-') continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (key == "degree" || key == "d") return DegreeSource::Plain;
  if (key == "neighborhood" || key == "nbd" || key == "neighbourhood") return DegreeSource::NbdSum;
  for (const auto& [src, n] : kSourceNames) {
    if (n == key) return src;
  }
  return std::nullopt;
}

FunctionalTable plain_degree(const Graph& g) {
  auto t = make_table(g, "plain");
  for (Vertex v = 0; v < g.vertex_count(); ++v) t.values.emplace_back(as_long(g.degree(v)));
  return t;
}

FunctionalTable revan_degree(const Graph& g) {
  auto t = make_table(g, "revan");
  const long extremes = as_long(g.max_degree() + g.min_degree());
  for (Vertex v = 0; v < g.vertex_count(); ++v) t.values.emplace_back(extremes - as_long(g.degree(v)));
  return t;
}

FunctionalTable temperature(const Graph& g) {
  auto t = make_table(g, "temperature");
  const long n = as_long(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const long d = as_long(g.degree(v));
    if (n == d) {
      throw Error(ErrorCode::TemperatureUndefined, "temperature undefined at vertex " + std::to_string(v));
    }
    t.values.emplace_back(Rat(BigInt(d), BigInt(n - d)));
  }
  return t;
}

FunctionalTable kv(const Graph& g) {
  auto t = make_table(g, "kv");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    BigInt prod(1);
    for (Vertex w : g.neighbors(v)) prod *= BigInt(as_long(g.degree(w)));
    t.values.emplace_back(prod);
  }
  return t;
}

FunctionalTable nbd_sum(const Graph& g) {
  auto t = make_table(g, "nbdsum");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    long sum = 0;
    for (Vertex w : g.neighbors(v)) sum += as_long(g.degree(w));
    t.values.emplace_back(sum);
  }
  return t;
}

FunctionalTable closeness(const Graph& g) {
  auto t = make_table(g, "closeness");
  const long n = as_long(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto dist = bfs_distances(g, v);
    long total = 0;
    for (auto d : dist) {
      if (d == kUnreachable) {
        throw Error(ErrorCode::DisconnectedGraph, "closeness needs a connected graph; vertex " +
                                                      std::to_string(v) + " does not reach every vertex");
      }
      total += d;
    }
    t.values.push_back(total == 0 ? Rat(1) : Rat(BigInt(n - 1), BigInt(total)));
  }
  return t;
}

FunctionalTable cl_degree(const Graph& g) {
  auto t = make_table(g, "cl");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    long best = 0;
    const long dv = as_long(g.degree(v));
    for (Vertex w : g.neighbors(v)) best = std::max(best, std::abs(dv - as_long(g.degree(w))));
    t.values.emplace_back(best);
  }
  return t;
}

std::pair<Rat, Rat> banhatti(const Graph& g, const Edge& e) {
  const long n = as_long(g.vertex_count());
  const long du = as_long(g.degree(e.u));
  const long dv = as_long(g.degree(e.v));
  if (n == du || n == dv) {
    throw Error(ErrorCode::BanhattiUndefined, "Banhatti degree undefined on edge (" + std::to_string(e.u) +
                                                  "," + std::to_string(e.v) + ")");
  }
  const BigInt edge_degree(du + dv - 2);
  return {Rat(edge_degree, BigInt(n - du)), Rat(edge_degree, BigInt(n - dv))};
}

FunctionalTable vertex_table(const Graph& g, DegreeSource source, std::size_t domination_max) {
  switch (source) {
    case DegreeSource::Plain: return plain_degree(g);
    case DegreeSource::Revan: return revan_degree(g);
    case DegreeSource::Temperature: return temperature(g);
    case DegreeSource::Domination: return domination_degree(g, domination_max);
    case DegreeSource::KV: return kv(g);
    case DegreeSource::NbdSum: return nbd_sum(g);
    case DegreeSource::Banhatti: break;
  }
  throw Error(ErrorCode::UnsupportedEvaluation, "Banhatti degree is defined per edge endpoint");
}

EdgeValues endpoint_values(const Graph& g, const FunctionalTable& table) {
  EdgeValues out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges()) out.emplace_back(table.values.at(e.u), table.values.at(e.v));
  return out;
}

EdgeValues endpoint_values(const Graph& g, DegreeSource source, std::size_t domination_max) {
  if (source != DegreeSource::Banhatti) return endpoint_values(g, vertex_table(g, source, domination_max));
  EdgeValues out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges()) out.push_back(banhatti(g, e));
  return out;
}

}  // namespace topoidx
