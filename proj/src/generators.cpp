#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "topoidx/error.hpp"
#include "topoidx/graph.hpp"

namespace topoidx {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::vector<std::string_view> params;
};

const std::array<FamilyInfo, 10>& family_table() {
  static const std::array<FamilyInfo, 10> table{{
      {Family::Regular, "regular", {"n", "r"}},
      {Family::Cycle, "cycle", {"n"}},
      {Family::Path, "path", {"n"}},
      {Family::Complete, "complete", {"n"}},
      {Family::CompleteBipartite, "complete_bipartite", {"m", "n"}},
      {Family::Star, "star", {"n"}},
      {Family::DoubleStar, "double_star", {"p", "q"}},
      {Family::Wheel, "wheel", {"n"}},
      {Family::Sunflower, "sunflower", {"n"}},
      {Family::FrenchWindmill, "french_windmill", {"n", "m"}},
  }};
  return table;
}

const FamilyInfo& info(Family f) {
  for (const auto& fi : family_table()) {
    if (fi.family == f) return fi;
  }
  throw Error(ErrorCode::InvalidFamilyParams, "unknown family");
}

[[noreturn]] void invalid(const FamilySpec& spec, const std::string& why) {
  throw Error(ErrorCode::InvalidFamilyParams, spec.to_string() + ": " + why);
}

void require(bool ok, const FamilySpec& spec, const char* why) {
  if (!ok) invalid(spec, why);
}

// Keeps generated graphs within a size the exact engine handles comfortably.
constexpr long kMaxVertices = 1L << 20;

EdgeList cycle_edges(Vertex first, Vertex count) {
  EdgeList e;
  for (Vertex i = 0; i < count; ++i) e.emplace_back(first + i, first + (i + 1) % count);
  return e;
}

EdgeList complete_edges(std::span<const Vertex> vs) {
  EdgeList e;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) e.emplace_back(vs[i], vs[j]);
  }
  return e;
}

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

std::optional<Family> family_from_name(std::string_view name) {
  std::string key;
  for (char c : name) {
    if (c == '-') c = '_';
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (key == "kmn" || key == "bipartite") return Family::CompleteBipartite;
  if (key == "windmill") return Family::FrenchWindmill;
  if (key == "doublestar") return Family::DoubleStar;
  for (const auto& fi : family_table()) {
    if (fi.name == key) return fi.family;
  }
  return std::nullopt;
}

std::size_t family_arity(Family f) { return info(f).params.size(); }

std::vector<std::string_view> family_param_names(Family f) { return info(f).params; }

std::string FamilySpec::to_string() const {
  const auto& fi = info(family);
  std::string out(fi.name);
  out += '(';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(params[i]);
  }
  out += ')';
  return out;
}

Graph generate(const FamilySpec& spec) {
  if (spec.params.size() != family_arity(spec.family)) {
    invalid(spec, "expected " + std::to_string(family_arity(spec.family)) + " parameter(s)");
  }
  for (long p : spec.params) require(p >= 0 && p <= kMaxVertices, spec, "parameter out of bounds");

  const long a = spec.params[0];
  const long b = spec.params.size() > 1 ? spec.params[1] : 0;
  EdgeList edges;
  Vertex n = 0;

  switch (spec.family) {
    case Family::Regular: {
      require(a >= 2 && b >= 1 && b < a, spec, "need 1 <= r < n");
      require((a * b) % 2 == 0, spec, "n*r must be even");
      n = static_cast<Vertex>(a);
      for (long j = 1; j <= b / 2; ++j) {
        for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + j) % n));
      }
      if (b % 2 == 1) {
        for (Vertex i = 0; i < n / 2; ++i) edges.emplace_back(i, i + n / 2);
      }
      break;
    }
    case Family::Cycle:
      require(a >= 3, spec, "need n >= 3");
      n = static_cast<Vertex>(a);
      edges = cycle_edges(0, n);
      break;
    case Family::Path:
      require(a >= 2, spec, "need n >= 2");
      n = static_cast<Vertex>(a);
      for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::Complete: {
      require(a >= 1, spec, "need n >= 1");
      n = static_cast<Vertex>(a);
      std::vector<Vertex> vs(n);
      for (Vertex i = 0; i < n; ++i) vs[i] = i;
      edges = complete_edges(vs);
      break;
    }
    case Family::CompleteBipartite:
      require(a >= 1 && b >= 1, spec, "need m, n >= 1");
      n = static_cast<Vertex>(a + b);
      for (Vertex i = 0; i < a; ++i) {
        for (Vertex j = 0; j < b; ++j) edges.emplace_back(i, static_cast<Vertex>(a + j));
      }
      break;
    case Family::Star:
      require(a >= 1, spec, "need n >= 1");
      n = static_cast<Vertex>(a + 1);
      for (Vertex i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
    case Family::DoubleStar: {
      require(a >= 1 && b >= 1, spec, "need p, q >= 1");
      // Centers 0 and 1; leaves of 0 are 2..p+1, leaves of 1 follow.
      n = static_cast<Vertex>(a + b + 2);
      edges.emplace_back(0, 1);
      for (Vertex i = 0; i < a; ++i) edges.emplace_back(0, 2 + i);
      for (Vertex i = 0; i < b; ++i) edges.emplace_back(1, static_cast<Vertex>(2 + a + i));
      break;
    }
    case Family::Wheel: {
      require(a >= 3, spec, "need n >= 3");
      const auto rim = static_cast<Vertex>(a);
      n = rim + 1;
      for (Vertex i = 0; i < rim; ++i) {
        edges.emplace_back(0, 1 + i);
        edges.emplace_back(1 + i, 1 + (i + 1) % rim);
      }
      break;
    }
    case Family::Sunflower: {
      require(a >= 3, spec, "need n >= 3");
      // Hub 0, rim u_i = 1+i, outer w_i = 1+k+i, pendant p_i = 1+2k+i.
      const auto k = static_cast<Vertex>(a);
      n = 3 * k + 1;
      for (Vertex i = 0; i < k; ++i) {
        const Vertex u = 1 + i, w = 1 + k + i, p = 1 + 2 * k + i;
        edges.emplace_back(u, 1 + (i + 1) % k);
        edges.emplace_back(0, u);
        edges.emplace_back(u, w);
        edges.emplace_back(0, w);
        edges.emplace_back(0, p);
      }
      break;
    }
    case Family::FrenchWindmill: {
      require(a >= 3 && b >= 3, spec, "need n >= 3 and m >= 3");
      require(b * (a - 1) + 1 <= kMaxVertices, spec, "graph too large");
      // Center 0; copy c owns vertices 1+c(n-1) .. c(n-1)+n-1.
      const auto k = static_cast<Vertex>(a);
      const auto copies = static_cast<Vertex>(b);
      n = copies * (k - 1) + 1;
      for (Vertex c = 0; c < copies; ++c) {
        std::vector<Vertex> vs{0};
        for (Vertex i = 0; i + 1 < k; ++i) vs.push_back(1 + c * (k - 1) + i);
        auto block = complete_edges(vs);
        edges.insert(edges.end(), block.begin(), block.end());
      }
      break;
    }
  }
  return Graph::build(n, edges);
}

}  // namespace topoidx
