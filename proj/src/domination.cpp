#include <bit>
#include <cstdint>
#include <string>

#include "topoidx/error.hpp"
#include "topoidx/functionals.hpp"

namespace topoidx {

namespace {

using Mask = std::uint64_t;

// Next subset of the same popcount (Gosper's hack). Returns 0 when exhausted.
Mask next_same_size(Mask s, Mask limit) {
  const Mask c = s & (~s + 1);
  const Mask r = s + c;
  if (r == 0) return 0;
  const Mask next = (((r ^ s) >> 2) / c) | r;
  return next >= limit ? 0 : next;
}

}  // namespace

FunctionalTable domination_degree(const Graph& g, std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  if (n > max_vertices || n > 63) {
    throw Error(ErrorCode::GraphTooLarge, "domination degree needs |V| <= " +
                                              std::to_string(std::min<std::size_t>(max_vertices, 63)) +
                                              ", got " + std::to_string(n));
  }
  FunctionalTable t;
  t.kind = "domination";
  t.fingerprint = g.fingerprint();
  if (n == 0) return t;

  std::vector<Mask> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = Mask{1} << v;
    for (Vertex w : g.neighbors(v)) closed[v] |= Mask{1} << w;
  }
  const Mask all = (Mask{1} << n) - 1;
  const Mask limit = Mask{1} << n;

  auto dominates = [&](Mask s) {
    Mask covered = 0;
    for (Mask rest = s; rest != 0; rest &= rest - 1) covered |= closed[std::countr_zero(rest)];
    return covered == all;
  };
  auto minimal = [&](Mask s) {
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      if (dominates(s & ~(rest & (~rest + 1)))) return false;
    }
    return true;
  };

  std::vector<long> best(n, 0);
  Mask unresolved = all;
  for (std::size_t k = 1; k <= n && unresolved != 0; ++k) {
    for (Mask s = (Mask{1} << k) - 1; s != 0; s = next_same_size(s, limit)) {
      if ((s & unresolved) == 0 || !dominates(s) || !minimal(s)) continue;
      for (Mask hit = s & unresolved; hit != 0; hit &= hit - 1) best[std::countr_zero(hit)] = static_cast<long>(k);
      unresolved &= ~s;
      if (unresolved == 0) break;
    }
  }
  t.values.reserve(n);
  for (long b : best) t.values.emplace_back(b);
  return t;
}

}  // namespace topoidx
