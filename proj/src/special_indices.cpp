#include <cmath>
#include <functional>

#include "topoidx/error.hpp"
#include "topoidx/index_engine.hpp"

namespace topoidx {

namespace {

using PairFn = std::function<Rat(const Rat&, const Rat&)>;

IndexResult edge_sum(const Graph& g, const FunctionalTable& t, const PairFn& f) {
  Rat total;
  for (const auto& e : g.edges()) total += f(t.values[e.u], t.values[e.v]);
  return IndexResult::of(total);
}

// Sum over edges of outside(a, b) + sqrt(radicand(a, b)).
IndexResult root_sum(const Graph& g, const FunctionalTable& t, const PairFn& radicand,
                     const PairFn& outside = {}) {
  Rat exact;
  Rat radicand_total;
  double approx = 0.0;
  bool all_square = true;
  for (const auto& e : g.edges()) {
    const Rat& a = t.values[e.u];
    const Rat& b = t.values[e.v];
    Rat rest = outside ? outside(a, b) : Rat(0);
    Rat r = radicand(a, b);
    radicand_total += r;
    exact += rest;
    approx += rest.to_double() + std::sqrt(r.to_double());
    if (auto s = sqrt_exact(r)) {
      exact += *s;
    } else {
      all_square = false;
    }
  }
  if (all_square) return IndexResult::of(exact);
  auto out = IndexResult::approximate(approx);
  out.radicand = radicand_total;
  return out;
}

Rat int_pow(const Rat& base, const Rat& exponent) { return pow(base, exponent.num().to_long()); }

}  // namespace

std::string_view special_name(SpecialIndex s) {
  switch (s) {
    case SpecialIndex::RL5: return "RL5";
    case SpecialIndex::RL6: return "RL6";
    case SpecialIndex::RL7: return "RL7";
    case SpecialIndex::RL8: return "RL8";
    case SpecialIndex::RL9: return "RL9";
    case SpecialIndex::RL10: return "RL10";
    case SpecialIndex::RL11: return "RL11";
    case SpecialIndex::RL12: return "RL12";
    case SpecialIndex::RL13: return "RL13";
    case SpecialIndex::RL14: return "RL14";
    case SpecialIndex::RL15: return "RL15";
    case SpecialIndex::RL16: return "RL16";
    case SpecialIndex::RL17: return "RL17";
    case SpecialIndex::Heronian: return "HeronianRL";
  }
  return "?";
}

IndexResult special_index(const Graph& g, SpecialIndex which) {
  EvalContext ctx(g);
  return special_index(ctx, which);
}

IndexResult special_index(EvalContext& ctx, SpecialIndex which) {
  const Graph& g = ctx.graph();
  auto sum = [](const Rat& a, const Rat& b) { return a + b; };
  auto prod = [](const Rat& a, const Rat& b) { return a * b; };
  auto squares = [](const Rat& a, const Rat& b) { return a * a + b * b; };

  switch (which) {
    case SpecialIndex::RL5:
      return edge_sum(g, ctx.table(DegreeSource::Plain), [](const Rat& a, const Rat& b) {
        return a < b ? int_pow(a, b) : int_pow(b, a);
      });
    case SpecialIndex::RL6:
      return edge_sum(g, ctx.table(DegreeSource::Plain),
                      [](const Rat& a, const Rat& b) { return int_pow(a, b) + int_pow(b, a); });
    case SpecialIndex::RL7: return edge_sum(g, ctx.closeness(), sum);
    case SpecialIndex::RL8: return edge_sum(g, ctx.closeness(), prod);
    case SpecialIndex::RL9: return edge_sum(g, ctx.closeness(), squares);
    case SpecialIndex::RL10: return root_sum(g, ctx.closeness(), squares);
    case SpecialIndex::RL11: return root_sum(g, ctx.closeness(), sum);
    case SpecialIndex::RL12:
      return edge_sum(g, ctx.closeness(), [](const Rat& a, const Rat& b) { return (a - b).abs(); });
    case SpecialIndex::RL13: return edge_sum(g, ctx.cl_degree(), sum);
    case SpecialIndex::RL14: return edge_sum(g, ctx.cl_degree(), prod);
    case SpecialIndex::RL15: return edge_sum(g, ctx.cl_degree(), squares);
    case SpecialIndex::RL16: return root_sum(g, ctx.cl_degree(), squares);
    case SpecialIndex::RL17: return root_sum(g, ctx.cl_degree(), sum);
    case SpecialIndex::Heronian: return root_sum(g, ctx.table(DegreeSource::Plain), prod, sum);
  }
  throw Error(ErrorCode::UnknownIndexName, "unknown special index");
}

}  // namespace topoidx
