#include "topoidx/index_engine.hpp"

#include <cmath>
#include <cstdio>

#include "topoidx/error.hpp"

namespace topoidx {

namespace {

// A transformed kernel: exact when it stays rational.
struct Term {
  std::optional<Rat> exact;
  double approx = 0.0;
};

std::string edge_label(const Edge& e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

Term apply(const Transform& t, const Rat& k, const Edge& e) {
  switch (t.kind) {
    case TransformKind::Identity: return {k};
    case TransformKind::Hyper: return {k * k};
    case TransformKind::Inverse:
      if (k.is_zero()) throw Error(ErrorCode::InverseUndefined, "zero kernel on edge " + edge_label(e));
      return {k.reciprocal()};
    case TransformKind::General: break;
  }
  if (k.is_zero() && t.power.sign() < 0) {
    throw Error(ErrorCode::InverseUndefined, "zero kernel raised to a negative power on edge " + edge_label(e));
  }
  if (auto r = pow_exact(k, t.power)) return {std::move(r)};
  if (k.sign() < 0) {
    throw Error(ErrorCode::UnsupportedEvaluation,
                "negative kernel to the power " + t.power.to_short_string() + " on edge " + edge_label(e));
  }
  return {std::nullopt, std::pow(k.to_double(), t.power.to_double())};
}

}  // namespace

std::string IndexResult::render() const {
  switch (kind) {
    case Kind::Exact: return exact.to_string();
    case Kind::Poly: return poly.render();
    case Kind::Approx: break;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", approx);
  return buf;
}

std::optional<double> IndexResult::to_double() const {
  switch (kind) {
    case Kind::Exact: return exact.to_double();
    case Kind::Poly: return std::nullopt;
    case Kind::Approx: break;
  }
  return approx;
}

bool operator==(const IndexResult& a, const IndexResult& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case IndexResult::Kind::Exact: return a.exact == b.exact;
    case IndexResult::Kind::Poly: return a.poly == b.poly;
    case IndexResult::Kind::Approx: break;
  }
  return a.approx == b.approx && a.radicand == b.radicand;
}

EvalContext::EvalContext(const Graph& g, std::size_t domination_max) : g_(g), domination_max_(domination_max) {}

const FunctionalTable& EvalContext::table(DegreeSource s) {
  auto& slot = tables_[static_cast<std::size_t>(s)];
  if (!slot) slot = vertex_table(g_, s, domination_max_);
  return *slot;
}

const EdgeValues& EvalContext::values(DegreeSource s) {
  auto& slot = edge_values_[static_cast<std::size_t>(s)];
  if (!slot) {
    slot = s == DegreeSource::Banhatti ? endpoint_values(g_, s, domination_max_) : endpoint_values(g_, table(s));
  }
  return *slot;
}

const FunctionalTable& EvalContext::closeness() {
  if (!closeness_) closeness_ = topoidx::closeness(g_);
  return *closeness_;
}

const FunctionalTable& EvalContext::cl_degree() {
  if (!cl_) cl_ = topoidx::cl_degree(g_);
  return *cl_;
}

Rat kernel(Variant v, const Rat& a, const Rat& b) {
  switch (v) {
    case Variant::V1: return a * a + b * b + a * b;
    case Variant::V2: return a * a + b * b - a * b;
    case Variant::V3: {
      const Rat& hi = a < b ? b : a;
      const Rat& lo = a < b ? a : b;
      return hi - lo + hi * lo;
    }
    case Variant::V4: return (a - b).abs() * a * b;
  }
  return Rat();
}

IndexResult evaluate(const Graph& g, const IndexDescriptor& d, std::size_t domination_max) {
  EvalContext ctx(g, domination_max);
  return evaluate(ctx, d);
}

IndexResult evaluate(EvalContext& ctx, const IndexDescriptor& d) {
  const auto& vals = ctx.values(d.source);
  const auto& edges = ctx.graph().edges();
  const bool sum = d.aggregation == Aggregation::Sum;

  if (d.form == Form::Exponential) {
    ExpPoly poly;
    Rat exponent_total;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto term = apply(d.transform, kernel(d.variant, vals[i].first, vals[i].second), edges[i]);
      if (!term.exact) {
        throw Error(ErrorCode::UnsupportedEvaluation,
                    "irrational exponent on edge " + edge_label(edges[i]) + " under power " +
                        d.transform.power.to_short_string());
      }
      if (sum) {
        poly.add_term(*term.exact, BigInt(1));
      } else {
        exponent_total += *term.exact;
      }
    }
    return IndexResult::of(sum ? poly : ExpPoly::monomial(exponent_total));
  }

  Rat exact = sum ? Rat(0) : Rat(1);
  double approx = sum ? 0.0 : 1.0;
  bool is_exact = true;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto term = apply(d.transform, kernel(d.variant, vals[i].first, vals[i].second), edges[i]);
    const double x = term.exact ? term.exact->to_double() : term.approx;
    if (sum) {
      approx += x;
      if (term.exact) exact += *term.exact;
    } else {
      approx *= x;
      if (term.exact) exact *= *term.exact;
    }
    is_exact = is_exact && term.exact.has_value();
  }
  return is_exact ? IndexResult::of(exact) : IndexResult::approximate(approx);
}

}  // namespace topoidx
