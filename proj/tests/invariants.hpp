#pragma once

#include <string>
#include <vector>

#include "support.hpp"
#include "topoidx/error.hpp"
#include "topoidx/registry.hpp"

namespace testsupport {

using namespace topoidx;

struct Failures {
  std::vector<std::string> items;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) items.push_back(what);
  }
  bool ok() const { return items.empty(); }
};

inline std::optional<IndexResult> try_eval(EvalContext& ctx, const IndexDescriptor& d, ErrorCode* code = nullptr) {
  try {
    return evaluate(ctx, d);
  } catch (const Error& e) {
    if (code) *code = e.code();
    return std::nullopt;
  }
}

inline std::vector<IndexDescriptor> catalog() {
  std::vector<IndexDescriptor> out;
  for (const auto& e : registry()) {
    if (const auto* d = std::get_if<IndexDescriptor>(&e.target)) out.push_back(*d);
  }
  return out;
}

inline bool out_of_bounds(const Graph& g, DegreeSource s) {
  return s == DegreeSource::Domination && g.vertex_count() > kDefaultDominationMax;
}

inline IndexDescriptor with(IndexDescriptor d, Transform t) {
  d.transform = t;
  return d;
}

// V1 - V2 = 2 sum ab and V1 + V2 = 2 sum (a^2 + b^2), for every source.
inline void check_zagreb(EvalContext& ctx, const std::string& label, Failures& f) {
  for (auto source : kAllSources) {
    if (out_of_bounds(ctx.graph(), source)) continue;
    const EdgeValues& ev = ctx.values(source);
    Rat ab, squares;
    for (const auto& [a, b] : ev) {
      ab += a * b;
      squares += a * a + b * b;
    }
    IndexDescriptor v1{source, Variant::V1, Transform::identity(), Aggregation::Sum, Form::Value};
    IndexDescriptor v2 = v1;
    v2.variant = Variant::V2;
    const Rat x = evaluate(ctx, v1).exact, y = evaluate(ctx, v2).exact;
    const std::string where = label + " " + std::string(source_name(source));
    f.expect(x - y == Rat(2) * ab, where + ": V1 - V2 != 2 sum ab");
    f.expect(x + y == Rat(2) * squares, where + ": V1 + V2 != 2 sum (a^2+b^2)");
  }
}

// Transform equivalences, exponential/value duality and the edge count at x = 1.
inline void check_transforms_and_duality(const Graph& g, EvalContext& ctx, const std::string& label, Failures& f) {
  for (const auto& d : catalog()) {
    if (out_of_bounds(g, d.source)) continue;
    const std::string where = label + " " + canonical_name(d);
    if (d.transform.kind == TransformKind::Hyper) {
      ErrorCode c1{}, c2{};
      auto a = try_eval(ctx, d, &c1);
      auto b = try_eval(ctx, with(d, Transform::general(Rat(2))), &c2);
      f.expect(a.has_value() == b.has_value() && (!a || *a == *b), where + ": hyper != general(2)");
    }
    if (d.transform.kind == TransformKind::Inverse) {
      ErrorCode c1{}, c2{};
      auto a = try_eval(ctx, d, &c1);
      auto b = try_eval(ctx, with(d, Transform::general(Rat(-1))), &c2);
      f.expect(a.has_value() == b.has_value(), where + ": inverse and general(-1) disagree on definedness");
      if (a && b) f.expect(*a == *b, where + ": inverse != general(-1)");
      if (!a) f.expect(c1 == ErrorCode::InverseUndefined, where + ": unexpected error kind");
    }
    if (d.form != Form::Exponential) continue;
    ErrorCode code{};
    auto poly = try_eval(ctx, d, &code);
    if (!poly) {
      f.expect(code == ErrorCode::InverseUndefined || code == ErrorCode::UnsupportedEvaluation,
               where + ": unexpected error " + std::string(error_code_name(code)));
      continue;
    }
    IndexDescriptor sum_value = d;
    sum_value.form = Form::Value;
    sum_value.aggregation = Aggregation::Sum;
    auto value = try_eval(ctx, sum_value);
    f.expect(value.has_value(), where + ": value form failed where the exponential succeeded");
    if (value && value->kind == IndexResult::Kind::Exact) {
      f.expect(poly->poly.derivative_at_one() == value->exact, where + ": p'(1) != value");
    }
    if (d.aggregation == Aggregation::Sum) {
      f.expect(poly->poly.eval(Rat(1)) == Rat(static_cast<long>(g.edge_count())), where + ": p(1) != |E|");
    } else {
      f.expect(poly->poly.size() <= 1, where + ": product exponential is not a monomial");
    }
  }
}

// V4 values and CL-based indices vanish; Revan equals Plain.
inline void check_regular(const Graph& g, EvalContext& ctx, const std::string& label, Failures& f) {
  for (const auto& d : catalog()) {
    const std::string where = label + " " + canonical_name(d);
    if (d.variant == Variant::V4 && d.form == Form::Value && d.source != DegreeSource::Domination &&
        d.transform.kind != TransformKind::Inverse && g.edge_count() > 0) {
      auto r = try_eval(ctx, d);
      f.expect(r && r->kind == IndexResult::Kind::Exact && r->exact.is_zero(), where + ": V4 not 0");
    }
    if (d.source == DegreeSource::Revan) {
      IndexDescriptor plain = d;
      plain.source = DegreeSource::Plain;
      ErrorCode c1{}, c2{};
      auto a = try_eval(ctx, d, &c1);
      auto b = try_eval(ctx, plain, &c2);
      f.expect(a.has_value() == b.has_value() && (!a || *a == *b), where + ": revan != plain");
    }
  }
  for (auto s : {SpecialIndex::RL13, SpecialIndex::RL14, SpecialIndex::RL15, SpecialIndex::RL16,
                 SpecialIndex::RL17}) {
    auto r = special_index(ctx, s);
    f.expect(r.kind == IndexResult::Kind::Exact && r.exact.is_zero(),
             label + " " + std::string(special_name(s)) + ": not 0");
  }
}

inline bool is_regular(const Graph& g) { return g.min_degree() == g.max_degree(); }

inline void check_graph(const Graph& g, const std::string& label, Failures& f) {
  EvalContext ctx(g);
  check_zagreb(ctx, label, f);
  check_transforms_and_duality(g, ctx, label, f);
  if (is_regular(g)) check_regular(g, ctx, label, f);
}

}  // namespace testsupport
