#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "topoidx/exactnum.hpp"
#include "topoidx/functionals.hpp"
#include "topoidx/graph.hpp"

namespace topoidx {

/// Per-edge kernels on endpoint values a, b.
///   V1: a^2 + b^2 + ab
///   V2: a^2 + b^2 - ab
///   V3: (hi - lo) + hi*lo with hi = max(a, b)
///   V4: |a - b| * ab
enum class Variant { V1 = 1, V2, V3, V4 };

enum class TransformKind { Identity, Hyper, Inverse, General };

struct Transform {
  TransformKind kind = TransformKind::Identity;
  Rat power;  // only meaningful for General

  static Transform identity() { return {}; }
  static Transform hyper() { return {TransformKind::Hyper, Rat(2)}; }
  static Transform inverse() { return {TransformKind::Inverse, Rat(-1)}; }
  static Transform general(const Rat& a) { return {TransformKind::General, a}; }

  friend bool operator==(const Transform&, const Transform&) = default;
};

enum class Aggregation { Sum, Product };
enum class Form { Value, Exponential };

struct IndexDescriptor {
  DegreeSource source = DegreeSource::Plain;
  Variant variant = Variant::V1;
  Transform transform;
  Aggregation aggregation = Aggregation::Sum;
  Form form = Form::Value;

  friend bool operator==(const IndexDescriptor&, const IndexDescriptor&) = default;
};

enum class SpecialIndex {
  RL5, RL6, RL7, RL8, RL9, RL10, RL11, RL12, RL13, RL14, RL15, RL16, RL17, Heronian
};

inline constexpr std::array<SpecialIndex, 14> kAllSpecials{
    SpecialIndex::RL5,  SpecialIndex::RL6,  SpecialIndex::RL7,  SpecialIndex::RL8,  SpecialIndex::RL9,
    SpecialIndex::RL10, SpecialIndex::RL11, SpecialIndex::RL12, SpecialIndex::RL13, SpecialIndex::RL14,
    SpecialIndex::RL15, SpecialIndex::RL16, SpecialIndex::RL17, SpecialIndex::Heronian};

std::string_view special_name(SpecialIndex s);

/// Exact rational, exact polynomial, or a float for irrational values.
struct IndexResult {
  enum class Kind { Exact, Poly, Approx };

  Kind kind = Kind::Exact;
  Rat exact;
  ExpPoly poly;
  double approx = 0.0;
  /// For square-root indices that fall back to Approx: the exact sum of the
  /// per-edge radicands.
  std::optional<Rat> radicand;

  static IndexResult of(Rat r) { return {Kind::Exact, std::move(r), {}, 0.0, std::nullopt}; }
  static IndexResult of(ExpPoly p) { return {Kind::Poly, {}, std::move(p), 0.0, std::nullopt}; }
  static IndexResult approximate(double v) { return {Kind::Approx, {}, {}, v, std::nullopt}; }

  /// "num/den", the polynomial rendering, or the float with 17 significant digits.
  std::string render() const;
  /// Float approximation; polynomials have none and return nullopt.
  std::optional<double> to_double() const;

  friend bool operator==(const IndexResult& a, const IndexResult& b);
};

/// Caches functional tables for one graph so many indices can share them.
/// Not thread-safe; use one context per thread.
class EvalContext {
 public:
  explicit EvalContext(const Graph& g, std::size_t domination_max = kDefaultDominationMax);

  const Graph& graph() const { return g_; }
  std::size_t domination_max() const { return domination_max_; }
  const EdgeValues& values(DegreeSource s);
  const FunctionalTable& table(DegreeSource s);
  const FunctionalTable& closeness();
  const FunctionalTable& cl_degree();

 private:
  const Graph& g_;
  std::size_t domination_max_;
  std::array<std::optional<EdgeValues>, 7> edge_values_;
  std::array<std::optional<FunctionalTable>, 7> tables_;
  std::optional<FunctionalTable> closeness_;
  std::optional<FunctionalTable> cl_;
};

/// Kernel of `v` on endpoint values (a, b).
Rat kernel(Variant v, const Rat& a, const Rat& b);

IndexResult evaluate(const Graph& g, const IndexDescriptor& d,
                     std::size_t domination_max = kDefaultDominationMax);
IndexResult evaluate(EvalContext& ctx, const IndexDescriptor& d);

IndexResult special_index(const Graph& g, SpecialIndex which);
IndexResult special_index(EvalContext& ctx, SpecialIndex which);

}  // namespace topoidx
