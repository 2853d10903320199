#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "topoidx/index_engine.hpp"

namespace topoidx {

using IndexTarget = std::variant<IndexDescriptor, SpecialIndex>;

/// Power used by general indices named without "(a=...)".
inline const Rat kDefaultGeneralPower{3};

struct RegistryEntry {
  std::string name;
  IndexTarget target;
};

/// All 448 catalog descriptors followed by the 14 special indices.
const std::vector<RegistryEntry>& registry();

/// Resolves a registry name, case-insensitively and ignoring underscores.
///   [M][H|I|G]{|B|R|D|T|N}RL<1-4>      e.g. HBRL2, MIRRL1
///   [M][H|I|G]RLKV<1-4>                e.g. MHRLKV2
///   suffix "_exp", "(x)" or "(G,x)"    exponential form
///   suffix "(a=<rational>)"            power of a general index
///   RL5..RL17, HeronianRL (HRL), C1, C2, FC, CSO, CN, AC, FRL, SCL, NCL
/// Throws UnknownIndexName with the closest known name.
IndexTarget lookup_index(std::string_view name);

std::string canonical_name(const IndexDescriptor& d);
std::string canonical_name(const IndexTarget& t);

std::string_view variant_name(Variant v);
std::string transform_name(const Transform& t);
std::string_view aggregation_name(Aggregation a);
std::string_view form_name(Form f);

/// Catalog line: name,source,variant,transform,aggregation,form
std::string describe(const RegistryEntry& e);

IndexResult compute(EvalContext& ctx, const IndexTarget& t);

}  // namespace topoidx
