#include "topoidx/registry.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <regex>

#include "topoidx/error.hpp"

namespace topoidx {

namespace {

char source_letter(DegreeSource s) {
  switch (s) {
    case DegreeSource::Banhatti: return 'B';
    case DegreeSource::Revan: return 'R';
    case DegreeSource::Domination: return 'D';
    case DegreeSource::Temperature: return 'T';
    case DegreeSource::NbdSum: return 'N';
    case DegreeSource::Plain:
    case DegreeSource::KV: break;
  }
  return 0;
}

DegreeSource source_from_letter(char c) {
  switch (c) {
    case 'B': return DegreeSource::Banhatti;
    case 'R': return DegreeSource::Revan;
    case 'D': return DegreeSource::Domination;
    case 'T': return DegreeSource::Temperature;
    case 'N': return DegreeSource::NbdSum;
    default: return DegreeSource::Plain;
  }
}

const std::array<std::pair<std::string_view, SpecialIndex>, 25> kSpecialAliases{{
    {"RL5", SpecialIndex::RL5},        {"RL6", SpecialIndex::RL6},   {"RL7", SpecialIndex::RL7},
    {"RL8", SpecialIndex::RL8},        {"RL9", SpecialIndex::RL9},   {"RL10", SpecialIndex::RL10},
    {"RL11", SpecialIndex::RL11},      {"RL12", SpecialIndex::RL12}, {"RL13", SpecialIndex::RL13},
    {"RL14", SpecialIndex::RL14},      {"RL15", SpecialIndex::RL15}, {"RL16", SpecialIndex::RL16},
    {"RL17", SpecialIndex::RL17},      {"HERONIANRL", SpecialIndex::Heronian},
    {"HRL", SpecialIndex::Heronian},   {"C1", SpecialIndex::RL7},    {"C2", SpecialIndex::RL8},
    {"FC", SpecialIndex::RL9},         {"CSO", SpecialIndex::RL10},  {"CN", SpecialIndex::RL11},
    {"AC", SpecialIndex::RL12},        {"FRL", SpecialIndex::RL15},  {"SCL", SpecialIndex::RL16},
    {"NCL", SpecialIndex::RL17},       {"HERONIAN", SpecialIndex::Heronian},
}};

std::string normalize(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || std::isspace(static_cast<unsigned char>(c))) continue;
    out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return out;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

[[noreturn]] void unknown(std::string_view name) {
  const std::string key = normalize(name);
  std::string best;
  std::size_t best_d = SIZE_MAX;
  for (const auto& e : registry()) {
    auto d = edit_distance(key, normalize(e.name));
    if (d < best_d) {
      best_d = d;
      best = e.name;
    }
  }
  throw Error(ErrorCode::UnknownIndexName,
              "unknown index '" + std::string(name) + "'" + (best.empty() ? "" : "; did you mean " + best + "?"));
}

}  // namespace

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::V1: return "V1";
    case Variant::V2: return "V2";
    case Variant::V3: return "V3";
    case Variant::V4: return "V4";
  }
  return "?";
}

std::string transform_name(const Transform& t) {
  switch (t.kind) {
    case TransformKind::Identity: return "identity";
    case TransformKind::Hyper: return "hyper";
    case TransformKind::Inverse: return "inverse";
    case TransformKind::General: break;
  }
  return "general(a=" + t.power.to_short_string() + ")";
}

std::string_view aggregation_name(Aggregation a) { return a == Aggregation::Sum ? "sum" : "product"; }

std::string_view form_name(Form f) { return f == Form::Value ? "value" : "exponential"; }

std::string canonical_name(const IndexDescriptor& d) {
  std::string out;
  if (d.aggregation == Aggregation::Product) out += 'M';
  switch (d.transform.kind) {
    case TransformKind::Identity: break;
    case TransformKind::Hyper: out += 'H'; break;
    case TransformKind::Inverse: out += 'I'; break;
    case TransformKind::General: out += 'G'; break;
  }
  if (char c = source_letter(d.source)) out += c;
  out += d.source == DegreeSource::KV ? "RLKV" : "RL";
  out += std::to_string(static_cast<int>(d.variant));
  if (d.form == Form::Exponential) out += "_exp";
  if (d.transform.kind == TransformKind::General && d.transform.power != kDefaultGeneralPower) {
    out += "(a=" + d.transform.power.to_short_string() + ")";
  }
  return out;
}

std::string canonical_name(const IndexTarget& t) {
  if (const auto* d = std::get_if<IndexDescriptor>(&t)) return canonical_name(*d);
  return std::string(special_name(std::get<SpecialIndex>(t)));
}

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = [] {
    std::vector<RegistryEntry> out;
    const std::array<Transform, 4> transforms{Transform::identity(), Transform::hyper(), Transform::inverse(),
                                              Transform::general(kDefaultGeneralPower)};
    for (auto source : kAllSources) {
      for (auto agg : {Aggregation::Sum, Aggregation::Product}) {
        for (const auto& t : transforms) {
          for (auto form : {Form::Value, Form::Exponential}) {
            for (int v = 1; v <= 4; ++v) {
              IndexDescriptor d{source, static_cast<Variant>(v), t, agg, form};
              out.push_back({canonical_name(d), d});
            }
          }
        }
      }
    }
    for (auto s : kAllSpecials) out.push_back({std::string(special_name(s)), s});
    return out;
  }();
  return entries;
}

IndexTarget lookup_index(std::string_view name) {
  std::string_view rest = name;
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);
  bool exponential = false;
  std::optional<Rat> power;

  while (!rest.empty() && rest.back() == ')') {
    auto open = rest.rfind('(');
    if (open == std::string_view::npos) unknown(name);
    std::string inner;
    for (char c : rest.substr(open + 1, rest.size() - open - 2)) {
      if (!std::isspace(static_cast<unsigned char>(c))) inner.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (inner == "x" || inner == "g,x") {
      exponential = true;
    } else if (inner.rfind("a=", 0) == 0 && !power) {
      try {
        power = Rat::parse(inner.substr(2));
      } catch (const Error&) {
        unknown(name);
      }
    } else {
      unknown(name);
    }
    rest = rest.substr(0, open);
  }

  std::string key = normalize(rest);
  if (key.size() > 3 && key.ends_with("EXP")) {
    exponential = true;
    key.resize(key.size() - 3);
  }

  for (const auto& [alias, which] : kSpecialAliases) {
    if (key == alias) {
      if (exponential || power) unknown(name);
      return which;
    }
  }

  static const std::regex pattern("^(M?)([HIG]?)(M?)([BRDTN]?)RL(KV)?([1-4])$");
  std::smatch m;
  if (!std::regex_match(key, m, pattern)) unknown(name);
  if (m[1].length() && m[3].length()) unknown(name);
  if (m[5].length() && m[4].length()) unknown(name);

  IndexDescriptor d;
  d.aggregation = (m[1].length() || m[3].length()) ? Aggregation::Product : Aggregation::Sum;
  d.source = m[5].length() ? DegreeSource::KV : source_from_letter(m[4].length() ? m[4].str()[0] : 0);
  d.variant = static_cast<Variant>(m[6].str()[0] - '0');
  d.form = exponential ? Form::Exponential : Form::Value;
  const std::string t = m[2].str();
  if (t == "H") {
    d.transform = Transform::hyper();
  } else if (t == "I") {
    d.transform = Transform::inverse();
  } else if (t == "G") {
    d.transform = Transform::general(power.value_or(kDefaultGeneralPower));
  }
  if (power && t != "G") unknown(name);
  return d;
}

std::string describe(const RegistryEntry& e) {
  if (const auto* d = std::get_if<IndexDescriptor>(&e.target)) {
    return e.name + "," + std::string(source_name(d->source)) + "," + std::string(variant_name(d->variant)) + "," +
           transform_name(d->transform) + "," + std::string(aggregation_name(d->aggregation)) + "," +
           std::string(form_name(d->form));
  }
  const auto s = std::get<SpecialIndex>(e.target);
  std::string_view source = "plain";
  if (s >= SpecialIndex::RL7 && s <= SpecialIndex::RL12) source = "closeness";
  if (s >= SpecialIndex::RL13 && s <= SpecialIndex::RL17) source = "cl";
  return e.name + "," + std::string(source) + ",special,identity,sum,value";
}

IndexResult compute(EvalContext& ctx, const IndexTarget& t) {
  if (const auto* d = std::get_if<IndexDescriptor>(&t)) return evaluate(ctx, *d);
  return special_index(ctx, std::get<SpecialIndex>(t));
}

}  // namespace topoidx
