#pragma once

// Machine-readable reports. Every integer is written as a decimal string;
// parsing an emitted report yields the same typed values.

#include "gkc/classify.hpp"
#include "gkc/family.hpp"
#include "gkc/ktheory.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace gkc {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kUndecidedNote = "see Example (\u03b1 finite): K-theory does not decide";

// ---------------------------------------------------------------------------
// Family specs (the input schema)

namespace detail {

inline Integer integer_from(const json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
  if (j.is_number_unsigned()) return from_u64(j.get<std::uint64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

inline std::uint64_t u64_from(const json& j) { return to_u64(integer_from(j)); }

inline json opt_string(const std::optional<Integer>& z) { return z ? json(to_string(*z)) : json(nullptr); }

}  // namespace detail

inline TailSpec parse_tail(const std::string& text) {
  if (text == "zero") return TailSpec::zero();
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  if (colon == std::string::npos || (kind != "constant" && kind != "doubling"))
    throw ValidationError(ValidationCode::Malformed, "tail must be zero, constant:<c> or doubling:<c>, got '" +
                                                         text + "'");
  const Integer c = parse_integer(text.substr(colon + 1));
  return kind == "constant" ? TailSpec::constant(c) : TailSpec::doubling(c);
}

inline LoopCount parse_loop_count(const std::string& text) {
  if (text == "inf" || text == "infinity") return LoopCount::infinity();
  return LoopCount(parse_integer(text));
}

inline json tail_to_json(const TailSpec& t) {
  switch (t.kind) {
    case TailKind::Zero: return {{"kind", "zero"}};
    case TailKind::Constant: return {{"kind", "constant"}, {"c", to_string(t.c)}};
    case TailKind::Doubling: return {{"kind", "doubling"}, {"c", to_string(t.c)}};
  }
  return nullptr;
}

inline json spec_to_json(const FamilySpec& s) {
  json n = json::array();
  for (const auto& v : s.prefix) n.push_back(to_string(v));
  return {{"m", s.m.str()}, {"n", n}, {"tail", tail_to_json(s.tail)}};
}

/// Reads { "m": int | "inf", "n": [ints], "tail": {"kind", "c"?} } and validates it.
inline FamilySpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("n"))
    throw ValidationError(ValidationCode::Malformed, "spec needs fields m and n");
  const json& jm = j.at("m");
  LoopCount m = jm.is_string() ? parse_loop_count(jm.get<std::string>()) : LoopCount(detail::integer_from(jm));
  std::vector<Integer> prefix;
  for (const auto& v : j.at("n")) prefix.push_back(detail::integer_from(v));
  TailSpec tail;
  if (j.contains("tail") && !j.at("tail").is_null()) {
    const json& jt = j.at("tail");
    const std::string kind = jt.at("kind").get<std::string>();
    if (kind == "zero")
      tail = TailSpec::zero();
    else if (kind == "constant" || kind == "doubling")
      tail = parse_tail(kind + ":" + to_string(detail::integer_from(jt.at("c"))));
    else
      throw ValidationError(ValidationCode::Malformed, "unknown tail kind " + kind);
  }
  return validate_family(std::move(m), std::move(prefix), std::move(tail));
}

// ---------------------------------------------------------------------------
// Invariants

inline json group_to_json(const PreorderedGroup& pg) {
  const GroupDescriptor& g = pg.group();
  const ConeDescriptor& c = pg.cone();
  static const char* const group_tags[] = {"DyadicLine", "DyadicPlusFree", "DyadicPlusTorsion",
                                           "FreeZ",      "CyclicMod",      "Trivial"};
  static const char* const cone_tags[] = {"AllPositive", "AlphaCone", "StandardDyadicCone",
                                          "StandardIntegerCone", "Lexicographic"};
  json jg = {{"tag", group_tags[static_cast<int>(g.tag)]}, {"name", g.str()}};
  if (g.tag == GroupTag::DyadicPlusTorsion) jg["x"] = to_string(g.order);
  if (g.tag == GroupTag::CyclicMod) jg["modulus"] = to_string(g.order);
  json jc = {{"tag", cone_tags[static_cast<int>(c.tag)]}};
  if (c.tag == ConeTag::AllPositive) jc["withFullClass"] = c.with_full_class;
  if (c.tag == ConeTag::AlphaCone) jc["alpha"] = c.alpha.str();
  if (c.tag == ConeTag::Lexicographic) jc["idealAllPositive"] = c.ideal_all_positive;
  return {{"group", jg}, {"cone", jc}};
}

inline PreorderedGroup group_from_json(const json& j) {
  const json& jg = j.at("group");
  const json& jc = j.at("cone");
  const std::string gt = jg.at("tag").get<std::string>();
  GroupDescriptor g;
  if (gt == "DyadicLine") g = GroupDescriptor::dyadic_line();
  else if (gt == "DyadicPlusFree") g = GroupDescriptor::dyadic_plus_free();
  else if (gt == "DyadicPlusTorsion") g = GroupDescriptor::dyadic_plus_torsion(detail::integer_from(jg.at("x")));
  else if (gt == "FreeZ") g = GroupDescriptor::free_z();
  else if (gt == "CyclicMod") g = GroupDescriptor::cyclic(detail::integer_from(jg.at("modulus")));
  else if (gt == "Trivial") g = GroupDescriptor::trivial();
  else throw std::invalid_argument("unknown group tag " + gt);
  const std::string ct = jc.at("tag").get<std::string>();
  ConeDescriptor c;
  if (ct == "AllPositive") c = ConeDescriptor::all_positive(jc.at("withFullClass").get<bool>());
  else if (ct == "AlphaCone") c = ConeDescriptor::alpha_cone(parse_rational_or_infinity(jc.at("alpha").get<std::string>()));
  else if (ct == "StandardDyadicCone") c = ConeDescriptor::standard_dyadic();
  else if (ct == "StandardIntegerCone") c = ConeDescriptor::standard_integer();
  else if (ct == "Lexicographic") c = ConeDescriptor::lexicographic(jc.at("idealAllPositive").get<bool>());
  else throw std::invalid_argument("unknown cone tag " + ct);
  return PreorderedGroup(g, c);
}

inline json invariant_to_json(const SixTermInvariant& inv) {
  return {{"ideal", group_to_json(inv.ideal)},
          {"middle", group_to_json(inv.middle)},
          {"quotient", group_to_json(inv.quotient)},
          {"k1", {{"ideal", "0"}, {"middle", "0"}, {"quotient", "0"}}},
          {"caseTag", case_name(inv.case_tag)},
          {"indexMapZero", inv.index_map_zero}};
}

inline SixTermInvariant invariant_from_json(const json& j) {
  SixTermInvariant inv;
  inv.ideal = group_from_json(j.at("ideal"));
  inv.middle = group_from_json(j.at("middle"));
  inv.quotient = group_from_json(j.at("quotient"));
  inv.case_tag = parse_case(j.at("caseTag").get<std::string>());
  inv.index_map_zero = j.at("indexMapZero").get<bool>();
  return inv;
}

inline json scalars_to_json(const DerivedScalars& s) {
  return {{"alpha", s.alpha.str()},
          {"k", s.k ? json(std::to_string(*s.k)) : json(nullptr)},
          {"N", detail::opt_string(s.N)},
          {"x", detail::opt_string(s.x)},
          {"M", detail::opt_string(s.M)}};
}

inline DerivedScalars scalars_from_json(const json& j) {
  DerivedScalars s;
  s.alpha = parse_rational_or_infinity(j.at("alpha").get<std::string>());
  auto opt = [&](const char* key) -> std::optional<Integer> {
    if (j.at(key).is_null()) return std::nullopt;
    return detail::integer_from(j.at(key));
  };
  if (auto k = opt("k")) s.k = to_u64(*k);
  s.N = opt("N");
  s.x = opt("x");
  s.M = opt("M");
  return s;
}

// ---------------------------------------------------------------------------
// Reports

struct CompareResult {
  std::string mode;  // "exact" or "stable"
  IsoVerdict verdict;
  bool out_of_scope = false;
  friend bool operator==(const CompareResult&, const CompareResult&) = default;
};

struct ScanRow {
  std::uint64_t m = 0;
  ClassCounts counts;
  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

struct ScanResult {
  std::uint64_t max_m = 0;
  std::vector<ScanRow> rows;
  std::optional<std::uint64_t> smallest_divergent_m;
  friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

using Verdict = std::variant<std::monostate, FullnessVerdict, CompareResult, ScanResult>;

struct Report {
  std::string command;
  std::vector<std::string> argv;
  std::vector<FamilySpec> inputs;
  std::vector<DerivedScalars> scalars;       // one per input
  std::vector<SixTermInvariant> invariants;  // one per input
  Verdict verdict;
  std::string version = kVersion;

  friend bool operator==(const Report&, const Report&) = default;
};

namespace detail {

inline json verdict_to_json(const Verdict& v) {
  if (const auto* f = std::get_if<FullnessVerdict>(&v)) {
    json j = {{"stenotic", f->stenotic},
              {"kLexicographic", f->k_lexicographic},
              {"stabilizedFull", f->stabilized_full},
              {"unstabilized", f->unstabilized == Unstabilized::Full ? "Full" : "Unknown"}};
    if (f->unstabilized == Unstabilized::Unknown) j["note"] = kUndecidedNote;
    return j;
  }
  if (const auto* c = std::get_if<CompareResult>(&v))
    return {{"mode", c->mode},
            {"isomorphic", c->verdict.isomorphic},
            {"outOfScope", c->out_of_scope},
            {"reason", c->verdict.reason}};
  if (const auto* s = std::get_if<ScanResult>(&v)) {
    json rows = json::array();
    for (const auto& r : s->rows)
      rows.push_back({{"m", std::to_string(r.m)},
                      {"exactClasses", std::to_string(r.counts.exact)},
                      {"stableClasses", std::to_string(r.counts.stable)}});
    return {{"maxM", std::to_string(s->max_m)},
            {"rows", rows},
            {"smallestDivergentM",
             s->smallest_divergent_m ? json(std::to_string(*s->smallest_divergent_m)) : json(nullptr)}};
  }
  return nullptr;
}

inline json witness_to_json(const Verdict& v) {
  const auto* c = std::get_if<CompareResult>(&v);
  if (!c || !c->verdict.witness) return nullptr;
  const IsoWitness& w = *c->verdict.witness;
  return {{"l", std::to_string(w.ell)}, {"lPrime", std::to_string(w.ell_prime)}, {"unit", std::to_string(w.unit)}};
}

}  // namespace detail

/// Single-input commands carry "scalars" and "invariant" as objects; compare
/// carries arrays aligned with "inputs".
inline json report_to_json(const Report& r) {
  json j;
  j["command"] = r.command;
  j["argv"] = r.argv;
  json inputs = json::array();
  for (const auto& s : r.inputs) inputs.push_back(spec_to_json(s));
  j["inputs"] = inputs;
  json sc = json::array(), inv = json::array();
  for (const auto& s : r.scalars) sc.push_back(scalars_to_json(s));
  for (const auto& i : r.invariants) inv.push_back(invariant_to_json(i));
  const bool single = r.command != "compare";
  j["scalars"] = single ? (sc.empty() ? json(nullptr) : sc[0]) : sc;
  j["invariant"] = single ? (inv.empty() ? json(nullptr) : inv[0]) : inv;
  j["verdict"] = detail::verdict_to_json(r.verdict);
  j["witness"] = detail::witness_to_json(r.verdict);
  j["version"] = r.version;
  return j;
}

inline Report report_from_json(const json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.argv = j.at("argv").get<std::vector<std::string>>();
  for (const auto& s : j.at("inputs")) r.inputs.push_back(spec_from_json(s));
  auto each = [](const json& node, auto&& fn) {
    if (node.is_null()) return;
    if (node.is_array())
      for (const auto& e : node) fn(e);
    else
      fn(node);
  };
  each(j.at("scalars"), [&](const json& e) { r.scalars.push_back(scalars_from_json(e)); });
  each(j.at("invariant"), [&](const json& e) { r.invariants.push_back(invariant_from_json(e)); });

  const json& v = j.at("verdict");
  if (r.command == "fullness") {
    FullnessVerdict f;
    f.stenotic = v.at("stenotic").get<bool>();
    f.k_lexicographic = v.at("kLexicographic").get<bool>();
    f.stabilized_full = v.at("stabilizedFull").get<bool>();
    f.unstabilized = v.at("unstabilized").get<std::string>() == "Full" ? Unstabilized::Full : Unstabilized::Unknown;
    r.verdict = f;
  } else if (r.command == "compare") {
    CompareResult c;
    c.mode = v.at("mode").get<std::string>();
    c.verdict.isomorphic = v.at("isomorphic").get<bool>();
    c.verdict.reason = v.at("reason").get<std::string>();
    c.out_of_scope = v.at("outOfScope").get<bool>();
    const json& w = j.at("witness");
    if (!w.is_null())
      c.verdict.witness = IsoWitness{detail::u64_from(w.at("l")), detail::u64_from(w.at("lPrime")),
                                     detail::u64_from(w.at("unit"))};
    r.verdict = c;
  } else if (r.command == "scan") {
    ScanResult s;
    s.max_m = detail::u64_from(v.at("maxM"));
    for (const auto& row : v.at("rows"))
      s.rows.push_back({detail::u64_from(row.at("m")),
                        {detail::u64_from(row.at("exactClasses")), detail::u64_from(row.at("stableClasses"))}});
    if (!v.at("smallestDivergentM").is_null()) s.smallest_divergent_m = detail::u64_from(v.at("smallestDivergentM"));
    r.verdict = s;
  }
  r.version = j.at("version").get<std::string>();
  return r;
}

// ---------------------------------------------------------------------------
// Text rendering: one "path = value" line per JSON leaf.

inline std::map<std::string, std::string> flatten(const json& j) {
  std::map<std::string, std::string> out;
  auto walk = [&](auto&& self, const json& node, const std::string& path) -> void {
    if (node.is_object() && !node.empty()) {
      for (auto it = node.begin(); it != node.end(); ++it)
        self(self, it.value(), path.empty() ? it.key() : path + "." + it.key());
    } else if (node.is_array() && !node.empty()) {
      for (std::size_t i = 0; i < node.size(); ++i) self(self, node[i], path + "[" + std::to_string(i) + "]");
    } else if (node.is_string()) {
      out[path] = node.get<std::string>();
    } else {
      out[path] = node.dump();
    }
  };
  walk(walk, j, "");
  return out;
}

inline std::string render_text(const json& j) {
  std::ostringstream os;
  os << "# gkc " << j.value("command", std::string{}) << '\n';
  // Keep the JSON's field order rather than the map's.
  auto walk = [&](auto&& self, const json& node, const std::string& path) -> void {
    if (node.is_object() && !node.empty()) {
      for (auto it = node.begin(); it != node.end(); ++it)
        self(self, it.value(), path.empty() ? it.key() : path + "." + it.key());
    } else if (node.is_array() && !node.empty()) {
      for (std::size_t i = 0; i < node.size(); ++i) self(self, node[i], path + "[" + std::to_string(i) + "]");
    } else {
      os << path << " = " << (node.is_string() ? node.get<std::string>() : node.dump()) << '\n';
    }
  };
  walk(walk, j, "");
  return os.str();
}

/// Inverse of render_text, up to the leaf map.
inline std::map<std::string, std::string> parse_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) throw std::invalid_argument("malformed report line: " + line);
    out[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return out;
}

}  // namespace gkc
