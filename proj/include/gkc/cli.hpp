#pragma once

// Command dispatch for the gkc tool: invariant, fullness, compare, scan.
// Exit codes: 0 computed (negative verdicts included), 2 input or regime
// error, 3 internal disagreement between independent routes.

#include "gkc/classify.hpp"
#include "gkc/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace gkc {

enum ExitCode : int { kOk = 0, kInputError = 2, kInternalError = 3 };

/// "m=8,n=1,0,3,tail=constant:1" or a JSON object in the input schema.
inline FamilySpec parse_spec_argument(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ValidationError(ValidationCode::Malformed, std::string("bad JSON spec: ") + e.what());
    }
    return spec_from_json(j);
  }
  std::optional<LoopCount> m;
  std::vector<Integer> prefix;
  TailSpec tail;
  std::string key;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto eq = token.find('=');
    std::string value = token;
    if (eq != std::string::npos) {
      key = token.substr(0, eq);
      value = token.substr(eq + 1);
    }
    if (key == "m" && eq != std::string::npos) m = parse_loop_count(value);
    else if (key == "n") prefix.push_back(parse_integer(value));
    else if (key == "tail" && eq != std::string::npos) tail = parse_tail(value);
    else throw ValidationError(ValidationCode::Malformed, "cannot read '" + token + "' in spec '" + text + "'");
  }
  if (!m) throw ValidationError(ValidationCode::Malformed, "spec '" + text + "' has no m");
  return validate_family(std::move(*m), std::move(prefix), std::move(tail));
}

namespace detail {

struct SpecOptions {
  std::string m;
  std::string n;
  std::string tail = "zero";
  std::string spec;  // JSON text or @file
};

inline void add_spec_options(CLI::App* cmd, SpecOptions& o) {
  cmd->add_option("--m", o.m, "loop count at the distinguished vertex (integer or inf)");
  cmd->add_option("--n", o.n, "edge counts n_1,...,n_k (comma separated)");
  cmd->add_option("--tail", o.tail, "zero | constant:<c> | doubling:<c>");
  cmd->add_option("--spec", o.spec, "JSON spec, or @path to a JSON file");
}

inline FamilySpec spec_from_options(const SpecOptions& o) {
  if (!o.spec.empty()) {
    std::string text = o.spec;
    if (text.front() == '@') {
      std::ifstream in(text.substr(1));
      if (!in) throw ValidationError(ValidationCode::Malformed, "cannot open " + text.substr(1));
      text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return parse_spec_argument(text);
  }
  if (o.m.empty()) throw ValidationError(ValidationCode::Malformed, "--m is required");
  std::string text = "m=" + o.m;
  if (!o.n.empty()) text += ",n=" + o.n;
  text += ",tail=" + o.tail;
  return parse_spec_argument(text);
}

}  // namespace detail

inline void emit(const Report& r, const std::string& format, std::ostream& out) {
  const json j = report_to_json(r);
  if (format == "json")
    out << j.dump(2) << '\n';
  else
    out << render_text(j);
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact K-theory invariants and classification for the graph family G[m,(n_i)]", "gkc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  std::string format = "text";
  app.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  detail::SpecOptions inv_opts, full_opts;
  std::optional<std::size_t> depth;
  auto* inv_cmd = app.add_subcommand("invariant", "six-term K-theory invariant and derived scalars");
  detail::add_spec_options(inv_cmd, inv_opts);
  inv_cmd->add_option("--depth", depth, "truncation depth for the torsion oracle");
  auto* full_cmd = app.add_subcommand("fullness", "K-lexicographic / fullness verdict");
  detail::add_spec_options(full_cmd, full_opts);

  std::string spec_a, spec_b, mode = "exact";
  auto* cmp_cmd = app.add_subcommand("compare", "exact or stable isomorphism of two family members");
  cmp_cmd->add_option("--a", spec_a, "first spec, e.g. m=8,n=1")->required();
  cmp_cmd->add_option("--b", spec_b, "second spec")->required();
  cmp_cmd->add_option("--mode", mode, "exact | stable")->check(CLI::IsMember({"exact", "stable"}));

  std::uint64_t max_m = 20;
  auto* scan_cmd = app.add_subcommand("scan", "class counts per m and the smallest m where the notions differ");
  scan_cmd->add_option("--max-m", max_m, "largest m to scan")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{100000}));

  for (auto* c : {inv_cmd, full_cmd, cmp_cmd, scan_cmd})
    c->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  Report report;
  report.argv = args;
  try {
    if (inv_cmd->parsed()) {
      report.command = "invariant";
      const FamilySpec spec = detail::spec_from_options(inv_opts);
      const auto fi = invariant_of(spec, depth);
      report.inputs = {spec};
      report.scalars = {fi.scalars};
      report.invariants = {fi.invariant};
    } else if (full_cmd->parsed()) {
      report.command = "fullness";
      const FamilySpec spec = detail::spec_from_options(full_opts);
      const auto fi = invariant_of(spec);
      report.inputs = {spec};
      report.scalars = {fi.scalars};
      report.invariants = {fi.invariant};
      report.verdict = decide_fullness(spec);
    } else if (cmp_cmd->parsed()) {
      report.command = "compare";
      const FamilySpec a = parse_spec_argument(spec_a);
      const FamilySpec b = parse_spec_argument(spec_b);
      report.inputs = {a, b};
      CompareResult result{mode, {}, false};
      try {
        result.verdict = mode == "exact" ? exact_iso(a, b) : stable_iso(a, b);
        for (const auto& s : {a, b}) {
          const auto fi = invariant_of(s);
          report.scalars.push_back(fi.scalars);
          report.invariants.push_back(fi.invariant);
        }
      } catch (const OutOfScope& e) {
        result.out_of_scope = true;
        result.verdict.reason = e.what();
        for (const auto* fi : {&e.first(), &e.second()}) {
          report.scalars.push_back(fi->scalars);
          report.invariants.push_back(fi->invariant);
        }
        report.verdict = result;
        emit(report, format, out);
        err << "error: OutOfScope: " << e.what() << '\n';
        return kInputError;
      }
      report.verdict = result;
    } else {
      report.command = "scan";
      ScanResult scan;
      scan.max_m = max_m;
      for (std::uint64_t m = 2; m <= max_m; ++m) scan.rows.push_back({m, class_counts(m)});
      scan.smallest_divergent_m = smallest_divergence(max_m);
      report.verdict = scan;
    }
  } catch (const OracleDisagreement& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  emit(report, format, out);
  return kOk;
}

}  // namespace gkc
