#include "etheta/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "etheta/axioms.hpp"
#include "etheta/claims.hpp"
#include "etheta/docio.hpp"
#include "etheta/engine.hpp"
#include "etheta/enumerate.hpp"
#include "etheta/error.hpp"
#include "etheta/maps.hpp"
#include "etheta/operators.hpp"

namespace etheta {

namespace {

bool jsonl(const RunConfig& c) { return c.format == "json-lines"; }

std::string label_array(const FiniteSpace& space, PointSet s) {
  std::string out = "[";
  bool first = true;
  for (int i = 0; i < space.size(); ++i)
    if (s.has(i)) {
      if (!first) out += ",";
      out += "\"" + json_escape(space.point_names()[i]) + "\"";
      first = false;
    }
  return out + "]";
}

int resolve_worker_config(const RunConfig& c) {
  if (c.workers > 0) return c.workers;
  if (const char* env = std::getenv("ETHETA_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;  // engine falls back to hardware concurrency
}

std::vector<FamilyKind> selected_families(const std::string& arg) {
  std::vector<FamilyKind> kinds;
  if (arg == "all") {
    for (FamilyKind k : all_family_kinds()) kinds.push_back(k);
    return kinds;
  }
  std::istringstream in(arg);
  std::string name;
  while (std::getline(in, name, ',')) {
    const auto kind = parse_family_kind(name);
    if (!kind) throw Error(ErrorCode::ParseError, "unknown family \"" + name + "\"");
    kinds.push_back(*kind);
  }
  return kinds;
}

int cmd_analyze(const RunConfig& c, std::ostream& out) {
  if (c.inputs.size() != 1)
    throw Error(ErrorCode::ParseError, "analyze expects one space document");
  const FiniteSpace space = load_space_file(c.inputs[0]);
  const OperatorTable table(space);

  if (!c.families_arg.empty()) {
    for (FamilyKind kind : selected_families(c.families_arg)) {
      const SetFamily& fam = table.family(kind);
      if (jsonl(c)) {
        std::string line = "{\"family\":\"" + std::string(to_string(kind)) + "\",\"members\":[";
        bool first = true;
        for (PointSet s : fam) {
          if (!first) line += ",";
          line += label_array(space, s);
          first = false;
        }
        out << line << "]}\n";
      } else {
        out << to_string(kind) << " (" << fam.size() << "):";
        for (PointSet s : fam) out << " " << space.label_of(s);
        out << "\n";
      }
    }
    if (!c.set_given && c.op_arg.empty()) return 0;
  }

  std::vector<PointSet> sets;
  if (c.set_given) {
    sets.push_back(set_from_arg(space, c.set_arg));
  } else {
    if (space.size() > 5)
      throw Error(ErrorCode::CarrierTooLarge,
                  "printing all subsets needs at most 5 points; pass --set");
    sets = canonical_subsets(space.size());
  }
  std::vector<OperatorKind> ops;
  if (!c.op_arg.empty()) {
    const auto kind = parse_operator_kind(c.op_arg);
    if (!kind) throw Error(ErrorCode::ParseError, "unknown operator \"" + c.op_arg + "\"");
    ops.push_back(*kind);
  } else {
    for (OperatorKind k : all_operator_kinds()) ops.push_back(k);
  }

  for (PointSet a : sets) {
    if (jsonl(c)) {
      std::string line = "{\"set\":" + label_array(space, a) + ",\"operators\":{";
      for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i) line += ",";
        line += "\"" + std::string(to_string(ops[i])) + "\":" +
                label_array(space, table.apply(ops[i], a));
      }
      line += "},\"families\":{";
      bool first = true;
      for (FamilyKind kind : all_family_kinds()) {
        if (!first) line += ",";
        line += "\"" + std::string(to_string(kind)) + "\":" +
                (table.in_family(kind, a) ? "true" : "false");
        first = false;
      }
      out << line << "}}\n";
    } else {
      out << "set " << space.label_of(a) << "\n";
      for (OperatorKind op : ops)
        out << "  " << std::left << std::setw(14) << to_string(op) << " -> "
            << space.label_of(table.apply(op, a)) << "\n";
      out << "  member of:";
      for (FamilyKind kind : all_family_kinds())
        if (table.in_family(kind, a)) out << " " << to_string(kind);
      out << "\n";
    }
  }
  return 0;
}

int cmd_axioms(const RunConfig& c, std::ostream& out) {
  if (c.inputs.size() != 1)
    throw Error(ErrorCode::ParseError, "axioms expects one space document");
  const FiniteSpace space = load_space_file(c.inputs[0]);
  const OperatorTable table(space);
  const AxiomReport report = evaluate_axioms(table);
  const auto& kinds = all_axiom_kinds();
  for (int i = 0; i < kAxiomKindCount; ++i) {
    const auto& v = report.verdicts[i];
    if (jsonl(c)) {
      std::string line = "{\"axiom\":\"" + std::string(to_string(kinds[i])) + "\",\"holds\":" +
                         (v.holds ? "true" : "false") + ",\"witness\":";
      line += v.holds ? "null" : ("\"" + json_escape(v.witness) + "\"");
      out << line << "}\n";
    } else {
      out << std::left << std::setw(24) << to_string(kinds[i]) << (v.holds ? "true" : "false");
      if (!v.holds) out << "  [" << v.witness << "]";
      out << "\n";
    }
  }
  if (jsonl(c))
    out << "{\"cc-points\":" << label_array(space, report.cc_points) << "}\n";
  else
    out << std::left << std::setw(24) << "cc-points" << space.label_of(report.cc_points) << "\n";
  return 0;
}

int cmd_map(const RunConfig& c, std::ostream& out) {
  SpaceMap map = [&] {
    if (c.inputs.size() == 1 && c.map_arg.empty()) return load_map_file(c.inputs[0]);
    if (c.inputs.size() == 2 && !c.map_arg.empty()) {
      FiniteSpace domain = load_space_file(c.inputs[0]);
      FiniteSpace codomain = load_space_file(c.inputs[1]);
      return map_from_assoc_arg(domain, codomain, c.map_arg);
    }
    throw Error(ErrorCode::ParseError,
                "map expects a map document, or two space documents plus --map");
  }();
  const OperatorTable dom(map.domain());
  const OperatorTable cod(map.codomain());
  const MapPropertyReport report = evaluate_map_properties(map, dom, cod);
  const auto& kinds = all_map_property_kinds();
  for (int i = 0; i < kMapPropertyKindCount; ++i) {
    const auto& v = report.verdicts[i];
    if (jsonl(c)) {
      std::string line = "{\"property\":\"" + std::string(to_string(kinds[i])) +
                         "\",\"holds\":" + (v.holds ? "true" : "false") + ",\"witness\":";
      line += v.holds ? "null" : ("\"" + json_escape(v.witness) + "\"");
      out << line << "}\n";
    } else {
      out << std::left << std::setw(32) << to_string(kinds[i]) << (v.holds ? "true" : "false");
      if (!v.holds) out << "  [" << v.witness << "]";
      out << "\n";
    }
  }
  return 0;
}

int cmd_enumerate(const RunConfig& c, std::ostream& out) {
  const int n = c.points > 0 ? c.points : c.max_points;
  TopologyEnumerator e(n, c.t0_only);
  e.for_each([&](const FiniteSpace& s) { out << serialize_space(to_document(s), true) << "\n"; });
  return 0;
}

void print_report(const RunConfig& c, const ClaimReport& r, std::ostream& out) {
  if (jsonl(c)) {
    out << serialize_report(r) << "\n";
    return;
  }
  out << std::left << std::setw(44) << r.id;
  if (!r.error.empty()) {
    out << "ERROR  " << r.error << "\n";
    return;
  }
  out << std::setw(22) << to_string(r.status) << " total=" << r.total
      << " substantive=" << r.substantive << " vacuous=" << r.vacuous << "  ("
      << std::fixed << std::setprecision(1) << r.wall_ms << " ms)";
  if (r.witness) {
    out << "\n  !! witness: " << r.witness->summary;
    for (const auto& [k, v] : r.witness->fields) out << "\n     " << k << " = " << v;
  }
  out << "\n";
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  ClaimBounds bounds;
  bounds.max_points = c.max_points;
  bounds.max_map_points = c.max_map_points > 0 ? c.max_map_points : std::min(3, c.max_points);
  bounds.workers = resolve_worker_config(c);
  bounds.budget_instances = c.budget;
  Universe universe;

  if (c.list_claims) {
    for (const auto& spec : claim_catalog()) {
      if (jsonl(c))
        out << "{\"claim\":\"" << json_escape(spec.id) << "\",\"tier\":\""
            << to_string(spec.tier) << "\",\"statement\":\"" << json_escape(spec.statement)
            << "\"}\n";
      else
        out << std::left << std::setw(44) << spec.id << std::setw(7) << to_string(spec.tier)
            << spec.statement << "\n";
    }
    return 0;
  }

  if (!c.claim_arg.empty()) {
    ClaimCursor cursor;
    const ClaimCursor* resume = nullptr;
    if (!c.resume_path.empty()) {
      std::ifstream in(c.resume_path);
      if (in) {
        std::ostringstream buf;
        buf << in.rdbuf();
        cursor = parse_cursor(buf.str());
        resume = &cursor;
      }
    }
    const RunOutcome outcome = run_claim(c.claim_arg, bounds, universe, resume);
    if (outcome.cursor) {
      const std::string serialized = serialize_cursor(*outcome.cursor);
      if (!c.resume_path.empty()) {
        std::ofstream cursor_out(c.resume_path, std::ios::trunc);
        cursor_out << serialized << "\n";
      }
      out << serialized << "\n";
      return 3;
    }
    print_report(c, *outcome.report, out);
    if (outcome.report->tier == ClaimTier::Core &&
        outcome.report->status == ClaimStatus::Refuted)
      return 2;
    return 0;
  }

  const auto reports = run_suite(bounds, universe);
  for (const auto& r : reports) print_report(c, r, out);
  return core_tier_failed(reports) ? 2 : 0;
}

}  // namespace

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "analyze") return cmd_analyze(config, out);
    if (config.command == "axioms") return cmd_axioms(config, out);
    if (config.command == "map") return cmd_map(config, out);
    if (config.command == "enumerate") return cmd_enumerate(config, out);
    if (config.command == "verify") return cmd_verify(config, out);
    throw Error(ErrorCode::ParseError, "unknown command \"" + config.command + "\"");
  } catch (const Error& e) {
    err << "etheta: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace etheta
