#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "monster/monsters.hpp"
#include "monster/verify.hpp"

// Stable text / JSON / DOT renderings of engine results. JSON uses insertion
// order so outputs are byte-deterministic for a given input.

namespace monster {

using ordered_json = nlohmann::ordered_json;

inline ordered_json word_json(const RvtWord& word) {
  ordered_json arr = ordered_json::array();
  for (Letter l : word.letters()) arr.push_back(std::string(to_string(l)));
  return arr;
}

inline std::string letters_line(const std::vector<Letter>& letters) {
  std::string out;
  for (Letter l : letters) {
    if (!out.empty()) out += ' ';
    out += to_string(l);
  }
  return out;
}

inline ordered_json letters_json(const std::vector<Letter>& letters) {
  ordered_json arr = ordered_json::array();
  for (Letter l : letters) arr.push_back(std::string(to_string(l)));
  return arr;
}

/// KR coordinate name at an index of a vanishing vector:
/// 0..2 are x, y, z; then u1, v1, u2, v2, ...
inline std::string vanishing_coordinate_name(std::size_t index) {
  switch (index) {
    case 0: return "x";
    case 1: return "y";
    case 2: return "z";
    default:
      break;
  }
  const bool is_u = (index % 2) == 1;
  const std::size_t level = is_u ? (index - 1) / 2 : (index - 2) / 2;
  return (is_u ? "u" : "v") + std::to_string(level);
}

inline std::string vanishing_entry_text(const std::vector<VanishState>& v, std::size_t index) {
  switch (v[index]) {
    case VanishState::IdenticallyZero: return "0";
    case VanishState::Undetermined: return "_";
    case VanishState::Active: return vanishing_coordinate_name(index);
  }
  return "?";
}

/// Renders a vanishing vector like "(0,0,0,_,_,u2,v2,0,v3,0,v4)": zero entries
/// as 0, undetermined as _, active coordinates by name.
inline std::string vanishing_text(const std::vector<VanishState>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ',';
    out += vanishing_entry_text(v, i);
  }
  return out + ")";
}

inline ordered_json vanishing_json(const std::vector<VanishState>& v) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < v.size(); ++i) arr.push_back(vanishing_entry_text(v, i));
  return arr;
}

inline ordered_json record_json(const BabyMonsterRecord& rec) {
  ordered_json j;
  j["delta"] = rec.delta_name();
  j["form"] = std::string(to_string(rec.pattern_at_top.form()));
  j["birth_level"] = rec.birth_level;
  j["prolongations"] = rec.prolongations;
  ordered_json trace = ordered_json::array();
  for (std::size_t idx = 0; idx < rec.trace.size(); ++idx) {
    ordered_json entry;
    entry["level"] = rec.birth_level + static_cast<int>(idx);
    entry["form"] = std::string(to_string(rec.trace[idx].form()));
    trace.push_back(std::move(entry));
  }
  j["trace"] = std::move(trace);
  j["vanishing"] = vanishing_json(rec.vanishing);
  return j;
}

inline std::vector<std::string> present_lines(const PlaneConfiguration& cfg) {
  std::vector<std::string> out;
  if (cfg.line_l1()) out.push_back("L1");
  if (cfg.line_l2()) out.push_back("L2");
  if (cfg.line_l3()) out.push_back("L3");
  return out;
}

inline ordered_json planes_json(const PlaneConfiguration& cfg, bool with_trace = false) {
  ordered_json j;
  j["word"] = word_json(cfg.word.word());
  ordered_json planes;
  planes["vertical"] = cfg.vertical.delta_name();
  ordered_json t1 = ordered_json::array();
  for (const auto& r : cfg.t1_sources) t1.push_back(r.delta_name());
  planes["t1"] = std::move(t1);
  ordered_json t2 = ordered_json::array();
  for (const auto& r : cfg.t2_sources) t2.push_back(r.delta_name());
  planes["t2"] = std::move(t2);
  j["planes"] = std::move(planes);
  ordered_json lines = ordered_json::array();
  for (const auto& l : present_lines(cfg)) lines.push_back(l);
  j["lines"] = std::move(lines);
  if (with_trace) {
    ordered_json sources = ordered_json::array();
    for (const auto& r : cfg.t1_sources) sources.push_back(record_json(r));
    for (const auto& r : cfg.t2_sources) sources.push_back(record_json(r));
    j["sources"] = std::move(sources);
    ordered_json dead = ordered_json::array();
    for (const auto& d : cfg.dead_branches) {
      ordered_json entry;
      entry["birth_level"] = d.birth_level;
      entry["dead_level"] = d.dead_level;
      entry["letter"] = std::string(to_string(d.blocking_letter));
      dead.push_back(std::move(entry));
    }
    j["dead"] = std::move(dead);
  }
  return j;
}

inline std::string trace_path_text(const BabyMonsterRecord& rec) {
  std::string out;
  for (std::size_t idx = 0; idx < rec.trace.size(); ++idx) {
    if (idx != 0) out += " ";
    out += to_string(rec.trace[idx].form());
    out += "@" + std::to_string(rec.birth_level + static_cast<int>(idx));
  }
  return out;
}

inline std::string planes_text(const PlaneConfiguration& cfg, bool with_trace = false) {
  std::string out;
  out += "word: " + cfg.word.to_string() + "\n";
  out += "level: " + std::to_string(cfg.word.size()) + "\n";
  std::string planes = "V";
  if (cfg.has_t1()) planes += " T1";
  if (cfg.has_t2()) planes += " T2";
  out += "planes: " + planes + "\n";
  out += "vertical: " + cfg.vertical.delta_name() + "\n";
  out += "t1: " + detail::sources_text(cfg.t1_sources) + "\n";
  out += "t2: " + detail::sources_text(cfg.t2_sources) + "\n";
  const auto lines = present_lines(cfg);
  out += "lines:";
  if (lines.empty()) out += " none";
  for (const auto& l : lines) out += " " + l;
  out += "\n";
  if (with_trace) {
    for (const auto* list : {&cfg.t1_sources, &cfg.t2_sources}) {
      for (const auto& r : *list) {
        out += "source " + r.delta_name() + " [" + std::string(to_string(r.pattern_at_top.form())) +
               "]: " + trace_path_text(r) + "\n";
        out += "  vanishing: " + vanishing_text(r.vanishing) + "\n";
      }
    }
    for (const auto& d : cfg.dead_branches)
      out += "dead: birth " + std::to_string(d.birth_level) + ", " + d.reason() + "\n";
  }
  return out;
}

inline ordered_json pfaffian_json(const std::vector<PfaffianConstraint>& constraints) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : constraints) {
    ordered_json entry;
    entry["num"] = c.numerator.name();
    entry["coef"] = c.coefficient.name();
    entry["div"] = c.divisor.name();
    arr.push_back(std::move(entry));
  }
  return arr;
}

inline std::string pfaffian_text(const std::vector<PfaffianConstraint>& constraints) {
  std::string out;
  for (const auto& c : constraints) out += c.to_string() + "\n";
  return out;
}

inline std::string automaton_text(const SpellingAutomaton& a) {
  std::string out;
  for (int s = 0; s < 5; ++s) {
    out += "state " + std::to_string(s) + " " +
           (s == kStateStart ? std::string("start") : a.state_planes[static_cast<std::size_t>(s)].to_string()) +
           ":";
    for (Letter l : a.allowed_at(s)) {
      out += " " + std::string(to_string(l)) + "->" +
             std::to_string(*a.edge[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)]);
    }
    out += "\n";
  }
  out += "letter-successor edges: " + std::to_string(a.successor_edge_count()) + "\n";
  return out;
}

inline ordered_json automaton_json(const SpellingAutomaton& a) {
  ordered_json j;
  ordered_json states = ordered_json::array();
  for (int s = 0; s < 5; ++s) {
    ordered_json state;
    state["id"] = s;
    ordered_json planes = ordered_json::array();
    const PlaneSet& p = a.state_planes[static_cast<std::size_t>(s)];
    if (p.vertical) planes.push_back("V");
    if (p.t1) planes.push_back("T1");
    if (p.t2) planes.push_back("T2");
    state["planes"] = std::move(planes);
    ordered_json edges;
    for (Letter l : a.allowed_at(s))
      edges[std::string(to_string(l))] =
          *a.edge[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)];
    state["edges"] = std::move(edges);
    states.push_back(std::move(state));
  }
  j["states"] = std::move(states);
  j["letter_successor_edges"] = a.successor_edge_count();
  return j;
}

inline std::string table2_text(const VerificationReport& report, bool list_failures = true) {
  std::string out = "table2 grid: max_m=" + std::to_string(report.max_m) +
                    " max_s=" + std::to_string(report.max_s) +
                    " prefixes=" + std::to_string(report.prefix_count) + "\n";
  for (const auto& row : report.rows) {
    out += (row.failed == 0 ? "PASS " : "FAIL ");
    out += row.family;
    if (row.suspected_typo) out += " [suspected typo]";
    out += "  instances=" + std::to_string(row.instances) + " pass=" + std::to_string(row.passed) +
           " fail=" + std::to_string(row.failed) + " skip=" + std::to_string(row.skipped);
    if (row.printed_reading_failures > 0)
      out += " printed-reading-failures=" + std::to_string(row.printed_reading_failures);
    out += "\n";
    if (!row.note.empty()) out += "  note: " + row.note + "\n";
    if (list_failures) {
      for (const auto& inst : row.failing)
        out += "  FAIL " + inst.word + " expected t1=" + inst.expected_t1 +
               " t2=" + inst.expected_t2 + " got t1=" + inst.actual_t1 + " t2=" + inst.actual_t2 +
               "\n";
    }
  }
  out += "total: rows=" + std::to_string(report.rows.size()) +
         " instances=" + std::to_string(report.total_instances) +
         " pass=" + std::to_string(report.total_passed) +
         " fail=" + std::to_string(report.total_failed) +
         " skip=" + std::to_string(report.total_skipped) + "\n";
  return out;
}

inline ordered_json table2_json(const VerificationReport& report) {
  ordered_json j;
  j["max_m"] = report.max_m;
  j["max_s"] = report.max_s;
  j["prefixes"] = report.prefix_count;
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json r;
    r["family"] = row.family;
    r["pass"] = row.failed == 0;
    r["suspected_typo"] = row.suspected_typo;
    if (!row.note.empty()) r["note"] = row.note;
    r["instances"] = row.instances;
    r["passed"] = row.passed;
    r["failed"] = row.failed;
    r["skipped"] = row.skipped;
    if (row.printed_reading_failures > 0)
      r["printed_reading_failures"] = row.printed_reading_failures;
    if (!row.failing.empty()) {
      ordered_json failing = ordered_json::array();
      for (const auto& inst : row.failing) {
        ordered_json f;
        f["word"] = inst.word;
        f["prefix"] = inst.prefix;
        f["m"] = inst.m;
        f["s"] = inst.s;
        f["expected_t1"] = inst.expected_t1;
        f["expected_t2"] = inst.expected_t2;
        f["actual_t1"] = inst.actual_t1;
        f["actual_t2"] = inst.actual_t2;
        failing.push_back(std::move(f));
      }
      r["failing"] = std::move(failing);
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["total_instances"] = report.total_instances;
  j["total_passed"] = report.total_passed;
  j["total_failed"] = report.total_failed;
  j["total_skipped"] = report.total_skipped;
  return j;
}

/// DOT graph of every Baby Monster trace over the word: one node per
/// (birth level, level) pattern, edges along prolongation, dead branches
/// dashed.
inline std::string dot_graph(const PlaneConfiguration& cfg) {
  const int k = static_cast<int>(cfg.word.size());
  std::string out = "digraph baby_monsters {\n";
  out += "  rankdir=LR;\n";
  out += "  labelloc=\"t\";\n";
  out += "  label=\"" + cfg.word.to_string() + "\";\n";
  out += "  node [shape=ellipse];\n";
  out += "  \"" + cfg.vertical.delta_name() + "\" [shape=box, label=\"" + cfg.vertical.delta_name() +
         " = V@" + std::to_string(k) + "\"];\n";
  auto emit_chain = [&](const BabyMonsterRecord& rec) {
    const std::string base = "b" + std::to_string(rec.birth_level) + "_";
    for (std::size_t idx = 0; idx < rec.trace.size(); ++idx) {
      const int level = rec.birth_level + static_cast<int>(idx);
      std::string label = std::string(to_string(rec.trace[idx].form())) + "@" + std::to_string(level);
      if (idx == 0) label = "birth " + std::to_string(rec.birth_level) + ": " + label;
      if (level == k) label = rec.delta_name() + " = " + label;
      out += "  \"" + base + std::to_string(level) + "\" [label=\"" + label + "\"];\n";
    }
    for (std::size_t idx = 1; idx < rec.trace.size(); ++idx) {
      const int level = rec.birth_level + static_cast<int>(idx);
      out += "  \"" + base + std::to_string(level - 1) + "\" -> \"" + base + std::to_string(level) +
             "\" [label=\"" + std::string(to_string(cfg.word.at(static_cast<std::size_t>(level)))) +
             "\"];\n";
    }
  };
  for (const auto& rec : cfg.t1_sources) emit_chain(rec);
  for (const auto& rec : cfg.t2_sources) emit_chain(rec);
  for (const auto& d : cfg.dead_branches) {
    const std::string base = "b" + std::to_string(d.birth_level) + "_";
    for (std::size_t idx = 0; idx < d.trace.size(); ++idx) {
      const int level = d.birth_level + static_cast<int>(idx);
      std::string label = std::string(to_string(d.trace[idx].form())) + "@" + std::to_string(level);
      if (idx == 0) label = "birth " + std::to_string(d.birth_level) + ": " + label;
      out += "  \"" + base + std::to_string(level) + "\" [label=\"" + label + "\"];\n";
    }
    for (std::size_t idx = 1; idx < d.trace.size(); ++idx) {
      const int level = d.birth_level + static_cast<int>(idx);
      out += "  \"" + base + std::to_string(level - 1) + "\" -> \"" + base + std::to_string(level) +
             "\" [label=\"" + std::string(to_string(cfg.word.at(static_cast<std::size_t>(level)))) +
             "\"];\n";
    }
    const std::string dead_id = base + "dead";
    out += "  \"" + dead_id + "\" [label=\"dead@" + std::to_string(d.dead_level) + "\", style=dashed];\n";
    out += "  \"" + base + std::to_string(d.dead_level - 1) + "\" -> \"" + dead_id + "\" [label=\"" +
           std::string(to_string(d.blocking_letter)) + "\", style=dashed];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace monster
