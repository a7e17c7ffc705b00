// Command-line front end for the RVT word and critical-plane engine.
// Exit codes: 0 success, 1 invalid word, 2 internal cross-check mismatch,
// 64 usage errors.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "monster/render.hpp"

namespace {

enum class Format { Text, Json };

struct Options {
  Format format = Format::Text;
  std::string out_path;
};

std::ostream& output_stream(const Options& opts, std::unique_ptr<std::ofstream>& file) {
  if (opts.out_path.empty()) return std::cout;
  file = std::make_unique<std::ofstream>(opts.out_path);
  if (!*file) throw std::runtime_error("cannot open output file: " + opts.out_path);
  return *file;
}

// Parses and validates, reporting machine-readable errors on stderr.
// Returns nullopt after printing the diagnostic; caller exits 1.
std::optional<monster::ValidWord> require_word(const std::string& text, const Options& opts) {
  auto parsed = monster::parse_word(text);
  if (auto* err = std::get_if<monster::ParseError>(&parsed)) {
    if (opts.format == Format::Json) {
      monster::ordered_json j;
      j["error"] = "parse";
      j["position"] = err->position;
      j["message"] = err->message;
      std::cerr << j.dump() << "\n";
    } else {
      std::cerr << "parse error at position " << err->position << ": " << err->message << "\n";
    }
    return std::nullopt;
  }
  auto checked = monster::validate(std::get<monster::RvtWord>(std::move(parsed)));
  if (auto* err = std::get_if<monster::SpellingError>(&checked)) {
    if (opts.format == Format::Json) {
      monster::ordered_json j;
      j["error"] = "spelling";
      j["position"] = err->position;
      j["expected"] = monster::letters_json(err->expected);
      std::cerr << j.dump() << "\n";
    } else {
      std::cerr << err->to_string() << "\n";
    }
    return std::nullopt;
  }
  return std::get<monster::ValidWord>(std::move(checked));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RVT words of the R^3 Monster Tower: spelling rules, Kumpera-Rubin charts, "
               "and critical-plane configurations"};
  app.require_subcommand(1);
  app.fallthrough();  // global --format/--out may follow the subcommand

  Options opts;
  std::string format_name = "text";
  app.add_option("--format", format_name, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", opts.out_path, "write output to a file instead of stdout");

  std::string word_text;
  int level = 1;
  int max_m = 2;
  int max_s = 3;
  bool with_trace = false;
  bool use_reference = false;
  bool use_derived = false;

  auto* cmd_validate = app.add_subcommand("validate", "check a word against the spelling rules");
  cmd_validate->add_option("word", word_text)->required();

  auto* cmd_letters = app.add_subcommand("letters", "letters that may follow a word");
  cmd_letters->add_option("word", word_text)->required();

  auto* cmd_count = app.add_subcommand("count", "number of valid words of a given length");
  cmd_count->add_option("--level", level, "word length")->required();

  auto* cmd_enum = app.add_subcommand("enum", "list valid words of a given length");
  cmd_enum->add_option("--level", level, "word length")->required();

  auto* cmd_planes = app.add_subcommand("planes", "critical-plane configuration over a word");
  cmd_planes->add_option("word", word_text)->required();
  cmd_planes->add_flag("--trace", with_trace, "include per-level traces and vanishing vectors");

  auto* cmd_pfaffian = app.add_subcommand("pfaffian", "Pfaffian system of a word's distribution");
  cmd_pfaffian->add_option("word", word_text)->required();

  auto* cmd_automaton = app.add_subcommand("automaton", "print the spelling automaton");
  cmd_automaton->add_flag("--derived", use_derived, "re-derive from the critical-plane engine");
  cmd_automaton->add_flag("--reference", use_reference, "print the reference table");

  auto* cmd_table2 = app.add_subcommand("table2", "run the incidence-relation grid harness");
  cmd_table2->add_option("--max-m", max_m, "largest T-run parameter m");
  cmd_table2->add_option("--max-s", max_s, "largest L-run parameter s");

  auto* cmd_dot = app.add_subcommand("dot", "Baby Monster traces as a DOT graph");
  cmd_dot->add_option("word", word_text)->required();

  auto* cmd_rc = app.add_subcommand("rc", "coarse regular/critical code of a word");
  cmd_rc->add_option("word", word_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }
  opts.format = format_name == "json" ? Format::Json : Format::Text;

  std::unique_ptr<std::ofstream> file;
  try {
    std::ostream& os = output_stream(opts, file);

    if (cmd_validate->parsed()) {
      auto word = require_word(word_text, opts);
      if (!word) return 1;
      if (opts.format == Format::Json) {
        monster::ordered_json j;
        j["valid"] = true;
        j["word"] = monster::word_json(word->word());
        os << j.dump() << "\n";
      } else {
        os << "valid\n";
      }
      return 0;
    }

    if (cmd_letters->parsed()) {
      auto word = require_word(word_text, opts);
      if (!word) return 1;
      const auto allowed = monster::allowed_letters(monster::terminal_state(*word));
      if (opts.format == Format::Json)
        os << monster::letters_json(allowed).dump() << "\n";
      else
        os << monster::letters_line(allowed) << "\n";
      return 0;
    }

    if (cmd_count->parsed()) {
      const auto count = monster::count_words(level);
      if (opts.format == Format::Json) {
        monster::ordered_json j;
        j["level"] = level;
        j["count"] = count.to_string();
        os << j.dump() << "\n";
      } else {
        os << count.to_string() << "\n";
      }
      return 0;
    }

    if (cmd_enum->parsed()) {
      if (opts.format == Format::Json) {
        monster::ordered_json arr = monster::ordered_json::array();
        monster::enumerate_words(level, [&](const monster::ValidWord& w) {
          arr.push_back(monster::word_json(w.word()));
        });
        os << arr.dump() << "\n";
      } else {
        monster::enumerate_words(
            level, [&](const monster::ValidWord& w) { os << w.to_string() << "\n"; });
      }
      return 0;
    }

    if (cmd_planes->parsed()) {
      auto word = require_word(word_text, opts);
      if (!word) return 1;
      const auto cfg = monster::configuration(*word);
      if (opts.format == Format::Json)
        os << monster::planes_json(cfg, with_trace).dump() << "\n";
      else
        os << monster::planes_text(cfg, with_trace);
      return 0;
    }

    if (cmd_pfaffian->parsed()) {
      auto word = require_word(word_text, opts);
      if (!word) return 1;
      const auto system = monster::pfaffian_system(*word);
      if (opts.format == Format::Json)
        os << monster::pfaffian_json(system).dump() << "\n";
      else
        os << monster::pfaffian_text(system);
      return 0;
    }

    if (cmd_automaton->parsed()) {
      if (use_reference && use_derived) {
        std::cerr << "choose one of --derived or --reference\n";
        return 64;
      }
      const auto automaton =
          use_reference ? monster::reference_automaton() : monster::derive_spelling_automaton();
      if (opts.format == Format::Json)
        os << monster::automaton_json(automaton).dump() << "\n";
      else
        os << monster::automaton_text(automaton);
      return 0;
    }

    if (cmd_table2->parsed()) {
      const auto report = monster::table2_grid(max_m, max_s);
      if (opts.format == Format::Json)
        os << monster::table2_json(report).dump() << "\n";
      else
        os << monster::table2_text(report);
      return report.all_rows_pass() ? 0 : 2;
    }

    if (cmd_dot->parsed()) {
      auto word = require_word(word_text, opts);
      if (!word) return 1;
      os << monster::dot_graph(monster::configuration(*word));
      return 0;
    }

    if (cmd_rc->parsed()) {
      auto word = require_word(word_text, opts);
      if (!word) return 1;
      const auto rc = monster::rc_code(*word);
      if (opts.format == Format::Json) {
        monster::ordered_json j;
        j["word"] = monster::word_json(word->word());
        j["rc"] = rc.to_string();
        os << j.dump() << "\n";
      } else {
        os << rc.to_string() << "\n";
      }
      return 0;
    }
  } catch (const monster::InternalError& e) {
    std::cerr << "internal cross-check mismatch: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  }
  return 64;
}
