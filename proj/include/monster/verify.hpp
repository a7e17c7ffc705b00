#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "monster/monsters.hpp"
#include "monster/words.hpp"

namespace monster {

/// Brute-force oracle: grows words breadth-first, re-validating every
/// candidate extension from scratch. Deliberately shares nothing with the
/// transfer-matrix census.
inline std::vector<ValidWord> brute_force_words(int level) {
  if (level < 1) throw std::invalid_argument("brute_force_words: level must be >= 1");
  if (level > 12) throw std::invalid_argument("brute_force_words: desk scale is level <= 12");
  std::vector<std::vector<Letter>> frontier{{}};
  for (int len = 1; len <= level; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& stem : frontier) {
      for (Letter l : kLetters) {
        std::vector<Letter> cand = stem;
        cand.push_back(l);
        if (std::holds_alternative<ValidWord>(validate(RvtWord(cand)))) next.push_back(std::move(cand));
      }
    }
    frontier = std::move(next);
  }
  std::vector<ValidWord> out;
  out.reserve(frontier.size());
  for (auto& letters : frontier)
    out.push_back(std::get<ValidWord>(validate(RvtWord(std::move(letters)))));
  return out;
}

struct CrossCheckReport {
  int max_level = 0;
  std::size_t words_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Engine-wide consistency sweep over every valid word up to max_level:
/// census vs oracle counts, forward/backward duality, automaton
/// re-derivation, terminal-letter law, and source uniqueness per form.
inline CrossCheckReport cross_check(int max_level) {
  CrossCheckReport report{max_level, 0, {}};
  auto fail = [&](std::string msg) { report.failures.push_back(std::move(msg)); };

  try {
    if (!(derive_spelling_automaton() == reference_automaton()))
      fail("derived automaton differs from the reference table");
  } catch (const InternalError& e) {
    fail(std::string("automaton derivation: ") + e.what());
  }

  for (int level = 1; level <= max_level; ++level) {
    const auto words = brute_force_words(level);
    if (!(count_words(level) == BigNat(words.size())))
      fail("count_words(" + std::to_string(level) + ") = " + count_words(level).to_string() +
           " but the oracle enumerates " + std::to_string(words.size()));
    for (const ValidWord& w : words) {
      ++report.words_checked;
      try {
        const PlaneConfiguration cfg = configuration(w);
        if (cfg.plane_set() != landing_state(w.last()))
          fail(w.to_string() + ": plane set is not determined by the terminal letter");
        if (cfg.t1_sources.size() > 1 || cfg.t2_sources.size() > 1)
          fail(w.to_string() + ": multiple Baby Monster sources report the same plane");
        for (PlaneForm form : {PlaneForm::T1, PlaneForm::T2}) {
          const auto& sources = (form == PlaneForm::T1) ? cfg.t1_sources : cfg.t2_sources;
          auto back = backward_identify(w, form);
          if (auto* rec = std::get_if<BabyMonsterRecord>(&back)) {
            if (sources.empty())
              fail(w.to_string() + ": backward walk finds " + rec->delta_name() + " [" +
                   std::string(to_string(form)) + "] with no forward survivor");
            else if (!(sources.front() == *rec))
              fail(w.to_string() + ": forward and backward records disagree for " +
                   std::string(to_string(form)));
          } else if (!sources.empty()) {
            fail(w.to_string() + ": forward survivor " + sources.front().delta_name() +
                 " [" + std::string(to_string(form)) + "] has no backward witness");
          }
        }
      } catch (const InternalError& e) {
        fail(w.to_string() + ": " + e.what());
      }
    }
  }
  return report;
}

// --- Table 2 harness ---------------------------------------------------------

struct DeltaIndex {
  int j = 0;  // prolongation count
  int i = 0;  // birth level
  std::string name() const { return "d" + std::to_string(j) + "_" + std::to_string(i); }
  friend bool operator==(const DeltaIndex&, const DeltaIndex&) = default;
};

// A formula for an expected Baby Monster source, in terms of the word length
// k, the undetermined-block length r, and the family parameters m and s.
// An empty result means the plane is expected absent.
using DeltaFormula = std::function<std::optional<DeltaIndex>(int k, int r, int m, int s)>;

struct Table2Row {
  std::string family;
  bool uses_m = false;
  bool uses_s = false;
  std::function<std::vector<Letter>(int m, int s)> suffix;
  DeltaFormula expect_t1;  // the checked reading (corrected for typo rows)
  DeltaFormula expect_t2;
  bool suspected_typo = false;
  std::string note;
  DeltaFormula printed_t2;  // printed reading, when it differs from expect_t2
};

namespace detail {

inline std::vector<Letter> suffix_letters(std::initializer_list<Letter> head, int t_count,
                                          std::initializer_list<Letter> tail) {
  std::vector<Letter> out(head);
  out.insert(out.end(), static_cast<std::size_t>(t_count), Letter::T1);
  out.insert(out.end(), tail);
  return out;
}

inline std::vector<Letter> l_run_suffix(int m, int s, std::initializer_list<Letter> tail) {
  std::vector<Letter> out{Letter::V};
  out.insert(out.end(), static_cast<std::size_t>(m), Letter::T1);
  out.insert(out.end(), static_cast<std::size_t>(s), Letter::L1);
  out.insert(out.end(), tail);
  return out;
}

}  // namespace detail

/// The incidence-relation table rows, one per family. Suffixes are appended
/// to a prefix word "R w'". Four rows carry corrected readings for printed
/// index errors; they are flagged, never silently rewritten.
inline std::vector<Table2Row> table2_rows() {
  using detail::l_run_suffix;
  using detail::suffix_letters;
  auto delta = [](int j, int i) { return std::optional<DeltaIndex>(DeltaIndex{j, i}); };
  auto absent = [](int, int, int, int) { return std::optional<DeltaIndex>(); };

  std::vector<Table2Row> rows;

  rows.push_back({"R w L1", false, false,
                  [](int, int) { return std::vector<Letter>{Letter::V, Letter::L1}; },
                  [delta](int k, int, int, int) { return delta(1, k - 1); },
                  [delta](int k, int, int, int) { return delta(2, k - 2); }, false,
                  "instantiated as ...VL1; the T2 index presumes L1 directly after V", nullptr});

  rows.push_back({"R w' V T^m L L2", true, false,
                  [](int m, int) { return suffix_letters({Letter::V}, m, {Letter::L1, Letter::L2}); },
                  [delta](int, int r, int m, int) { return delta(2, m + 2 + r); },
                  [delta](int, int r, int m, int) { return delta(m + 3, 1 + r); }, false, "", nullptr});

  rows.push_back({"R w' L L L2", false, false,
                  [](int, int) { return std::vector<Letter>{Letter::L1, Letter::L1, Letter::L2}; },
                  [delta](int k, int, int, int) { return delta(2, k - 2); },
                  [delta](int k, int, int, int) { return delta(3, k - 3); }, false, "", nullptr});

  rows.push_back({"R w' V T^m L L3", true, false,
                  [](int m, int) { return suffix_letters({Letter::V}, m, {Letter::L1, Letter::L3}); },
                  [delta](int k, int, int, int) { return delta(1, k - 1); },
                  [delta](int, int r, int m, int) { return delta(m + 3, r + 1); }, false, "", nullptr});

  rows.push_back({"R w' L L L3", false, false,
                  [](int, int) { return std::vector<Letter>{Letter::L1, Letter::L1, Letter::L3}; },
                  [delta](int k, int, int, int) { return delta(1, k - 1); },
                  [delta](int k, int, int, int) { return delta(3, k - 3); }, false, "", nullptr});

  rows.push_back({"R w' V T^m L T2 L3", true, false,
                  [](int m, int) {
                    return suffix_letters({Letter::V}, m, {Letter::L1, Letter::T2, Letter::L3});
                  },
                  [delta](int k, int, int, int) { return delta(1, k - 1); },
                  [delta](int, int r, int m, int) { return delta(m + 4, r + 1); }, false, "", nullptr});

  rows.push_back({"R w' L L T2 L3", false, false,
                  [](int, int) {
                    return std::vector<Letter>{Letter::L1, Letter::L1, Letter::T2, Letter::L3};
                  },
                  [delta](int k, int, int, int) { return delta(1, k - 1); },
                  [delta](int k, int, int, int) { return delta(4, k - 4); }, false, "", nullptr});

  rows.push_back({"R w' V T^m L L2 T2 L3", true, false,
                  [](int m, int) {
                    return suffix_letters({Letter::V}, m,
                                          {Letter::L1, Letter::L2, Letter::T2, Letter::L3});
                  },
                  [delta](int k, int, int, int) { return delta(1, k - 1); },
                  [delta](int, int r, int m, int) { return delta(m + 5, r + 1); }, true,
                  "suspected typo: printed T2 source d4_(m+r+2) dies crossing the T2 letter; "
                  "checked reading d(m+5)_(r+1) extends the L2 T2 row source through L3",
                  [delta](int, int r, int m, int) { return delta(4, m + r + 2); }});

  rows.push_back({"R w' V T^m L^s L2 T2 L3", true, true,
                  [](int m, int s) { return l_run_suffix(m, s, {Letter::L2, Letter::T2, Letter::L3}); },
                  [delta](int k, int, int, int) { return delta(1, k - 1); },
                  [delta](int, int r, int m, int s) { return delta(5, m + r + s); }, true,
                  "suspected typo: printed T2 source d4_(m+r+2) at p_(m+r+6) does not match the word "
                  "length; checked reading d5_(m+r+s) extends the L^s L2 T2 row source through L3",
                  [delta](int, int r, int m, int) { return delta(4, m + r + 2); }});

  rows.push_back({"R w' L T1", false, false,
                  [](int, int) { return std::vector<Letter>{Letter::L1, Letter::T1}; },
                  [delta](int k, int, int, int) { return delta(2, k - 2); }, absent, false, "",
                  nullptr});

  rows.push_back({"R w' L1 T1", false, false,
                  [](int, int) { return std::vector<Letter>{Letter::L1, Letter::T1}; },
                  [delta](int k, int, int, int) { return delta(2, k - 2); }, absent, false,
                  "duplicate of the L T1 row in the source table (L = L1)", nullptr});

  rows.push_back({"R w' L2 T1", false, false,
                  [](int, int) { return std::vector<Letter>{Letter::L1, Letter::L2, Letter::T1}; },
                  [delta](int k, int, int, int) { return delta(3, k - 3); }, absent, true,
                  "suspected typo: printed level index p_(k+3) is inconsistent with a length-k word "
                  "(i + j = k); checked under the p_k reading",
                  nullptr});

  rows.push_back({"R w' L3 T1", false, false,
                  [](int, int) { return std::vector<Letter>{Letter::L1, Letter::L3, Letter::T1}; },
                  [delta](int k, int, int, int) { return delta(2, k - 2); }, absent, false, "",
                  nullptr});

  rows.push_back({"R w' V T^m L T2", true, false,
                  [](int m, int) { return suffix_letters({Letter::V}, m, {Letter::L1, Letter::T2}); },
                  absent, [delta](int, int r, int m, int) { return delta(m + 3, 1 + r); }, false, "",
                  nullptr});

  rows.push_back({"R w' L L T2", false, false,
                  [](int, int) { return std::vector<Letter>{Letter::L1, Letter::L1, Letter::T2}; },
                  absent, [delta](int k, int, int, int) { return delta(3, k - 3); }, false, "",
                  nullptr});

  rows.push_back({"R w' V T^m L L2 T2", true, false,
                  [](int m, int) {
                    return suffix_letters({Letter::V}, m, {Letter::L1, Letter::L2, Letter::T2});
                  },
                  absent, [delta](int, int r, int m, int) { return delta(m + 4, r + 1); }, false, "",
                  nullptr});

  rows.push_back({"R w' V T^m L^s L2 T2", true, true,
                  [](int m, int s) { return l_run_suffix(m, s, {Letter::L2, Letter::T2}); }, absent,
                  [delta](int, int r, int m, int s) { return delta(4, r + m + s); }, false, "",
                  nullptr});

  rows.push_back({"R w' V T^m L L3 T2", true, false,
                  [](int m, int) {
                    return suffix_letters({Letter::V}, m, {Letter::L1, Letter::L3, Letter::T2});
                  },
                  absent, [delta](int, int r, int m, int) { return delta(m + 4, r + 1); }, false, "",
                  nullptr});

  rows.push_back({"R w' V T^m L^s L3 T2", true, true,
                  [](int m, int s) { return l_run_suffix(m, s, {Letter::L3, Letter::T2}); }, absent,
                  [delta](int, int r, int m, int s) { return delta(4, m + s + r); }, true,
                  "suspected typo: printed T2 source d3_(m+s+r) at p_(m+s+r+3) sits one level below "
                  "the length-(m+s+r+4) word; checked reading d4_(m+s+r)",
                  [delta](int, int r, int m, int s) { return delta(3, m + s + r); }});

  return rows;
}

struct Table2Instance {
  std::string family;
  std::string prefix;
  std::string word;
  int m = 0;
  int s = 0;
  std::string expected_t1;
  std::string expected_t2;
  std::string actual_t1;
  std::string actual_t2;
  bool pass = false;
};

struct Table2RowResult {
  std::string family;
  bool suspected_typo = false;
  std::string note;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t printed_reading_failures = 0;
  std::vector<Table2Instance> failing;
  std::vector<std::string> skipped_words;
};

struct VerificationReport {
  int max_m = 0;
  int max_s = 0;
  std::size_t prefix_count = 0;
  std::vector<Table2RowResult> rows;
  std::size_t total_instances = 0;
  std::size_t total_passed = 0;
  std::size_t total_failed = 0;
  std::size_t total_skipped = 0;
  bool all_rows_pass() const { return total_failed == 0; }
};

namespace detail {

inline std::string sources_text(const std::vector<BabyMonsterRecord>& sources) {
  if (sources.empty()) return "none";
  std::string out;
  for (const auto& r : sources) {
    if (!out.empty()) out += ',';
    out += r.delta_name();
  }
  return out;
}

inline std::string expectation_text(const std::optional<DeltaIndex>& e) {
  return e ? e->name() : "none";
}

inline bool expectation_met(const std::vector<BabyMonsterRecord>& sources,
                            const std::optional<DeltaIndex>& expected) {
  if (!expected) return sources.empty();
  return std::any_of(sources.begin(), sources.end(), [&](const BabyMonsterRecord& r) {
    return r.birth_level == expected->i && r.prolongations == expected->j;
  });
}

}  // namespace detail

/// Instantiates every table row over the parameter grid and every prefix,
/// skips unspellable words, and compares the engine's configuration against
/// the row formulas. Failures are data, not exceptions.
inline VerificationReport table2_grid(int max_m = 2, int max_s = 3,
                                      const std::vector<ValidWord>* prefixes = nullptr) {
  if (max_m < 0) throw std::invalid_argument("table2_grid: max_m must be >= 0");
  if (max_s < 2) throw std::invalid_argument("table2_grid: max_s must be >= 2");
  std::vector<ValidWord> default_prefixes;
  if (prefixes == nullptr) {
    for (int len = 1; len <= 4; ++len)
      for (auto& w : brute_force_words(len)) default_prefixes.push_back(std::move(w));
    prefixes = &default_prefixes;
  }

  VerificationReport report;
  report.max_m = max_m;
  report.max_s = max_s;
  report.prefix_count = prefixes->size();

  for (const Table2Row& row : table2_rows()) {
    Table2RowResult result;
    result.family = row.family;
    result.suspected_typo = row.suspected_typo;
    result.note = row.note;

    const int m_hi = row.uses_m ? max_m : 0;
    const int s_lo = 2;
    const int s_hi = row.uses_s ? max_s : 2;
    for (const ValidWord& prefix : *prefixes) {
      for (int m = 0; m <= m_hi; ++m) {
        for (int s = s_lo; s <= s_hi; ++s) {
          std::vector<Letter> letters = prefix.word().letters();
          for (Letter l : row.suffix(m, s)) letters.push_back(l);
          const std::string word_text = RvtWord(letters).to_string();
          auto checked = validate(RvtWord(std::move(letters)));
          if (std::holds_alternative<SpellingError>(checked)) {
            ++result.skipped;
            result.skipped_words.push_back(word_text);
            continue;
          }
          const ValidWord word = std::get<ValidWord>(std::move(checked));
          const int k = static_cast<int>(word.size());
          const int r = static_cast<int>(prefix.size()) - 1;
          const PlaneConfiguration cfg = configuration(word);
          const auto expected_t1 = row.expect_t1(k, r, m, s);
          const auto expected_t2 = row.expect_t2(k, r, m, s);
          const bool pass = detail::expectation_met(cfg.t1_sources, expected_t1) &&
                            detail::expectation_met(cfg.t2_sources, expected_t2);
          ++result.instances;
          if (pass) ++result.passed; else ++result.failed;
          if (row.printed_t2 &&
              !detail::expectation_met(cfg.t2_sources, row.printed_t2(k, r, m, s)))
            ++result.printed_reading_failures;
          if (!pass) {
            result.failing.push_back(Table2Instance{
                row.family, prefix.to_string(), word.to_string(), m, s,
                detail::expectation_text(expected_t1), detail::expectation_text(expected_t2),
                detail::sources_text(cfg.t1_sources), detail::sources_text(cfg.t2_sources), false});
          }
        }
      }
    }
    report.total_instances += result.instances;
    report.total_passed += result.passed;
    report.total_failed += result.failed;
    report.total_skipped += result.skipped;
    report.rows.push_back(std::move(result));
  }
  return report;
}

}  // namespace monster
