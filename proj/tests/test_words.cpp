#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "monster/verify.hpp"
#include "monster/words.hpp"

using namespace monster;

namespace {

RvtWord parsed(std::string_view text) {
  auto result = parse_word(text);
  REQUIRE(std::holds_alternative<RvtWord>(result));
  return std::get<RvtWord>(result);
}

ParseError parse_failure(std::string_view text) {
  auto result = parse_word(text);
  REQUIRE(std::holds_alternative<ParseError>(result));
  return std::get<ParseError>(result);
}

SpellingError spelling_failure(std::string_view text) {
  auto checked = validate(parsed(text));
  REQUIRE(std::holds_alternative<SpellingError>(checked));
  return std::get<SpellingError>(checked);
}

}  // namespace

TEST_CASE("parse accepts subscripts, aliases and single spaces") {
  CHECK(parsed("RVLT2").letters() ==
        std::vector<Letter>{Letter::R, Letter::V, Letter::L1, Letter::T2});
  CHECK(parsed("R").letters() == std::vector<Letter>{Letter::R});
  CHECK(parsed("RVT1L1") == parsed("RVTL"));
  CHECK(parsed("R V L1 T2") == parsed("RVL1T2"));
  CHECK(parsed("RVL1T2").to_string() == "RVL1T2");
  CHECK(parsed("RVTL").to_string() == "RVT1L1");  // canonical form spells subscripts
}

TEST_CASE("parse reports the offending position") {
  CHECK(parse_failure("RVX").position == 3);
  CHECK(parse_failure("").position == 1);
  CHECK(parse_failure("RVT3").position == 4);  // the digit binds to T and breaks it
  CHECK(parse_failure("RL4").position == 3);
  CHECK(parse_failure("R  V").position == 3);  // only single separator spaces
  CHECK(parse_failure("R ").position == 2);
  CHECK(parse_failure("rv").position == 1);  // case-sensitive
}

TEST_CASE("allowed letters per plane configuration") {
  CHECK(allowed_letters(PlaneSet{}) == std::vector<Letter>{Letter::R});
  CHECK(allowed_letters(PlaneSet{true, false, false}) ==
        std::vector<Letter>{Letter::R, Letter::V});
  CHECK(allowed_letters(PlaneSet{true, true, false}) ==
        std::vector<Letter>{Letter::R, Letter::V, Letter::T1, Letter::L1});
  CHECK(allowed_letters(PlaneSet{true, false, true}) ==
        std::vector<Letter>{Letter::R, Letter::V, Letter::T2, Letter::L3});
  CHECK(allowed_letters(PlaneSet{true, true, true}).size() == 7);
}

TEST_CASE("step_state follows the reference transitions") {
  CHECK(step_state(PlaneSet{true, false, false}, Letter::V) == PlaneSet{true, true, false});
  CHECK(step_state(PlaneSet{true, true, false}, Letter::L1) == PlaneSet{true, true, true});
  CHECK(step_state(PlaneSet{true, true, true}, Letter::T2) == PlaneSet{true, false, true});
  CHECK_THROWS_AS(step_state(PlaneSet{true, false, false}, Letter::T1), IllegalLetterError);
  CHECK_THROWS_AS(step_state(PlaneSet{}, Letter::V), IllegalLetterError);
}

TEST_CASE("validate matches the worked allowable and rejected codes") {
  for (const char* ok : {"RRRR", "RVT1", "RVL", "RRVVT1", "RVL1T2", "RVVT", "RVLT2R", "RVLL2"})
    CHECK(std::holds_alternative<ValidWord>(validate(parsed(ok))));

  auto err = spelling_failure("RRT1");
  CHECK(err.position == 3);
  CHECK(err.expected == std::vector<Letter>{Letter::R, Letter::V});

  err = spelling_failure("RVT2");
  CHECK(err.position == 3);
  CHECK(err.expected == std::vector<Letter>{Letter::R, Letter::V, Letter::T1, Letter::L1});

  CHECK(spelling_failure("RVRL2").position == 4);
  CHECK(spelling_failure("RTL").position == 2);
  CHECK(spelling_failure("RLT2").position == 2);
  CHECK(spelling_failure("VR").position == 1);

  auto empty = validate(RvtWord{});
  REQUIRE(std::holds_alternative<SpellingError>(empty));
  CHECK(std::get<SpellingError>(empty).position == 1);
}

TEST_CASE("word counts: census against the brute-force oracle") {
  // Frozen constants confirmed by the oracle before pinning.
  const std::vector<std::uint64_t> expected = {1, 2, 6, 23, 98};
  for (std::size_t k = 1; k <= expected.size(); ++k) {
    CHECK(brute_force_words(static_cast<int>(k)).size() == expected[k - 1]);
    CHECK(count_words(static_cast<int>(k)) == BigNat(expected[k - 1]));
  }
  CHECK_THROWS_AS(count_words(0), std::invalid_argument);
}

TEST_CASE("count equals enumeration length up to level 10") {
  for (int k = 1; k <= 10; ++k) {
    std::uint64_t n = 0;
    enumerate_words(k, [&](const ValidWord&) { ++n; });
    CHECK(count_words(k) == BigNat(n));
  }
}

TEST_CASE("count stays exact at depths past 64-bit range") {
  // ~4.49x growth per level; level 120 is far beyond any fixed width.
  const auto big = count_words(120);
  CHECK(big.to_string().size() > 20);
  CHECK_FALSE(big.fits_uint64());
}

TEST_CASE("enumeration order is lexicographic in the letter order") {
  const auto k2 = enumerate_words(2);
  REQUIRE(k2.size() == 2);
  CHECK(k2[0].to_string() == "RR");
  CHECK(k2[1].to_string() == "RV");

  const auto k3 = enumerate_words(3);
  REQUIRE(k3.size() == 6);
  const std::vector<std::string> expected = {"RRR", "RRV", "RVR", "RVV", "RVT1", "RVL1"};
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(k3[i].to_string() == expected[i]);

  const auto k4 = enumerate_words(4);
  REQUIRE(k4.size() == 23);
  CHECK(k4.front().to_string() == "RRRR");
  CHECK(k4.back().to_string() == "RVL1L3");
}

TEST_CASE("rc code collapses critical letters") {
  CHECK(rc_code(parse_valid("RVLT2")).to_string() == "RCCC");
  CHECK(rc_code(parse_valid("RRRR")).to_string() == "RRRR");
  CHECK(rc_code(parse_valid("RVVR")).to_string() == "RCCR");
}

TEST_CASE("project truncates to a valid prefix") {
  const auto word = parse_valid("RVLT2");
  CHECK(project(word, 3).to_string() == "RVL1");
  CHECK(project(word, 4) == word);
  CHECK(project(parse_valid("RRVV"), 1).to_string() == "R");
  CHECK_THROWS_AS(project(word, 0), std::out_of_range);
  CHECK_THROWS_AS(project(word, 5), std::out_of_range);
}

TEST_CASE("prefix closure and suffix extension") {
  for (int k = 2; k <= 7; ++k) {
    for (const auto& w : enumerate_words(k)) {
      for (std::size_t i = 1; i < w.size(); ++i)
        CHECK(std::holds_alternative<ValidWord>(validate(project(w, i).word())));
      const auto allowed = allowed_letters(terminal_state(w));
      REQUIRE_FALSE(allowed.empty());
      CHECK(allowed.front() == Letter::R);
      CHECK(letter_allowed(terminal_state(w), Letter::V));
    }
  }
}

TEST_CASE("rc code commutes with projection") {
  for (int k = 2; k <= 6; ++k) {
    for (const auto& w : enumerate_words(k)) {
      const auto full = rc_code(w);
      for (std::size_t i = 1; i <= w.size(); ++i) {
        const auto prefix_rc = rc_code(project(w, i));
        CHECK(std::equal(prefix_rc.symbols.begin(), prefix_rc.symbols.end(), full.symbols.begin()));
      }
    }
  }
}

TEST_CASE("per-letter census satisfies the transfer recurrence") {
  for (int k = 1; k <= 6; ++k) {
    std::map<Letter, std::uint64_t> ending_k, ending_next;
    for (const auto& w : brute_force_words(k)) ++ending_k[w.last()];
    for (const auto& w : brute_force_words(k + 1)) ++ending_next[w.last()];
    for (Letter b : kLetters) {
      std::uint64_t sum = 0;
      for (Letter a : kLetters)
        if (letter_allowed(landing_state(a), b)) sum += ending_k[a];
      CHECK(ending_next[b] == sum);
    }
  }
}

TEST_CASE("only four plane configurations are reachable") {
  std::set<std::string> seen;
  for (int k = 1; k <= 6; ++k)
    for (const auto& w : enumerate_words(k)) seen.insert(terminal_state(w).to_string());
  CHECK(seen == std::set<std::string>{"{V}", "{V,T1}", "{V,T2}", "{V,T1,T2}"});
}
