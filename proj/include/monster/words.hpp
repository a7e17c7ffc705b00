#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "monster/bignat.hpp"

namespace monster {

// The seven-letter RVT alphabet. The declaration order is the total order
// used for enumeration: R < V < T1 < T2 < L1 < L2 < L3.
enum class Letter : std::uint8_t { R = 0, V, T1, T2, L1, L2, L3 };

inline constexpr std::array<Letter, 7> kLetters = {
    Letter::R, Letter::V, Letter::T1, Letter::T2, Letter::L1, Letter::L2, Letter::L3};

constexpr std::string_view to_string(Letter l) {
  switch (l) {
    case Letter::R: return "R";
    case Letter::V: return "V";
    case Letter::T1: return "T1";
    case Letter::T2: return "T2";
    case Letter::L1: return "L1";
    case Letter::L2: return "L2";
    case Letter::L3: return "L3";
  }
  return "?";
}

// Which critical planes exist over a point: the vertical plane and up to two
// tangency planes. Over valid words only four nonempty values are reachable:
// {V}, {V,T1}, {V,T2} and {V,T1,T2}. The empty set is the start state.
struct PlaneSet {
  bool vertical = false;
  bool t1 = false;
  bool t2 = false;

  bool empty() const { return !vertical && !t1 && !t2; }

  std::string to_string() const {
    std::string out = "{";
    const char* sep = "";
    if (vertical) { out += sep; out += "V"; sep = ","; }
    if (t1) { out += sep; out += "T1"; sep = ","; }
    if (t2) { out += sep; out += "T2"; sep = ","; }
    return out + "}";
  }

  friend bool operator==(const PlaneSet&, const PlaneSet&) = default;
};

// A raw letter sequence. Spelling validity is a separate concern (ValidWord).
class RvtWord {
 public:
  RvtWord() = default;
  explicit RvtWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }

  /// Letter at a 1-based position.
  Letter at(std::size_t position) const {
    if (position < 1 || position > letters_.size())
      throw std::out_of_range("RvtWord::at: position out of range");
    return letters_[position - 1];
  }

  /// Canonical serialization with explicit subscripts, e.g. "RVL1T2".
  std::string to_string() const {
    std::string out;
    for (Letter l : letters_) out += monster::to_string(l);
    return out;
  }

  friend bool operator==(const RvtWord&, const RvtWord&) = default;

 private:
  std::vector<Letter> letters_;
};

struct ParseError {
  std::size_t position = 0;  // 1-based offset of the offending character
  std::string message;
};

// Tokenizes a word. Accepts the aliases T for T1 and L for L1; a digit always
// binds to the preceding T or L; single spaces between tokens are allowed.
// Does not check spelling validity.
inline std::variant<RvtWord, ParseError> parse_word(std::string_view text) {
  std::vector<Letter> letters;
  const std::size_t n = text.size();
  if (n == 0) return ParseError{1, "empty input"};
  std::size_t i = 0;
  while (i < n) {
    if (!letters.empty() && text[i] == ' ') {
      ++i;  // a single separator space
      if (i == n) return ParseError{i, "trailing space"};
    }
    const char c = text[i];
    switch (c) {
      case 'R': letters.push_back(Letter::R); ++i; break;
      case 'V': letters.push_back(Letter::V); ++i; break;
      case 'T':
      case 'L': {
        const char next = (i + 1 < n) ? text[i + 1] : '\0';
        if (next >= '0' && next <= '9') {
          Letter l;
          if (c == 'T' && next == '1') l = Letter::T1;
          else if (c == 'T' && next == '2') l = Letter::T2;
          else if (c == 'L' && next == '1') l = Letter::L1;
          else if (c == 'L' && next == '2') l = Letter::L2;
          else if (c == 'L' && next == '3') l = Letter::L3;
          else
            return ParseError{i + 2, std::string("invalid subscript '") + next + "' after '" + c + "'"};
          letters.push_back(l);
          i += 2;
        } else {
          letters.push_back(c == 'T' ? Letter::T1 : Letter::L1);
          ++i;
        }
        break;
      }
      default:
        return ParseError{i + 1, std::string("unknown token '") + c + "'"};
    }
  }
  return RvtWord{std::move(letters)};
}

// Letter admissibility is critical-plane existence: R is always allowed, V
// needs the vertical plane, T_i the matching tangency plane, and each L_j the
// corresponding intersection line of two planes.
inline bool letter_allowed(const PlaneSet& state, Letter letter) {
  switch (letter) {
    case Letter::R: return true;
    case Letter::V: return state.vertical;
    case Letter::T1: return state.t1;
    case Letter::T2: return state.t2;
    case Letter::L1: return state.vertical && state.t1;
    case Letter::L2: return state.t1 && state.t2;
    case Letter::L3: return state.vertical && state.t2;
  }
  return false;
}

/// Allowed next letters, in enumeration order.
inline std::vector<Letter> allowed_letters(const PlaneSet& state) {
  std::vector<Letter> out;
  for (Letter l : kLetters)
    if (letter_allowed(state, l)) out.push_back(l);
  return out;
}

// The plane configuration over the new point depends only on the letter along
// which it was chosen.
inline PlaneSet landing_state(Letter letter) {
  switch (letter) {
    case Letter::R: return PlaneSet{true, false, false};
    case Letter::V:
    case Letter::T1: return PlaneSet{true, true, false};
    case Letter::T2: return PlaneSet{true, false, true};
    case Letter::L1:
    case Letter::L2:
    case Letter::L3: return PlaneSet{true, true, true};
  }
  return PlaneSet{};
}

class IllegalLetterError : public std::invalid_argument {
 public:
  IllegalLetterError(const PlaneSet& state, Letter letter)
      : std::invalid_argument("letter " + std::string(to_string(letter)) +
                              " is not allowed from state " + state.to_string()),
        state(state),
        letter(letter) {}
  PlaneSet state;
  Letter letter;
};

/// Reference transition of the spelling automaton. Throws IllegalLetterError
/// when the letter is not admissible from the state.
inline PlaneSet step_state(const PlaneSet& state, Letter letter) {
  if (!letter_allowed(state, letter)) throw IllegalLetterError(state, letter);
  return landing_state(letter);
}

struct SpellingError {
  std::size_t position = 0;  // 1-based position of the first offending letter
  std::vector<Letter> expected;

  std::string to_string() const {
    std::string out = "spelling error at position " + std::to_string(position) + ": expected one of";
    for (Letter l : expected) { out += ' '; out += monster::to_string(l); }
    return out;
  }
};

class ValidWord;
std::variant<ValidWord, SpellingError> validate(RvtWord word);
ValidWord project(const ValidWord& word, std::size_t level);
void enumerate_words(int level, const std::function<void(const ValidWord&)>& emit);

// A word that has passed the spelling rules. The only way to obtain one is
// through validate() or an operation that preserves validity.
class ValidWord {
 public:
  const RvtWord& word() const { return word_; }
  std::size_t size() const { return word_.size(); }
  Letter at(std::size_t position) const { return word_.at(position); }
  Letter last() const { return word_.letters().back(); }
  std::string to_string() const { return word_.to_string(); }

  friend bool operator==(const ValidWord&, const ValidWord&) = default;

 private:
  explicit ValidWord(RvtWord w) : word_(std::move(w)) {}
  friend std::variant<ValidWord, SpellingError> validate(RvtWord word);
  friend ValidWord project(const ValidWord& word, std::size_t level);
  friend void enumerate_words(int level, const std::function<void(const ValidWord&)>& emit);
  RvtWord word_;
};

/// Checks a word against the spelling rules. On failure reports the first
/// offending position (1-based) and the letters allowed there. The empty word
/// is rejected.
inline std::variant<ValidWord, SpellingError> validate(RvtWord word) {
  PlaneSet state;
  const auto& letters = word.letters();
  if (letters.empty()) return SpellingError{1, allowed_letters(state)};
  for (std::size_t idx = 0; idx < letters.size(); ++idx) {
    if (!letter_allowed(state, letters[idx]))
      return SpellingError{idx + 1, allowed_letters(state)};
    state = landing_state(letters[idx]);
  }
  return ValidWord(std::move(word));
}

/// Parses and validates a trusted literal; throws std::invalid_argument on
/// any failure. Convenience for tests and internal fixtures.
inline ValidWord parse_valid(std::string_view text) {
  auto parsed = parse_word(text);
  if (auto* err = std::get_if<ParseError>(&parsed))
    throw std::invalid_argument("parse_valid(\"" + std::string(text) + "\"): " + err->message);
  auto checked = validate(std::get<RvtWord>(std::move(parsed)));
  if (auto* err = std::get_if<SpellingError>(&checked))
    throw std::invalid_argument("parse_valid(\"" + std::string(text) + "\"): " + err->to_string());
  return std::get<ValidWord>(std::move(checked));
}

/// Plane configuration over the word's terminal point, per the reference
/// automaton.
inline PlaneSet terminal_state(const ValidWord& word) { return landing_state(word.last()); }

/// Prefix of length `level`; mirrors the bundle projection on classes.
/// Prefixes of valid words are valid.
inline ValidWord project(const ValidWord& word, std::size_t level) {
  if (level < 1 || level > word.size())
    throw std::out_of_range("project: level out of range");
  std::vector<Letter> prefix(word.word().letters().begin(),
                             word.word().letters().begin() + static_cast<std::ptrdiff_t>(level));
  return ValidWord(RvtWord(std::move(prefix)));
}

enum class RcSymbol : std::uint8_t { R, C };

struct RcWord {
  std::vector<RcSymbol> symbols;

  std::string to_string() const {
    std::string out;
    for (RcSymbol s : symbols) out += (s == RcSymbol::R ? 'R' : 'C');
    return out;
  }

  friend bool operator==(const RcWord&, const RcWord&) = default;
};

/// Coarse regular/critical code: R stays R, every critical letter becomes C.
inline RcWord rc_code(const ValidWord& word) {
  RcWord rc;
  for (Letter l : word.word().letters())
    rc.symbols.push_back(l == Letter::R ? RcSymbol::R : RcSymbol::C);
  return rc;
}

// --- spelling automaton -----------------------------------------------------

// Canonical state numbering for the five-state automaton.
inline constexpr int kStateStart = 0;
inline constexpr int kStateV = 1;
inline constexpr int kStateVT1 = 2;
inline constexpr int kStateVT2 = 3;
inline constexpr int kStateVT1T2 = 4;

inline constexpr std::array<PlaneSet, 5> kStatePlanes = {
    PlaneSet{false, false, false}, PlaneSet{true, false, false}, PlaneSet{true, true, false},
    PlaneSet{true, false, true}, PlaneSet{true, true, true}};

/// Canonical id of a plane set, or -1 if it is not one of the five states.
inline int state_id(const PlaneSet& planes) {
  for (int s = 0; s < 5; ++s)
    if (kStatePlanes[static_cast<std::size_t>(s)] == planes) return s;
  return -1;
}

struct SpellingAutomaton {
  std::array<PlaneSet, 5> state_planes = kStatePlanes;
  // edge[state][letter] = target state, if the letter is admissible there
  std::array<std::array<std::optional<int>, 7>, 5> edge{};

  std::vector<Letter> allowed_at(int state) const {
    std::vector<Letter> out;
    for (Letter l : kLetters)
      if (edge[static_cast<std::size_t>(state)][static_cast<std::size_t>(l)]) out.push_back(l);
    return out;
  }

  /// Target state of a letter, from any state that admits it.
  std::optional<int> landing_of(Letter letter) const {
    for (int s = 0; s < 5; ++s)
      if (auto t = edge[static_cast<std::size_t>(s)][static_cast<std::size_t>(letter)]) return t;
    return std::nullopt;
  }

  /// Letter-successor edges: one per (preceding letter or word start, next
  /// letter) pair. The full automaton has 36.
  int successor_edge_count() const {
    int count = static_cast<int>(allowed_at(kStateStart).size());
    for (Letter l : kLetters)
      if (auto t = landing_of(l)) count += static_cast<int>(allowed_at(*t).size());
    return count;
  }

  friend bool operator==(const SpellingAutomaton&, const SpellingAutomaton&) = default;
};

/// The automaton encoding the spelling rules directly (rules 1-5).
inline SpellingAutomaton reference_automaton() {
  SpellingAutomaton a;
  for (int s = 0; s < 5; ++s)
    for (Letter l : allowed_letters(kStatePlanes[static_cast<std::size_t>(s)]))
      a.edge[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)] = state_id(landing_state(l));
  return a;
}

// --- counting and enumeration ------------------------------------------------

/// Exact number of valid words of the given length (transfer-matrix census
/// over the spelling automaton; arbitrary precision).
inline BigNat count_words(int level) {
  if (level < 1) throw std::invalid_argument("count_words: level must be >= 1");
  std::array<BigNat, 5> census{};
  census[kStateV] = BigNat(1);  // the word "R"
  for (int len = 2; len <= level; ++len) {
    std::array<BigNat, 5> next{};
    for (int s = 1; s < 5; ++s) {
      if (census[static_cast<std::size_t>(s)].is_zero()) continue;
      for (Letter l : allowed_letters(kStatePlanes[static_cast<std::size_t>(s)]))
        next[static_cast<std::size_t>(state_id(landing_state(l)))] += census[static_cast<std::size_t>(s)];
    }
    census = std::move(next);
  }
  BigNat total;
  for (int s = 1; s < 5; ++s) total += census[static_cast<std::size_t>(s)];
  return total;
}

/// Emits every valid word of the given length in lexicographic order under
/// the letter enumeration order.
inline void enumerate_words(int level, const std::function<void(const ValidWord&)>& emit) {
  if (level < 1) throw std::invalid_argument("enumerate_words: level must be >= 1");
  std::vector<Letter> stack;
  stack.reserve(static_cast<std::size_t>(level));
  auto walk = [&](auto&& self, const PlaneSet& state) -> void {
    if (static_cast<int>(stack.size()) == level) {
      emit(ValidWord(RvtWord(stack)));
      return;
    }
    for (Letter l : allowed_letters(state)) {
      stack.push_back(l);
      self(self, landing_state(l));
      stack.pop_back();
    }
  };
  walk(walk, PlaneSet{});
}

inline std::vector<ValidWord> enumerate_words(int level) {
  std::vector<ValidWord> out;
  enumerate_words(level, [&](const ValidWord& w) { out.push_back(w); });
  return out;
}

}  // namespace monster
