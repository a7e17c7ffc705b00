#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "monster/charts.hpp"
#include "monster/words.hpp"

namespace monster {

/// Signals a disagreement between two internal derivations of the same fact,
/// i.e. an engine bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class PlaneForm : std::uint8_t { Vertical, T1, T2 };

constexpr std::string_view to_string(PlaneForm f) {
  switch (f) {
    case PlaneForm::Vertical: return "V";
    case PlaneForm::T1: return "T1";
    case PlaneForm::T2: return "T2";
  }
  return "?";
}

// A critical plane of the rank-3 distribution, written as zero/nonzero flags
// over the coframe slots [dphi : du_k : dv_k]. A plane is the kernel of one
// coframe element, so exactly one flag is Zero: Phi gives the vertical plane,
// U the T1 form, Vv the T2 form.
struct PlanePattern {
  std::array<SlotFlag, 3> flags{SlotFlag::NonZero, SlotFlag::NonZero, SlotFlag::NonZero};

  SlotFlag at(Slot s) const { return flags[static_cast<std::size_t>(s)]; }

  Slot zero_slot() const {
    int zeros = 0;
    Slot found = Slot::Phi;
    for (Slot s : kSlots)
      if (at(s) == SlotFlag::Zero) { ++zeros; found = s; }
    if (zeros != 1) throw InternalError("PlanePattern: expected exactly one zero slot");
    return found;
  }

  PlaneForm form() const {
    switch (zero_slot()) {
      case Slot::Phi: return PlaneForm::Vertical;
      case Slot::U: return PlaneForm::T1;
      case Slot::Vv: return PlaneForm::T2;
    }
    return PlaneForm::Vertical;
  }

  static constexpr PlanePattern of(PlaneForm f) {
    constexpr SlotFlag Z = SlotFlag::Zero;
    constexpr SlotFlag N = SlotFlag::NonZero;
    switch (f) {
      case PlaneForm::Vertical: return PlanePattern{{Z, N, N}};
      case PlaneForm::T1: return PlanePattern{{N, Z, N}};
      case PlaneForm::T2: return PlanePattern{{N, N, Z}};
    }
    return PlanePattern{{Z, N, N}};
  }

  static constexpr PlanePattern vertical() { return of(PlaneForm::Vertical); }

  friend bool operator==(const PlanePattern&, const PlanePattern&) = default;
};

/// Transports a plane pattern one level up along a letter: each new slot
/// inherits the flag of the old slot it quotients, per the chart step.
inline PlanePattern transport(const PlanePattern& p, Letter letter) {
  const StepRule r = step_rule(letter);
  PlanePattern q;
  q.flags[static_cast<std::size_t>(Slot::Phi)] = p.at(r.divisor);
  q.flags[static_cast<std::size_t>(Slot::U)] = p.at(r.numerator_u);
  q.flags[static_cast<std::size_t>(Slot::Vv)] = p.at(r.numerator_v);
  return q;
}

/// Exact inverse of transport: pushes a pattern one level down.
inline PlanePattern transport_inverse(const PlanePattern& q, Letter letter) {
  const StepRule r = step_rule(letter);
  PlanePattern p;
  p.flags[static_cast<std::size_t>(r.divisor)] = q.at(Slot::Phi);
  p.flags[static_cast<std::size_t>(r.numerator_u)] = q.at(Slot::U);
  p.flags[static_cast<std::size_t>(r.numerator_v)] = q.at(Slot::Vv);
  return p;
}

/// A letter's direction lies inside the plane iff the direction vanishes on
/// the plane's defining coframe element. This is the survival condition for a
/// Baby Monster: only tangent directions prolong the submanifold.
inline bool tangent_to(Letter letter, const PlanePattern& plane) {
  return direction_form(letter).zero_at(plane.zero_slot());
}

enum class VanishState : std::uint8_t { IdenticallyZero, Active, Undetermined };

// Per-coordinate vanishing on a Baby Monster submanifold, over the KR
// coordinates (x, y, z, u1, v1, ..., uk, vk). Coordinates below the birth
// level are pinned by the fixed base point and stay Undetermined.
inline std::vector<VanishState> vanishing_from_trace(int word_level, int birth_level,
                                                     const std::vector<PlanePattern>& trace) {
  auto state_of = [](SlotFlag f) {
    return f == SlotFlag::Zero ? VanishState::IdenticallyZero : VanishState::Active;
  };
  std::vector<VanishState> v(3 + 2 * static_cast<std::size_t>(word_level), VanishState::Undetermined);
  v[0] = v[1] = v[2] = VanishState::IdenticallyZero;
  for (int lvl = birth_level; lvl <= word_level; ++lvl) {
    const PlanePattern& p = trace[static_cast<std::size_t>(lvl - birth_level)];
    v[static_cast<std::size_t>(2 * lvl + 1)] = state_of(p.at(Slot::U));
    v[static_cast<std::size_t>(2 * lvl + 2)] = state_of(p.at(Slot::Vv));
  }
  return v;
}

// A Baby Monster delta^j_i that reaches the word's terminal level: born at
// level i as the fiber tangent, prolonged j = k - i times.
struct BabyMonsterRecord {
  int birth_level = 0;
  int prolongations = 0;
  PlanePattern pattern_at_top;
  std::vector<PlanePattern> trace;     // patterns at levels birth_level..k
  std::vector<VanishState> vanishing;  // x, y, z, u1, v1, ..., uk, vk

  /// "d<j>_<i>" for delta^j_i.
  std::string delta_name() const {
    return "d" + std::to_string(prolongations) + "_" + std::to_string(birth_level);
  }

  friend bool operator==(const BabyMonsterRecord&, const BabyMonsterRecord&) = default;
};

// A Baby Monster that failed the tangency condition before reaching the top.
struct DeadBranch {
  int birth_level = 0;
  int dead_level = 0;  // level the failing step would have reached
  Letter blocking_letter = Letter::R;
  PlanePattern pattern_before;         // pattern at dead_level - 1
  std::vector<PlanePattern> trace;     // levels birth_level..dead_level-1

  std::string reason() const {
    return std::string(monster::to_string(blocking_letter)) + " direction at level " +
           std::to_string(dead_level - 1) + " is not tangent to the " +
           std::string(monster::to_string(pattern_before.form())) + " plane";
  }

  friend bool operator==(const DeadBranch&, const DeadBranch&) = default;
};

/// Forward propagation of the Baby Monster born at `birth_level`: starts as
/// the vertical pattern over its fiber and is transported letter by letter.
/// A step survives only if the letter's direction is tangent to the current
/// plane; otherwise the branch dies at that step.
inline std::variant<BabyMonsterRecord, DeadBranch> propagate(const ValidWord& word, int birth_level) {
  const int k = static_cast<int>(word.size());
  if (birth_level < 1 || birth_level > k - 1)
    throw std::out_of_range("propagate: birth level must be in 1..k-1");
  PlanePattern pattern = PlanePattern::vertical();
  std::vector<PlanePattern> trace{pattern};
  for (int level = birth_level + 1; level <= k; ++level) {
    const Letter step = word.at(static_cast<std::size_t>(level));
    if (!tangent_to(step, pattern))
      return DeadBranch{birth_level, level, step, pattern, std::move(trace)};
    pattern = transport(pattern, step);
    trace.push_back(pattern);
  }
  BabyMonsterRecord rec{birth_level, k - birth_level, pattern, std::move(trace), {}};
  rec.vanishing = vanishing_from_trace(k, birth_level, rec.trace);
  return rec;
}

// All critical planes over the word's terminal point, with full provenance.
struct PlaneConfiguration {
  ValidWord word;
  BabyMonsterRecord vertical;  // the distinguished delta^0_k
  std::vector<BabyMonsterRecord> t1_sources;
  std::vector<BabyMonsterRecord> t2_sources;
  std::vector<DeadBranch> dead_branches;

  bool has_t1() const { return !t1_sources.empty(); }
  bool has_t2() const { return !t2_sources.empty(); }

  // Distinguished lines are pairwise plane intersections.
  bool line_l1() const { return has_t1(); }          // V cap T1
  bool line_l2() const { return has_t1() && has_t2(); }  // T1 cap T2
  bool line_l3() const { return has_t2(); }          // V cap T2

  PlaneSet plane_set() const { return PlaneSet{true, has_t1(), has_t2()}; }
  int plane_count() const { return 1 + (has_t1() ? 1 : 0) + (has_t2() ? 1 : 0); }
};

/// Runs propagate for every admissible birth level and collects the
/// survivors by plane form, with delta^0_k attached. The derived plane set is
/// checked against the words-module state.
inline PlaneConfiguration configuration(const ValidWord& word) {
  const int k = static_cast<int>(word.size());
  BabyMonsterRecord vertical{k, 0, PlanePattern::vertical(), {PlanePattern::vertical()}, {}};
  vertical.vanishing = vanishing_from_trace(k, k, vertical.trace);
  PlaneConfiguration cfg{word, std::move(vertical), {}, {}, {}};
  for (int i = 1; i <= k - 1; ++i) {
    auto result = propagate(word, i);
    if (auto* rec = std::get_if<BabyMonsterRecord>(&result)) {
      switch (rec->pattern_at_top.form()) {
        case PlaneForm::T1: cfg.t1_sources.push_back(std::move(*rec)); break;
        case PlaneForm::T2: cfg.t2_sources.push_back(std::move(*rec)); break;
        case PlaneForm::Vertical:
          throw InternalError("configuration: prolonged Baby Monster returned to vertical form");
      }
    } else {
      cfg.dead_branches.push_back(std::move(std::get<DeadBranch>(result)));
    }
  }
  if (cfg.plane_set() != terminal_state(word))
    throw InternalError("configuration: plane set disagrees with the spelling automaton for " +
                        word.to_string());
  return cfg;
}

inline int plane_count(const ValidWord& word) { return configuration(word).plane_count(); }

struct BackwardAbsent {
  int contradiction_level = 0;
  std::string reason;
};

/// The backward identification method: assume the target plane exists at the
/// top level and push its pattern down, one level at a time, by the inverse
/// chart permutation. Each crossing must keep the chosen direction tangent to
/// the candidate plane below. The walk ends at the first level whose pattern
/// is vertical with both fiber coordinates active: that fiber is the birth
/// level. A failed crossing, or a tangency pattern surviving down to the
/// regular first level, proves the plane absent.
inline std::variant<BabyMonsterRecord, BackwardAbsent> backward_identify(const ValidWord& word,
                                                                         PlaneForm target) {
  if (target == PlaneForm::Vertical)
    throw std::invalid_argument("backward_identify: target must be T1 or T2");
  const int k = static_cast<int>(word.size());
  std::vector<PlanePattern> down{PlanePattern::of(target)};  // patterns at k, k-1, ...
  for (int level = k - 1; level >= 1; --level) {
    const Letter step = word.at(static_cast<std::size_t>(level + 1));
    const PlanePattern below = transport_inverse(down.back(), step);
    if (!tangent_to(step, below)) {
      return BackwardAbsent{
          level + 1, std::string(monster::to_string(step)) + " direction at level " +
                         std::to_string(level) + " is not tangent to the projected " +
                         std::string(monster::to_string(below.form())) + " plane"};
    }
    down.push_back(below);
    if (below.form() == PlaneForm::Vertical) {
      std::vector<PlanePattern> trace(down.rbegin(), down.rend());
      BabyMonsterRecord rec{level, k - level, trace.back(), std::move(trace), {}};
      rec.vanishing = vanishing_from_trace(k, level, rec.trace);
      return rec;
    }
  }
  return BackwardAbsent{1, "tangency pattern persists over the regular level-1 point"};
}

/// Re-derives the spelling automaton from the critical-plane engine alone:
/// states are the plane sets computed by configuration() over witness words,
/// letters are admissible where their defining planes and lines exist.
/// Throws InternalError if the result disagrees with the reference table.
inline SpellingAutomaton derive_spelling_automaton() {
  SpellingAutomaton derived;
  std::array<std::optional<ValidWord>, 5> witness;
  std::vector<int> queue{kStateStart};
  std::array<bool, 5> seen{};
  seen[kStateStart] = true;
  while (!queue.empty()) {
    const int s = queue.back();
    queue.pop_back();
    const PlaneSet planes = kStatePlanes[static_cast<std::size_t>(s)];
    for (Letter l : allowed_letters(planes)) {
      std::vector<Letter> letters;
      if (witness[static_cast<std::size_t>(s)])
        letters = witness[static_cast<std::size_t>(s)]->word().letters();
      letters.push_back(l);
      auto checked = validate(RvtWord(std::move(letters)));
      if (std::holds_alternative<SpellingError>(checked))
        throw InternalError("derive_spelling_automaton: engine-admissible letter " +
                            std::string(to_string(l)) + " fails reference validation");
      const ValidWord extended = std::get<ValidWord>(std::move(checked));
      const int target = state_id(configuration(extended).plane_set());
      if (target < 0)
        throw InternalError("derive_spelling_automaton: unreachable plane set over " +
                            extended.to_string());
      derived.edge[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)] = target;
      if (!seen[static_cast<std::size_t>(target)]) {
        seen[static_cast<std::size_t>(target)] = true;
        witness[static_cast<std::size_t>(target)] = extended;
        queue.push_back(target);
      }
    }
  }
  if (!(derived == reference_automaton()))
    throw InternalError("derive_spelling_automaton: derived table disagrees with the reference");
  return derived;
}

}  // namespace monster
