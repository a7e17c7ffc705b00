#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "monster/words.hpp"

namespace monster {

// Slots of the level-k coframe [dphi : du_k : dv_k].
enum class Slot : std::uint8_t { Phi = 0, U = 1, Vv = 2 };

inline constexpr std::array<Slot, 3> kSlots = {Slot::Phi, Slot::U, Slot::Vv};

constexpr std::string_view to_string(Slot s) {
  switch (s) {
    case Slot::Phi: return "phi";
    case Slot::U: return "u";
    case Slot::Vv: return "v";
  }
  return "?";
}

enum class SlotFlag : std::uint8_t { Zero, NonZero };

enum class CoordKind : std::uint8_t { BaseX, BaseY, BaseZ, FiberU, FiberV };

// One Kumpera-Rubin coordinate: x, y, z at level 0, or u_k / v_k at level k.
struct CoordRef {
  int level = 0;
  CoordKind kind = CoordKind::BaseX;

  std::string name() const {
    switch (kind) {
      case CoordKind::BaseX: return "x";
      case CoordKind::BaseY: return "y";
      case CoordKind::BaseZ: return "z";
      case CoordKind::FiberU: return "u" + std::to_string(level);
      case CoordKind::FiberV: return "v" + std::to_string(level);
    }
    return "?";
  }

  friend bool operator==(const CoordRef&, const CoordRef&) = default;
};

// The symbolic coframe of the rank-3 distribution at one level: the
// uniformizing coordinate (inherited from an earlier level) and the two fiber
// coordinates born at this level.
struct Coframe {
  int level = 0;
  CoordRef phi;      // uniformizing coordinate f_k
  CoordRef fiber_u;  // u_k
  CoordRef fiber_v;  // v_k

  const CoordRef& slot(Slot s) const {
    switch (s) {
      case Slot::U: return fiber_u;
      case Slot::Vv: return fiber_v;
      case Slot::Phi: break;
    }
    return phi;
  }

  std::string to_string() const {
    return "[d" + phi.name() + " : d" + fiber_u.name() + " : d" + fiber_v.name() + "]";
  }

  friend bool operator==(const Coframe&, const Coframe&) = default;
};

/// Level-0 chart: coframe [dx, dy, dz] with x as the uniformizer.
inline Coframe base_coframe() {
  return Coframe{0, CoordRef{0, CoordKind::BaseX}, CoordRef{0, CoordKind::BaseY},
                 CoordRef{0, CoordKind::BaseZ}};
}

// Per-letter chart transition: which slot the chart divides by, and which old
// slots become the numerators of the new fiber coordinates. The three roles
// are always a permutation of the three slots, and the divisor coordinate
// becomes the new uniformizer.
struct StepRule {
  Slot divisor;
  Slot numerator_u;
  Slot numerator_v;
};

constexpr StepRule step_rule(Letter l) {
  switch (l) {
    case Letter::R:
    case Letter::T1:
    case Letter::T2:
    case Letter::L2: return StepRule{Slot::Phi, Slot::U, Slot::Vv};
    case Letter::V:
    case Letter::L3: return StepRule{Slot::U, Slot::Phi, Slot::Vv};
    case Letter::L1: return StepRule{Slot::Vv, Slot::Phi, Slot::U};
  }
  return StepRule{Slot::Phi, Slot::U, Slot::Vv};
}

struct ChartStep {
  Letter letter = Letter::R;
  Slot divisor = Slot::Phi;
  Slot numerator_u = Slot::U;
  Slot numerator_v = Slot::Vv;
  CoordRef new_phi;  // uniformizer of the next level = divisor coordinate

  friend bool operator==(const ChartStep&, const ChartStep&) = default;
};

// The chart chain of a word: coframes at levels 0..k and the k steps between
// them. steps[i] acts on coframes[i].
struct ChartChain {
  std::vector<Coframe> coframes;
  std::vector<ChartStep> steps;
};

inline ChartChain chart_sequence(const ValidWord& word) {
  ChartChain chain;
  chain.coframes.push_back(base_coframe());
  for (std::size_t pos = 1; pos <= word.size(); ++pos) {
    const Letter l = word.at(pos);
    const Coframe& cf = chain.coframes.back();
    const StepRule rule = step_rule(l);
    const CoordRef divisor = cf.slot(rule.divisor);
    chain.steps.push_back(ChartStep{l, rule.divisor, rule.numerator_u, rule.numerator_v, divisor});
    const int next_level = cf.level + 1;
    chain.coframes.push_back(Coframe{next_level, divisor, CoordRef{next_level, CoordKind::FiberU},
                                     CoordRef{next_level, CoordKind::FiberV}});
  }
  return chain;
}

// Where a direction of each letter class sits relative to the coframe: Zero
// marks the coframe elements that annihilate it. A letter's direction lies in
// exactly the critical planes whose defining slot is flagged Zero.
struct DirectionForm {
  std::array<SlotFlag, 3> flags{SlotFlag::NonZero, SlotFlag::NonZero, SlotFlag::NonZero};

  SlotFlag at(Slot s) const { return flags[static_cast<std::size_t>(s)]; }
  bool zero_at(Slot s) const { return at(s) == SlotFlag::Zero; }

  friend bool operator==(const DirectionForm&, const DirectionForm&) = default;
};

constexpr DirectionForm direction_form(Letter l) {
  constexpr SlotFlag Z = SlotFlag::Zero;
  constexpr SlotFlag N = SlotFlag::NonZero;
  switch (l) {
    case Letter::R: return DirectionForm{{N, N, N}};
    case Letter::V: return DirectionForm{{Z, N, N}};
    case Letter::T1: return DirectionForm{{N, Z, N}};
    case Letter::T2: return DirectionForm{{N, N, Z}};
    case Letter::L1: return DirectionForm{{Z, Z, N}};
    case Letter::L2: return DirectionForm{{N, Z, Z}};
    case Letter::L3: return DirectionForm{{Z, N, Z}};
  }
  return DirectionForm{};
}

// One Pfaffian constraint d(numerator) - coefficient * d(divisor) = 0.
struct PfaffianConstraint {
  CoordRef numerator;
  CoordRef coefficient;
  CoordRef divisor;

  std::string to_string() const {
    return "d" + numerator.name() + " - " + coefficient.name() + "*d" + divisor.name() + " = 0";
  }

  friend bool operator==(const PfaffianConstraint&, const PfaffianConstraint&) = default;
};

/// The Pfaffian system cutting out the distribution at the word's level:
/// two constraints per level, 2k in total, in level order.
inline std::vector<PfaffianConstraint> pfaffian_system(const ValidWord& word) {
  std::vector<PfaffianConstraint> out;
  const ChartChain chain = chart_sequence(word);
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const Coframe& cf = chain.coframes[i];
    const Coframe& next = chain.coframes[i + 1];
    const ChartStep& step = chain.steps[i];
    const CoordRef divisor = cf.slot(step.divisor);
    out.push_back(PfaffianConstraint{cf.slot(step.numerator_u), next.fiber_u, divisor});
    out.push_back(PfaffianConstraint{cf.slot(step.numerator_v), next.fiber_v, divisor});
  }
  return out;
}

}  // namespace monster
