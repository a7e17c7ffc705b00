#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace monster {

// Unsigned arbitrary-precision counter. Word censuses only ever grow by
// addition, so base-1e9 limbs with add/compare/print are all that is needed.
class BigNat {
 public:
  BigNat() = default;
  BigNat(std::uint64_t value) {
    while (value != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(value % kBase));
      value /= kBase;
    }
  }

  BigNat& operator+=(const BigNat& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t sum = static_cast<std::uint64_t>(limbs_[i]) + carry;
      if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
      limbs_[i] = static_cast<std::uint32_t>(sum % kBase);
      carry = static_cast<std::uint32_t>(sum / kBase);
    }
    if (carry != 0) limbs_.push_back(carry);
    return *this;
  }

  friend BigNat operator+(BigNat lhs, const BigNat& rhs) { return lhs += rhs; }

  friend bool operator==(const BigNat& a, const BigNat& b) { return a.limbs_ == b.limbs_; }

  bool is_zero() const { return limbs_.empty(); }

  bool fits_uint64() const {
    if (limbs_.size() > 3) return false;
    return to_string().size() <= 19;  // below 2^64 ~ 1.8e19, conservative
  }

  std::uint64_t to_uint64() const {
    if (!fits_uint64()) throw std::overflow_error("BigNat::to_uint64: value too large");
    std::uint64_t v = 0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) v = v * kBase + *it;
    return v;
  }

  std::string to_string() const {
    if (limbs_.empty()) return "0";
    std::string out = std::to_string(limbs_.back());
    for (auto it = limbs_.rbegin() + 1; it != limbs_.rend(); ++it) {
      std::string part = std::to_string(*it);
      out += std::string(9 - part.size(), '0') + part;
    }
    return out;
  }

 private:
  static constexpr std::uint32_t kBase = 1'000'000'000;
  std::vector<std::uint32_t> limbs_;  // little-endian, no trailing zeros; empty means 0
};

}  // namespace monster
