#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace fglschur {

/// Variable families. X, Y and B are geometric (degree one each); Coeff
/// variables parametrize formal group laws and carry degree zero.
enum class Family : std::uint8_t { X = 0, Y = 1, B = 2, Coeff = 3 };

/// A single indeterminate, totally ordered by (family, index).
///
/// B admits indices <= 0 for doubly infinite parameter sequences. Coeff index 0
/// is the K-theory parameter beta, Coeff index k >= 1 is the log-coefficient m_k
/// of the universal law.
struct Variable {
  Family family = Family::X;
  int index = 1;

  constexpr auto operator<=>(const Variable&) const = default;

  static constexpr int kIndexBits = 20;
  static constexpr int kIndexOffset = 1 << (kIndexBits - 1);

  constexpr std::uint32_t code() const {
    return (static_cast<std::uint32_t>(family) << kIndexBits) |
           static_cast<std::uint32_t>(index + kIndexOffset);
  }
  static constexpr Variable from_code(std::uint32_t c) {
    return Variable{static_cast<Family>(c >> kIndexBits),
                    static_cast<int>(c & ((1u << kIndexBits) - 1)) - kIndexOffset};
  }

  /// Weight used by weighted triangular solves: beta -> 1, m_k -> k.
  constexpr int coeff_weight() const {
    if (family != Family::Coeff) return 0;
    return index == 0 ? 1 : index;
  }

  std::string name() const;
};

inline Variable var_x(int i) { return {Family::X, i}; }
inline Variable var_y(int i) { return {Family::Y, i}; }
inline Variable var_b(int i) { return {Family::B, i}; }
inline Variable var_beta() { return {Family::Coeff, 0}; }
inline Variable var_m(int k) { return {Family::Coeff, k}; }

// Scratch indeterminates used for one-variable generating functions.
inline constexpr int kScratchT = 900;
inline constexpr int kScratchU = 901;
inline constexpr int kScratchV = 902;
inline Variable var_t() { return {Family::X, kScratchT}; }

/// Bit mask of the families counted by the truncation degree.
class Grading {
 public:
  constexpr Grading() = default;
  constexpr explicit Grading(std::uint8_t mask) : mask_(mask) {}

  static constexpr Grading xyb() { return Grading(0b111); }
  static constexpr Grading xb() { return Grading(0b101); }
  static constexpr Grading x_only() { return Grading(0b001); }

  constexpr bool counts(Family f) const {
    return f != Family::Coeff && ((mask_ >> static_cast<int>(f)) & 1u);
  }
  constexpr std::uint8_t mask() const { return mask_; }
  constexpr bool operator==(const Grading&) const = default;

  std::string name() const;

 private:
  std::uint8_t mask_ = 0b111;
};

}  // namespace fglschur
