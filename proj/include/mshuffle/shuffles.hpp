#pragma once

#include <cstdint>
#include <vector>

#include "mshuffle/perm.hpp"

namespace mshuffle {

enum class ShuffleKind { Out, In };

// Deck of stacks*stack_size cards split into `stacks` equal stacks.
struct DeckParams {
  std::uint32_t stacks;     // m >= 2
  std::uint32_t stack_size; // n >= 1

  DeckParams(std::uint32_t m, std::uint32_t n); // validates, deck <= 2^31
  std::uint32_t deck_size() const noexcept { return stacks * stack_size; }
};

// Deck of base^digits cards together with a base^exponent-shuffle,
// 1 <= exponent < digits.
struct PowerDeckParams {
  std::uint32_t base;     // m >= 2
  std::uint32_t digits;   // k >= 2
  std::uint32_t exponent; // y

  PowerDeckParams(std::uint32_t m, std::uint32_t k, std::uint32_t y);
  std::uint32_t gcd_exponent_digits() const noexcept; // c = gcd(y, k)
  std::uint32_t deck_size() const noexcept;           // m^k
};

// Base-m expansion of a card index, most significant digit first.
struct DigitVector {
  std::uint32_t base;
  std::vector<std::uint32_t> digits;

  friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

// Out shuffle: dest[mn-1] = mn-1 and dest[i] = m*i mod (mn-1) otherwise.
Perm out_shuffle(const DeckParams& p);

// In shuffle: dest[i] = m*i + (m-1) mod (mn+1).
Perm in_shuffle(const DeckParams& p);

Perm make_shuffle(const DeckParams& p, ShuffleKind kind);

// Builds the same permutation directly from the stack layout (pick-up
// counts per row and column), with no modular arithmetic. Serves as the
// independent check of the formulas above.
Perm stack_interleave_oracle(const DeckParams& p, ShuffleKind kind);

DigitVector index_to_digits(std::uint64_t i, std::uint32_t m, std::uint32_t k);
std::uint64_t digits_to_index(const DigitVector& d);

// Effect of a base^y-shuffle on a card's digit tuple: rotate left by y;
// the In kind additionally flips (x -> base-1-x) the y digits that
// wrapped to the end. Requires 1 <= y <= digit count.
DigitVector digit_action(ShuffleKind kind, std::uint32_t y, DigitVector d);

// The m^y-shuffle on m^k cards, built as the y-th power of the m-shuffle.
Perm power_shuffle(const PowerDeckParams& p, ShuffleKind kind);

// B_j = O^(j-1) I O^(-j) on m^k cards (products left to right); flips
// base-m digit j and nothing else. 1-based j in 1..k.
Perm b_generator(std::uint32_t j, std::uint32_t m, std::uint32_t k);

// C_j = O^(j-1) I^2 O^(-(j+1)) on m^k cards; flips base-m digits j and
// j+1 for j < k, digits 1 and k for j = k. 1-based j in 1..k.
Perm c_generator(std::uint32_t j, std::uint32_t m, std::uint32_t k);

} // namespace mshuffle
