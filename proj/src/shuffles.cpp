#include "mshuffle/shuffles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mshuffle/errors.hpp"

namespace mshuffle {

namespace {

constexpr std::uint64_t kMaxDeck = std::uint64_t{1} << 31;

// m^k, rejecting decks past the addressable bound.
std::uint32_t checked_power_deck(std::uint32_t m, std::uint32_t k) {
  std::uint64_t deck = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    deck *= m;
    if (deck > kMaxDeck)
      throw ResourceLimitError("deck size " + std::to_string(m) + "^" +
                               std::to_string(k) + " exceeds 2^31 cards");
  }
  return static_cast<std::uint32_t>(deck);
}

} // namespace

DeckParams::DeckParams(std::uint32_t m, std::uint32_t n)
    : stacks(m), stack_size(n) {
  if (m < 2)
    throw std::invalid_argument("DeckParams: need at least 2 stacks");
  if (n < 1)
    throw std::invalid_argument("DeckParams: need at least 1 card per stack");
  if (std::uint64_t{m} * n > kMaxDeck)
    throw ResourceLimitError("deck size exceeds 2^31 cards");
}

PowerDeckParams::PowerDeckParams(std::uint32_t m, std::uint32_t k,
                                 std::uint32_t y)
    : base(m), digits(k), exponent(y) {
  if (m < 2)
    throw std::invalid_argument("PowerDeckParams: base must be at least 2");
  if (k < 2)
    throw std::invalid_argument("PowerDeckParams: need at least 2 digits");
  if (y < 1 || y >= k)
    throw std::invalid_argument(
        "PowerDeckParams: exponent must satisfy 1 <= y < k");
  checked_power_deck(m, k);
}

std::uint32_t PowerDeckParams::gcd_exponent_digits() const noexcept {
  return std::gcd(exponent, digits);
}

std::uint32_t PowerDeckParams::deck_size() const noexcept {
  std::uint64_t deck = 1;
  for (std::uint32_t i = 0; i < digits; ++i)
    deck *= base;
  return static_cast<std::uint32_t>(deck);
}

Perm out_shuffle(const DeckParams& p) {
  const std::uint64_t m = p.stacks;
  const std::uint64_t deck = p.deck_size();
  std::vector<Perm::index_t> dest(deck);
  dest[deck - 1] = static_cast<Perm::index_t>(deck - 1);
  for (std::uint64_t i = 0; i + 1 < deck; ++i)
    dest[i] = static_cast<Perm::index_t>(m * i % (deck - 1));
  return Perm(std::move(dest));
}

Perm in_shuffle(const DeckParams& p) {
  const std::uint64_t m = p.stacks;
  const std::uint64_t deck = p.deck_size();
  std::vector<Perm::index_t> dest(deck);
  // The value deck never occurs: m*(i+1) = 0 mod (deck+1) would need
  // i = deck, out of range.
  for (std::uint64_t i = 0; i < deck; ++i)
    dest[i] = static_cast<Perm::index_t>((m * i + m - 1) % (deck + 1));
  return Perm(std::move(dest));
}

Perm make_shuffle(const DeckParams& p, ShuffleKind kind) {
  return kind == ShuffleKind::Out ? out_shuffle(p) : in_shuffle(p);
}

Perm stack_interleave_oracle(const DeckParams& p, ShuffleKind kind) {
  const std::uint32_t m = p.stacks;
  const std::uint32_t n = p.stack_size;
  std::vector<Perm::index_t> dest(p.deck_size());
  // Card at row j, column q of the m-stack array (both 1-based) has
  // original index (q-1)n + (j-1). Counting the cards picked up before it
  // gives its destination.
  for (std::uint32_t q = 1; q <= m; ++q) {
    for (std::uint32_t j = 1; j <= n; ++j) {
      const std::uint64_t original = std::uint64_t{q - 1} * n + (j - 1);
      const std::uint64_t picked_before =
          kind == ShuffleKind::Out ? (q - 1) + std::uint64_t{j - 1} * m
                                   : (m - q) + std::uint64_t{j - 1} * m;
      dest[original] = static_cast<Perm::index_t>(picked_before);
    }
  }
  return Perm(std::move(dest));
}

DigitVector index_to_digits(std::uint64_t i, std::uint32_t m,
                            std::uint32_t k) {
  if (m < 2)
    throw std::invalid_argument("index_to_digits: base must be at least 2");
  if (k < 1)
    throw std::invalid_argument("index_to_digits: need at least 1 digit");
  DigitVector d{m, std::vector<std::uint32_t>(k, 0)};
  std::uint64_t rest = i;
  for (std::uint32_t pos = k; pos-- > 0;) {
    d.digits[pos] = static_cast<std::uint32_t>(rest % m);
    rest /= m;
  }
  if (rest != 0)
    throw std::invalid_argument("index_to_digits: index out of range for m^k");
  return d;
}

std::uint64_t digits_to_index(const DigitVector& d) {
  if (d.base < 2)
    throw std::invalid_argument("digits_to_index: base must be at least 2");
  std::uint64_t i = 0;
  for (std::uint32_t x : d.digits) {
    if (x >= d.base)
      throw std::invalid_argument("digits_to_index: digit out of range");
    i = i * d.base + x;
  }
  return i;
}

DigitVector digit_action(ShuffleKind kind, std::uint32_t y, DigitVector d) {
  const std::uint32_t k = static_cast<std::uint32_t>(d.digits.size());
  if (y < 1 || y > k)
    throw std::invalid_argument("digit_action: need 1 <= y <= digit count");
  std::rotate(d.digits.begin(), d.digits.begin() + y, d.digits.end());
  if (kind == ShuffleKind::In) {
    for (std::uint32_t pos = k - y; pos < k; ++pos)
      d.digits[pos] = d.base - 1 - d.digits[pos];
  }
  return d;
}

namespace {

DeckParams base_shuffle_params(std::uint32_t m, std::uint32_t k) {
  const std::uint32_t deck = checked_power_deck(m, k);
  return DeckParams(m, deck / m);
}

} // namespace

Perm power_shuffle(const PowerDeckParams& p, ShuffleKind kind) {
  const Perm base = make_shuffle(base_shuffle_params(p.base, p.digits), kind);
  return power(base, p.exponent);
}

Perm b_generator(std::uint32_t j, std::uint32_t m, std::uint32_t k) {
  if (k < 1)
    throw std::invalid_argument("b_generator: need at least 1 digit");
  if (j < 1 || j > k)
    throw std::invalid_argument("b_generator: need 1 <= j <= k");
  const DeckParams deck = base_shuffle_params(m, k);
  const Perm out = out_shuffle(deck);
  const Perm in = in_shuffle(deck);
  return compose(power(out, static_cast<long long>(j) - 1),
                 compose(in, power(out, -static_cast<long long>(j))));
}

Perm c_generator(std::uint32_t j, std::uint32_t m, std::uint32_t k) {
  if (k < 1)
    throw std::invalid_argument("c_generator: need at least 1 digit");
  if (j < 1 || j > k)
    throw std::invalid_argument("c_generator: need 1 <= j <= k");
  const DeckParams deck = base_shuffle_params(m, k);
  const Perm out = out_shuffle(deck);
  const Perm in_sq = power(in_shuffle(deck), 2);
  return compose(power(out, static_cast<long long>(j) - 1),
                 compose(in_sq, power(out, -static_cast<long long>(j) - 1)));
}

} // namespace mshuffle
