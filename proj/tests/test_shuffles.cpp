#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mshuffle/errors.hpp"
#include "mshuffle/group.hpp"
#include "mshuffle/shuffles.hpp"

using namespace mshuffle;

namespace {

using Dest = std::vector<Perm::index_t>;

// Does g, read through base-m digit tuples of length k, flip exactly the
// 1-based positions in `flipped`?
bool flips_exactly(const Perm& g, std::uint32_t m, std::uint32_t k,
                   const std::vector<std::uint32_t>& flipped) {
  for (Perm::index_t i = 0; i < g.degree(); ++i) {
    DigitVector expected = index_to_digits(i, m, k);
    for (std::uint32_t pos : flipped)
      expected.digits[pos - 1] = m - 1 - expected.digits[pos - 1];
    if (index_to_digits(g(i), m, k) != expected)
      return false;
  }
  return true;
}

Perm conjugate_by(const Perm& o, const Perm& g) {
  return compose(o, compose(g, inverse(o)));
}

} // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(DeckParams(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(DeckParams(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(DeckParams(3, std::uint32_t{1} << 30), ResourceLimitError);
  CHECK_THROWS_AS(PowerDeckParams(1, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(PowerDeckParams(2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(PowerDeckParams(2, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(PowerDeckParams(2, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(PowerDeckParams(2, 40, 1), ResourceLimitError);
  CHECK(PowerDeckParams(2, 6, 4).gcd_exponent_digits() == 2);
  CHECK(PowerDeckParams(3, 4, 2).deck_size() == 81);
}

TEST_CASE("modular shuffle formulas") {
  CHECK(out_shuffle(DeckParams(2, 2)).dest() == Dest{0, 2, 1, 3});
  CHECK(in_shuffle(DeckParams(2, 2)).dest() == Dest{1, 3, 0, 2});

  // one card per stack: out is the identity, in reverses the deck
  for (std::uint32_t m = 2; m <= 6; ++m) {
    CHECK(out_shuffle(DeckParams(m, 1)).is_identity());
    const Perm rev = in_shuffle(DeckParams(m, 1));
    for (Perm::index_t i = 0; i < m; ++i)
      CHECK(rev(i) == m - 1 - i);
  }

  CHECK(element_order(out_shuffle(DeckParams(2, 26))) == 8);
  CHECK(element_order(in_shuffle(DeckParams(2, 26))) == 52);
}

TEST_CASE("stack interleave oracle equals the modular formulas") {
  CHECK(stack_interleave_oracle(DeckParams(2, 2), ShuffleKind::Out).dest() ==
        Dest{0, 2, 1, 3});
  CHECK(stack_interleave_oracle(DeckParams(3, 1), ShuffleKind::Out)
            .is_identity());

  // an in 3-shuffle sends the top of a 12 card deck to index 2
  CHECK(stack_interleave_oracle(DeckParams(3, 4), ShuffleKind::In)(0) == 2);

  // exhaustive agreement for every deck up to 2000 cards
  for (std::uint32_t m = 2; m <= 1000; ++m) {
    for (std::uint32_t n = 1; m * n <= 2000; ++n) {
      const DeckParams p(m, n);
      REQUIRE(stack_interleave_oracle(p, ShuffleKind::Out) == out_shuffle(p));
      REQUIRE(stack_interleave_oracle(p, ShuffleKind::In) == in_shuffle(p));
    }
  }
}

TEST_CASE("digit expansion") {
  CHECK(index_to_digits(0, 3, 4).digits == std::vector<std::uint32_t>{0, 0, 0, 0});
  CHECK(index_to_digits(80, 3, 4).digits == std::vector<std::uint32_t>{2, 2, 2, 2});
  CHECK(index_to_digits(11, 3, 3).digits == std::vector<std::uint32_t>{1, 0, 2});
  CHECK(digits_to_index(index_to_digits(11, 3, 3)) == 11);
  CHECK_THROWS_AS(index_to_digits(81, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(digits_to_index(DigitVector{3, {1, 3}}), std::invalid_argument);

  for (std::uint32_t m : {2u, 3u, 5u}) {
    for (std::uint32_t k = 1; k <= 4; ++k) {
      std::uint64_t size = 1;
      for (std::uint32_t i = 0; i < k; ++i)
        size *= m;
      for (std::uint64_t i = 0; i < size; ++i)
        REQUIRE(digits_to_index(index_to_digits(i, m, k)) == i);
    }
  }
}

TEST_CASE("digit action") {
  const DigitVector d{5, {1, 2, 3}};
  CHECK(digit_action(ShuffleKind::Out, 1, d).digits ==
        std::vector<std::uint32_t>{2, 3, 1});
  CHECK(digit_action(ShuffleKind::In, 1, DigitVector{2, {1, 0}}).digits ==
        std::vector<std::uint32_t>{0, 0});

  // an m^2-shuffle is an m-shuffle done twice
  const DigitVector start{3, {2, 0, 1, 2}};
  CHECK(digit_action(ShuffleKind::In, 2, start) ==
        digit_action(ShuffleKind::In, 1,
                     digit_action(ShuffleKind::In, 1, start)));
  CHECK(digit_action(ShuffleKind::Out, 2, start) ==
        digit_action(ShuffleKind::Out, 1,
                     digit_action(ShuffleKind::Out, 1, start)));

  CHECK_THROWS_AS(digit_action(ShuffleKind::Out, 0, d), std::invalid_argument);
  CHECK_THROWS_AS(digit_action(ShuffleKind::Out, 4, d), std::invalid_argument);
}

TEST_CASE("digit model matches the permutations pointwise") {
  for (std::uint32_t m = 2; m <= 4; ++m) {
    for (std::uint32_t k = 2; k <= 5; ++k) {
      for (std::uint32_t y = 1; y < k; ++y) {
        const PowerDeckParams p(m, k, y);
        for (ShuffleKind kind : {ShuffleKind::Out, ShuffleKind::In}) {
          const Perm s = power_shuffle(p, kind);
          for (Perm::index_t i = 0; i < s.degree(); ++i)
            REQUIRE(index_to_digits(s(i), m, k) ==
                    digit_action(kind, y, index_to_digits(i, m, k)));
        }
      }
    }
  }
}

TEST_CASE("power shuffle equals the m^y stack formula") {
  CHECK(power_shuffle(PowerDeckParams(2, 4, 2), ShuffleKind::Out) ==
        power(out_shuffle(DeckParams(2, 8)), 2));

  // same permutation via Lemma-style formula with m^y stacks
  for (std::uint32_t m = 2; m <= 4; ++m) {
    for (std::uint32_t k = 2; k <= 5; ++k) {
      for (std::uint32_t y = 1; y < k; ++y) {
        const PowerDeckParams p(m, k, y);
        std::uint32_t stacks = 1;
        for (std::uint32_t i = 0; i < y; ++i)
          stacks *= m;
        const DeckParams formula(stacks, p.deck_size() / stacks);
        REQUIRE(power_shuffle(p, ShuffleKind::Out) == out_shuffle(formula));
        REQUIRE(power_shuffle(p, ShuffleKind::In) == in_shuffle(formula));
      }
    }
  }
}

TEST_CASE("out and in shuffles on m^k cards have order k and 2k") {
  for (std::uint32_t m = 2; m <= 4; ++m) {
    for (std::uint32_t k = 2; k <= 5; ++k) {
      const DeckParams p(m, PowerDeckParams(m, k, 1).deck_size() / m);
      CHECK(element_order(out_shuffle(p)) == k);
      CHECK(element_order(in_shuffle(p)) == 2 * k);
    }
  }
  // rotation by y on k digits: order k / gcd(y, k)
  CHECK(element_order(power_shuffle(PowerDeckParams(2, 4, 2),
                                    ShuffleKind::Out)) == 2);
}

TEST_CASE("inverse of the out shuffle rotates digits right") {
  const Perm inv = inverse(out_shuffle(DeckParams(3, 27)));
  for (Perm::index_t i = 0; i < inv.degree(); ++i) {
    DigitVector d = index_to_digits(i, 3, 4);
    std::rotate(d.digits.rbegin(), d.digits.rbegin() + 1, d.digits.rend());
    REQUIRE(index_to_digits(inv(i), 3, 4) == d);
  }
}

TEST_CASE("B generators flip one digit") {
  CHECK(b_generator(1, 2, 2).dest() == Dest{2, 3, 0, 1}); // (0 2)(1 3)

  // I * O^-1 is exactly B_1
  const DeckParams deck(3, 9);
  CHECK(compose(in_shuffle(deck), inverse(out_shuffle(deck))) ==
        b_generator(1, 3, 3));

  for (std::uint32_t m : {2u, 3u}) {
    const std::uint32_t k = m == 2 ? 5 : 3;
    std::vector<Perm> b;
    for (std::uint32_t j = 1; j <= k; ++j) {
      b.push_back(b_generator(j, m, k));
      CHECK(flips_exactly(b.back(), m, k, {j}));
      CHECK(power(b.back(), 2).is_identity());
    }
    for (std::size_t x = 0; x < b.size(); ++x)
      for (std::size_t y = x + 1; y < b.size(); ++y)
        CHECK(compose(b[x], b[y]) == compose(b[y], b[x]));

    // conjugation by O shifts the flipped digit cyclically
    const Perm out = out_shuffle(DeckParams(m, b[0].degree() / m));
    for (std::uint32_t j = 1; j <= k; ++j)
      CHECK(conjugate_by(out, b[j - 1]) == b[j % k]);
  }

  CHECK_THROWS_AS(b_generator(0, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(b_generator(4, 2, 3), std::invalid_argument);
}

TEST_CASE("C generators flip adjacent digit pairs") {
  for (std::uint32_t m : {2u, 3u}) {
    const std::uint32_t k = m == 2 ? 5 : 3;
    std::vector<Perm> c;
    for (std::uint32_t j = 1; j <= k; ++j) {
      c.push_back(c_generator(j, m, k));
      const std::vector<std::uint32_t> flipped =
          j < k ? std::vector<std::uint32_t>{j, j + 1}
                : std::vector<std::uint32_t>{1, k};
      CHECK(flips_exactly(c.back(), m, k, flipped));
      CHECK(power(c.back(), 2).is_identity());
    }
    for (std::size_t x = 0; x < c.size(); ++x)
      for (std::size_t y = x + 1; y < c.size(); ++y)
        CHECK(compose(c[x], c[y]) == compose(c[y], c[x]));

    // ordered product of all C_j is the identity
    Perm product = identity(c[0].degree());
    for (const Perm& g : c)
      product = compose(product, g);
    CHECK(product.is_identity());

    // conjugation by O: C_j -> C_{j+1}, with C_{k-1} wrapping to the
    // product C_1...C_{k-1}
    const Perm out = out_shuffle(DeckParams(m, c[0].degree() / m));
    for (std::uint32_t j = 1; j + 1 < k; ++j)
      CHECK(conjugate_by(out, c[j - 1]) == c[j]);
    Perm tail = identity(c[0].degree());
    for (std::uint32_t j = 1; j < k; ++j)
      tail = compose(tail, c[j - 1]);
    CHECK(conjugate_by(out, c[k - 2]) == tail);
  }

  CHECK_THROWS_AS(c_generator(0, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(c_generator(4, 2, 3), std::invalid_argument);
}

TEST_CASE("m^2 in and out shuffles on m^3 cards reach 12 orderings") {
  const PowerDeckParams p(2, 3, 2);
  const Enumeration e = bfs_enumerate(
      p.deck_size(),
      {power_shuffle(p, ShuffleKind::In), power_shuffle(p, ShuffleKind::Out)});
  CHECK(e.complete);
  CHECK(e.size() == 12);
}
