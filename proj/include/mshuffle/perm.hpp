#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mshuffle/bigint.hpp"

namespace mshuffle {

enum class Parity { Even, Odd };

// A permutation of the card indices {0, ..., degree-1}, stored as a
// destination map: dest[i] is the new index of the card currently at
// index i.
//
// IMPORTANT: products read LEFT TO RIGHT. compose(a, b) applies a first
// and then b, i.e. compose(a, b).dest[i] == b.dest[a.dest[i]]. Most
// group-theory libraries use the opposite convention; everything in this
// library (powers, conjugates, generator words) follows the left-to-right
// reading.
class Perm {
public:
  using index_t = std::uint32_t;

  // Identity permutation on `degree` points. degree == 0 is rejected.
  explicit Perm(index_t degree);

  // From a destination map; throws std::invalid_argument unless `dest`
  // is a bijection on {0, ..., dest.size()-1} of positive size.
  explicit Perm(std::vector<index_t> dest);

  index_t degree() const noexcept { return static_cast<index_t>(dest_.size()); }
  index_t operator()(index_t i) const { return dest_[i]; }
  const std::vector<index_t>& dest() const noexcept { return dest_; }

  bool is_identity() const noexcept;

  friend bool operator==(const Perm& a, const Perm& b) noexcept = default;

private:
  std::vector<index_t> dest_;
};

Perm identity(Perm::index_t degree);
Perm compose(const Perm& a, const Perm& b); // apply a, then b
Perm inverse(const Perm& a);
Perm power(const Perm& a, long long e); // e may be negative or zero

inline Perm operator*(const Perm& a, const Perm& b) { return compose(a, b); }

// Disjoint cycles in canonical form: each cycle starts at its minimum
// element, cycles sorted by that minimum, fixed points included as
// length-1 cycles.
std::vector<std::vector<Perm::index_t>> cycle_decomposition(const Perm& a);

// Least e >= 1 with power(a, e) == identity; the lcm of the cycle lengths.
BigNat element_order(const Perm& a);

Parity parity(const Perm& a);

// Rearranged deck: output[a.dest[i]] = deck[i].
template <typename T>
std::vector<T> apply_to_deck(const Perm& a, const std::vector<T>& deck) {
  if (deck.size() != a.degree())
    throw std::invalid_argument("apply_to_deck: deck length does not match degree");
  std::vector<T> out(deck.size());
  for (Perm::index_t i = 0; i < a.degree(); ++i)
    out[a(i)] = deck[i];
  return out;
}

// "(0)(1 2)(3)" — canonical disjoint-cycle form, fixed points included.
std::string cycle_string(const Perm& a);

// "[0 2 1 3]" — the destination map on one line.
std::string oneline_string(const Perm& a);

std::size_t hash_value(const Perm& a) noexcept;

} // namespace mshuffle

template <>
struct std::hash<mshuffle::Perm> {
  std::size_t operator()(const mshuffle::Perm& p) const noexcept {
    return mshuffle::hash_value(p);
  }
};
