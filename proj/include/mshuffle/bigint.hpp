#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mshuffle {

// Exact arbitrary-precision natural. Shuffle group orders overflow 64 bits
// already for moderate decks (26!*2^26 on 52 cards), so orders are never
// held in machine integers.
using BigNat = boost::multiprecision::cpp_int;

BigNat factorial(unsigned n);

} // namespace mshuffle
