#include "mshuffle/bigint.hpp"

namespace mshuffle {

BigNat factorial(unsigned n) {
  BigNat r = 1;
  for (unsigned i = 2; i <= n; ++i)
    r *= i;
  return r;
}

} // namespace mshuffle
