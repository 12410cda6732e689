#include "mshuffle/perm.hpp"

#include <numeric>
#include <sstream>
#include <utility>

namespace mshuffle {

Perm::Perm(index_t degree) {
  if (degree == 0)
    throw std::invalid_argument("Perm: degree must be at least 1");
  dest_.resize(degree);
  std::iota(dest_.begin(), dest_.end(), index_t{0});
}

Perm::Perm(std::vector<index_t> dest) : dest_(std::move(dest)) {
  if (dest_.empty())
    throw std::invalid_argument("Perm: degree must be at least 1");
  std::vector<bool> seen(dest_.size(), false);
  for (index_t v : dest_) {
    if (v >= dest_.size() || seen[v])
      throw std::invalid_argument("Perm: destination map is not a bijection");
    seen[v] = true;
  }
}

bool Perm::is_identity() const noexcept {
  for (index_t i = 0; i < degree(); ++i)
    if (dest_[i] != i)
      return false;
  return true;
}

Perm identity(Perm::index_t degree) { return Perm(degree); }

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<Perm::index_t> dest(a.degree());
  for (Perm::index_t i = 0; i < a.degree(); ++i)
    dest[i] = b(a(i));
  return Perm(std::move(dest));
}

Perm inverse(const Perm& a) {
  std::vector<Perm::index_t> dest(a.degree());
  for (Perm::index_t i = 0; i < a.degree(); ++i)
    dest[a(i)] = i;
  return Perm(std::move(dest));
}

Perm power(const Perm& a, long long e) {
  if (e < 0)
    return power(inverse(a), -e);
  Perm result = identity(a.degree());
  Perm sq = a;
  unsigned long long n = static_cast<unsigned long long>(e);
  while (n > 0) {
    if (n & 1)
      result = compose(result, sq);
    n >>= 1;
    if (n > 0)
      sq = compose(sq, sq);
  }
  return result;
}

std::vector<std::vector<Perm::index_t>> cycle_decomposition(const Perm& a) {
  std::vector<std::vector<Perm::index_t>> cycles;
  std::vector<bool> visited(a.degree(), false);
  // Scanning upward means every unvisited point is the minimum of its
  // cycle, which gives the canonical form directly.
  for (Perm::index_t i = 0; i < a.degree(); ++i) {
    if (visited[i])
      continue;
    std::vector<Perm::index_t> cycle;
    Perm::index_t j = i;
    do {
      visited[j] = true;
      cycle.push_back(j);
      j = a(j);
    } while (j != i);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

BigNat element_order(const Perm& a) {
  BigNat order = 1;
  for (const auto& cycle : cycle_decomposition(a))
    order = boost::multiprecision::lcm(order, BigNat(cycle.size()));
  return order;
}

Parity parity(const Perm& a) {
  std::size_t cycles = cycle_decomposition(a).size();
  return (a.degree() - cycles) % 2 == 0 ? Parity::Even : Parity::Odd;
}

std::string cycle_string(const Perm& a) {
  std::ostringstream os;
  for (const auto& cycle : cycle_decomposition(a)) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0)
        os << ' ';
      os << cycle[i];
    }
    os << ')';
  }
  return os.str();
}

std::string oneline_string(const Perm& a) {
  std::ostringstream os;
  os << '[';
  for (Perm::index_t i = 0; i < a.degree(); ++i) {
    if (i > 0)
      os << ' ';
    os << a(i);
  }
  os << ']';
  return os.str();
}

std::size_t hash_value(const Perm& a) noexcept {
  // FNV-1a over the destination words.
  std::size_t h = 14695981039346656037ull;
  for (Perm::index_t v : a.dest()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace mshuffle
