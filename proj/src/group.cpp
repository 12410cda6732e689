#include "mshuffle/group.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace mshuffle {

namespace {

void check_degrees(Perm::index_t degree, const std::vector<Perm>& gens) {
  if (degree == 0)
    throw std::invalid_argument("group: degree must be at least 1");
  for (const Perm& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("group: generator degree mismatch");
}

// Hash set over indices into an element pool, so each element is stored
// exactly once (the pool doubles as the discovery-order listing).
struct PoolHash {
  const std::vector<Perm>* pool;
  std::size_t operator()(std::size_t i) const noexcept {
    return hash_value((*pool)[i]);
  }
};

struct PoolEq {
  const std::vector<Perm>* pool;
  bool operator()(std::size_t a, std::size_t b) const noexcept {
    return (*pool)[a] == (*pool)[b];
  }
};

} // namespace

Enumeration bfs_enumerate(Perm::index_t degree,
                          const std::vector<Perm>& generators,
                          std::size_t cap) {
  check_degrees(degree, generators);
  if (cap < 1)
    throw std::invalid_argument("bfs_enumerate: cap must be at least 1");

  Enumeration result;
  result.degree = degree;
  result.generators = generators;

  auto& pool = result.elements;
  std::unordered_set<std::size_t, PoolHash, PoolEq> seen(
      16, PoolHash{&pool}, PoolEq{&pool});

  pool.push_back(identity(degree));
  seen.insert(0);

  std::deque<std::size_t> todo{0};
  while (!todo.empty()) {
    const std::size_t current = todo.front();
    todo.pop_front();
    for (const Perm& g : generators) {
      Perm next = compose(pool[current], g);
      if (pool.size() >= cap) {
        // Would the candidate be new? Only then is the cap actually hit.
        pool.push_back(std::move(next));
        const bool is_new = seen.insert(pool.size() - 1).second;
        pool.pop_back();
        if (is_new) {
          result.complete = false;
          return result;
        }
        continue;
      }
      pool.push_back(std::move(next));
      if (seen.insert(pool.size() - 1).second)
        todo.push_back(pool.size() - 1);
      else
        pool.pop_back();
    }
  }
  return result;
}

namespace {

struct Level {
  Perm::index_t base_point;
  std::vector<Perm> gens; // generators fixing all earlier base points
  std::map<Perm::index_t, Perm> reps;     // point -> u with u(base) = point
  std::map<Perm::index_t, Perm> inv_reps; // point -> u^-1

  explicit Level(Perm::index_t point) : base_point(point) {}

  void rebuild_transversal(Perm::index_t degree) {
    reps.clear();
    inv_reps.clear();
    reps.emplace(base_point, identity(degree));
    inv_reps.emplace(base_point, identity(degree));
    std::deque<Perm::index_t> todo{base_point};
    while (!todo.empty()) {
      const Perm::index_t pt = todo.front();
      todo.pop_front();
      for (const Perm& g : gens) {
        const Perm::index_t image = g(pt);
        if (!reps.contains(image)) {
          Perm rep = compose(reps.at(pt), g);
          inv_reps.emplace(image, inverse(rep));
          reps.emplace(image, std::move(rep));
          todo.push_back(image);
        }
      }
    }
  }
};

Perm::index_t smallest_moved_point(const Perm& p) {
  for (Perm::index_t i = 0; i < p.degree(); ++i)
    if (p(i) != i)
      return i;
  throw std::logic_error("smallest_moved_point: identity permutation");
}

// Sift h through levels[from..]; returns the residue and the level at
// which sifting stopped (levels.size() when it ran off the end).
std::pair<Perm, std::size_t> strip(const std::vector<Level>& levels,
                                   std::size_t from, Perm h) {
  for (std::size_t l = from; l < levels.size(); ++l) {
    const Perm::index_t image = h(levels[l].base_point);
    auto it = levels[l].inv_reps.find(image);
    if (it == levels[l].inv_reps.end())
      return {std::move(h), l};
    h = compose(h, it->second);
  }
  return {std::move(h), levels.size()};
}

} // namespace

BSGS schreier_sims(Perm::index_t degree, const std::vector<Perm>& generators) {
  check_degrees(degree, generators);

  std::vector<Level> levels;
  std::vector<Perm> strong;

  auto fixes_prefix = [&](const Perm& g, std::size_t count) {
    for (std::size_t l = 0; l < count; ++l)
      if (g(levels[l].base_point) != levels[l].base_point)
        return false;
    return true;
  };

  // Initial base: every non-identity generator must move some base point.
  for (const Perm& g : generators) {
    if (g.is_identity())
      continue;
    if (fixes_prefix(g, levels.size()))
      levels.emplace_back(smallest_moved_point(g));
    strong.push_back(g);
  }
  for (const Perm& g : strong) {
    for (std::size_t l = 0; l < levels.size() && fixes_prefix(g, l); ++l)
      levels[l].gens.push_back(g);
  }
  for (Level& level : levels)
    level.rebuild_transversal(degree);

  // Verify from the deepest level up; a failed Schreier generator adds a
  // new strong generator below and restarts from there.
  std::size_t i = levels.size();
  while (i-- > 0) {
    bool extended = false;
    for (const auto& [point, rep] : levels[i].reps) {
      for (const Perm& g : levels[i].gens) {
        const Perm to_coset = compose(rep, g);
        const Perm& back = levels[i].inv_reps.at(g(point));
        Perm schreier = compose(to_coset, back);
        if (schreier.is_identity())
          continue;
        auto [residue, j] = strip(levels, i + 1, std::move(schreier));
        if (residue.is_identity())
          continue;
        if (j == levels.size())
          levels.emplace_back(smallest_moved_point(residue));
        strong.push_back(residue);
        for (std::size_t l = i + 1; l <= j; ++l) {
          levels[l].gens.push_back(residue);
          levels[l].rebuild_transversal(degree);
        }
        i = j + 1; // reprocess downward from the level just extended
        extended = true;
        break;
      }
      if (extended)
        break;
    }
    if (extended)
      continue;
  }

  BSGS result;
  result.degree = degree;
  result.strong_generators = std::move(strong);
  for (Level& level : levels) {
    result.base.push_back(level.base_point);
    result.order *= static_cast<unsigned>(level.reps.size());
    result.transversals.push_back(std::move(level.reps));
  }
  return result;
}

BigNat group_order(const BSGS& b) {
  BigNat order = 1;
  for (const auto& transversal : b.transversals)
    order *= static_cast<unsigned>(transversal.size());
  return order;
}

bool contains(const BSGS& b, const Perm& p) {
  if (p.degree() != b.degree)
    throw std::invalid_argument("contains: degree mismatch");
  Perm residue = p;
  for (std::size_t l = 0; l < b.base.size(); ++l) {
    const Perm::index_t image = residue(b.base[l]);
    auto it = b.transversals[l].find(image);
    if (it == b.transversals[l].end())
      return false;
    residue = compose(residue, inverse(it->second));
  }
  return residue.is_identity();
}

} // namespace mshuffle
