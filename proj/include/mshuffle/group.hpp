#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "mshuffle/bigint.hpp"
#include "mshuffle/errors.hpp"
#include "mshuffle/perm.hpp"

namespace mshuffle {

inline constexpr std::size_t kDefaultBfsCap = 1'000'000;

// Breadth-first closure of {identity} under right-composition with the
// generators, in discovery order (identity first). `complete` is false
// when the cap cut the enumeration short.
struct Enumeration {
  Perm::index_t degree = 0;
  std::vector<Perm> elements;
  std::vector<Perm> generators;
  bool complete = true;

  std::size_t size() const noexcept { return elements.size(); }
};

Enumeration bfs_enumerate(Perm::index_t degree,
                          const std::vector<Perm>& generators,
                          std::size_t cap = kDefaultBfsCap);

// Base and strong generating set with explicit transversals.
// transversals[l] maps each point in the orbit of base[l] (under the
// stabilizer of base[0..l-1]) to a representative u with u(base[l]) = point.
struct BSGS {
  Perm::index_t degree = 0;
  std::vector<Perm::index_t> base;
  std::vector<Perm> strong_generators;
  std::vector<std::map<Perm::index_t, Perm>> transversals;
  BigNat order = 1;
};

// Deterministic Schreier-Sims. Base points are chosen as the smallest
// point moved by the current stabilizer, so identical input always yields
// the identical chain.
BSGS schreier_sims(Perm::index_t degree, const std::vector<Perm>& generators);

// Product of the transversal sizes.
BigNat group_order(const BSGS& b);

// Membership by sifting: true iff p factors through the chain.
bool contains(const BSGS& b, const Perm& p);

} // namespace mshuffle
