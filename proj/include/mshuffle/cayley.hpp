#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mshuffle/perm.hpp"
#include "mshuffle/shuffles.hpp"

namespace mshuffle {

inline constexpr std::size_t kDefaultCayleyCap = 5000;

struct LabeledGenerator {
  std::string label;
  Perm perm;
  // Drives edge colour in DOT output: Out -> red, In -> blue,
  // nullopt -> black.
  std::optional<ShuffleKind> kind;
};

// Cayley graph of the group generated by the labeled generators, with one
// vertex per group element. Each vertex carries the deck arrangement
// obtained by applying its element to the sorted deck, exactly as the
// figures draw them.
struct CayleyGraph {
  struct Edge {
    std::size_t from;
    std::size_t to;
    std::size_t generator; // index into generators
  };

  Perm::index_t degree = 0;
  std::vector<Perm> vertices; // BFS discovery order, identity first
  std::vector<std::vector<Perm::index_t>> arrangements;
  std::vector<LabeledGenerator> generators;
  std::vector<Edge> edges; // vertex g has an edge to compose(g, s) per generator s
};

// Throws ResourceLimitError when the group does not fit under `cap`
// vertices; the export is meant for small groups only.
CayleyGraph build_cayley(Perm::index_t degree,
                         const std::vector<LabeledGenerator>& generators,
                         std::size_t cap = kDefaultCayleyCap);

// Directed-graph document, byte-deterministic given the graph: one node
// line per vertex (named by its comma-joined arrangement, in discovery
// order), one edge line per edge.
std::string to_dot(const CayleyGraph& g);

} // namespace mshuffle
