#include "mshuffle/cayley.hpp"

#include <numeric>
#include <sstream>
#include <unordered_map>

#include "mshuffle/group.hpp"

namespace mshuffle {

CayleyGraph build_cayley(Perm::index_t degree,
                         const std::vector<LabeledGenerator>& generators,
                         std::size_t cap) {
  std::vector<Perm> perms;
  perms.reserve(generators.size());
  for (const LabeledGenerator& g : generators)
    perms.push_back(g.perm);

  Enumeration enumeration = bfs_enumerate(degree, perms, cap);
  if (!enumeration.complete)
    throw ResourceLimitError("cayley: group exceeds the vertex cap of " +
                             std::to_string(cap));

  CayleyGraph graph;
  graph.degree = degree;
  graph.generators = generators;
  graph.vertices = std::move(enumeration.elements);

  std::vector<Perm::index_t> sorted_deck(degree);
  std::iota(sorted_deck.begin(), sorted_deck.end(), Perm::index_t{0});

  std::unordered_map<Perm, std::size_t> index_of;
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    graph.arrangements.push_back(apply_to_deck(graph.vertices[v], sorted_deck));
    index_of.emplace(graph.vertices[v], v);
  }

  for (std::size_t v = 0; v < graph.vertices.size(); ++v)
    for (std::size_t s = 0; s < perms.size(); ++s)
      graph.edges.push_back(
          {v, index_of.at(compose(graph.vertices[v], perms[s])), s});

  return graph;
}

namespace {

std::string arrangement_name(const std::vector<Perm::index_t>& arrangement) {
  std::ostringstream os;
  for (std::size_t i = 0; i < arrangement.size(); ++i) {
    if (i > 0)
      os << ',';
    os << arrangement[i];
  }
  return os.str();
}

const char* edge_color(const LabeledGenerator& g) {
  if (!g.kind)
    return "black";
  return *g.kind == ShuffleKind::Out ? "red" : "blue";
}

} // namespace

std::string to_dot(const CayleyGraph& g) {
  std::ostringstream os;
  os << "digraph shuffle_group {\n";
  for (const auto& arrangement : g.arrangements)
    os << "  \"" << arrangement_name(arrangement) << "\";\n";
  for (const CayleyGraph::Edge& e : g.edges) {
    const LabeledGenerator& gen = g.generators[e.generator];
    os << "  \"" << arrangement_name(g.arrangements[e.from]) << "\" -> \""
       << arrangement_name(g.arrangements[e.to]) << "\" [label=\"" << gen.label
       << "\", color=\"" << edge_color(gen) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace mshuffle
