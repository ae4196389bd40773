#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "dsc/concept_class.hpp"

namespace dsc {

/// Simple undirected graph on vertices 0..vertex_count-1.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;  // first < second

  Graph() = default;
  /// Throws std::invalid_argument on self-loops, duplicate edges or bad vertices.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  static Graph complete(std::size_t t);
  static Graph cycle(std::size_t n);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(std::size_t u, std::size_t v) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;       // sorted
  std::vector<char> adjacency_;   // row-major
};

struct Biclique {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
};

/// A graph together with complete bipartite pieces whose edge sets partition
/// the graph's edges. The exact-cover property is checked on construction.
class BicliquePartition {
 public:
  /// Throws std::invalid_argument if the parts do not exactly partition the edges.
  BicliquePartition(Graph graph, std::vector<Biclique> parts);

  const Graph& graph() const { return graph_; }
  const std::vector<Biclique>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }

  /// The part containing edge {u, v}.
  std::size_t part_of_edge(std::size_t u, std::size_t v) const;

 private:
  Graph graph_;
  std::vector<Biclique> parts_;
  std::vector<std::size_t> edge_part_;  // row-major over vertex pairs
};

/// K_t split into stars ({i}, {i+1, ..., t-1}) for i = 0..t-2.
BicliquePartition star_partition(std::size_t t);

/// h_v(i) = 0 if v is on the left of part i, 1 if on the right, * otherwise.
/// Vertices with identical vectors (only possible for non-adjacent vertices)
/// share one concept.
ConceptClass biclique_class(const BicliquePartition& partition);

Concept vertex_concept(const BicliquePartition& partition, std::size_t v);

/// vertex -> index of its concept in biclique_class(partition).
std::vector<std::size_t> biclique_vertex_concepts(const BicliquePartition& partition);

/// Replaces every * of the concept at position j with the label L + j, where L
/// is one above the largest Defined label. A total input comes back unchanged.
ConceptClass unique_label_disambiguation(const ConceptClass& cls);

/// Rows j = 1..r over the 2^r subsets c of {1..r}; row j maps c to
/// 2j-1 + [j in c]. Point p encodes c with element 1 as the highest bit.
/// Throws ResourceError unless 1 <= r <= 10.
ConceptClass table1_family(std::size_t r);

/// All concepts over m points with labels 0..c-1 and at most d nonzero entries.
/// Throws std::invalid_argument unless 1 <= d <= m and c >= 2.
ConceptClass haussler_long(std::size_t m, std::size_t c, std::size_t d);

struct ExampleClasses {
  ConceptClass partial;
  ConceptClass total;
};

/// Eight partial patterns on three points and their fresh-label disambiguation
/// (3, 7, 11, 20, 39, 53, 100).
ExampleClasses section41_example();

}  // namespace dsc
