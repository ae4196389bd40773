#include "dsc/constructions.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "dsc/dimensions.hpp"
#include "dsc/errors.hpp"

namespace dsc {

__extension__ using u128 = unsigned __int128;

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), adjacency_(vertex_count * vertex_count, 0) {
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u >= vertex_count_ || v >= vertex_count_) throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  for (auto [u, v] : edges_) adjacency_[u * vertex_count_ + v] = adjacency_[v * vertex_count_ + u] = 1;
}

Graph Graph::complete(std::size_t t) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < t; ++u)
    for (std::size_t v = u + 1; v < t; ++v) edges.emplace_back(u, v);
  return Graph(t, std::move(edges));
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  return u < vertex_count_ && v < vertex_count_ && adjacency_[u * vertex_count_ + v];
}

BicliquePartition::BicliquePartition(Graph graph, std::vector<Biclique> parts)
    : graph_(std::move(graph)), parts_(std::move(parts)) {
  const std::size_t n = graph_.vertex_count();
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  edge_part_.assign(n * n, kNone);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const auto& part = parts_[i];
    if (part.left.empty() || part.right.empty())
      throw std::invalid_argument("part " + std::to_string(i) + " has an empty side");
    for (auto u : part.left)
      for (auto v : part.right) {
        if (u >= n || v >= n) throw std::invalid_argument("part vertex out of range");
        if (u == v) throw std::invalid_argument("part " + std::to_string(i) + " has overlapping sides");
        if (!graph_.adjacent(u, v))
          throw std::invalid_argument("part " + std::to_string(i) + " covers a non-edge");
        if (edge_part_[u * n + v] != kNone)
          throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                      "} covered twice");
        edge_part_[u * n + v] = edge_part_[v * n + u] = i;
      }
  }
  for (auto [u, v] : graph_.edges())
    if (edge_part_[u * n + v] == kNone)
      throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) + "} not covered");
}

std::size_t BicliquePartition::part_of_edge(std::size_t u, std::size_t v) const {
  if (!graph_.adjacent(u, v)) throw std::invalid_argument("not an edge");
  return edge_part_[u * graph_.vertex_count() + v];
}

BicliquePartition star_partition(std::size_t t) {
  if (t < 2) throw std::invalid_argument("star_partition needs t >= 2");
  std::vector<Biclique> parts;
  for (std::size_t i = 0; i + 1 < t; ++i) {
    Biclique b;
    b.left = {i};
    for (std::size_t v = i + 1; v < t; ++v) b.right.push_back(v);
    parts.push_back(std::move(b));
  }
  return BicliquePartition(Graph::complete(t), std::move(parts));
}

Concept vertex_concept(const BicliquePartition& partition, std::size_t v) {
  Concept c(partition.size(), Label::star());
  for (std::size_t i = 0; i < partition.size(); ++i) {
    const auto& part = partition.parts()[i];
    if (std::find(part.left.begin(), part.left.end(), v) != part.left.end())
      c[i] = Label(0);
    else if (std::find(part.right.begin(), part.right.end(), v) != part.right.end())
      c[i] = Label(1);
  }
  return c;
}

std::vector<std::size_t> biclique_vertex_concepts(const BicliquePartition& partition) {
  std::map<Concept, std::size_t> index;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < partition.graph().vertex_count(); ++v) {
    auto [it, inserted] = index.emplace(vertex_concept(partition, v), index.size());
    out.push_back(it->second);
  }
  return out;
}

ConceptClass biclique_class(const BicliquePartition& partition) {
  std::vector<Concept> concepts;
  for (std::size_t v = 0; v < partition.graph().vertex_count(); ++v) {
    auto c = vertex_concept(partition, v);
    if (std::find(concepts.begin(), concepts.end(), c) == concepts.end()) concepts.push_back(std::move(c));
  }
  return ConceptClass(partition.size(), std::move(concepts), ClassKind::Partial);
}

ConceptClass unique_label_disambiguation(const ConceptClass& cls) {
  if (cls.is_total()) return cls;
  auto used = cls.labels_used();
  const std::uint64_t base = used.empty() ? 0 : std::uint64_t{used.back().value()} + 1;
  if (base + cls.size() > Label::kMaxValue) throw ResourceError("fresh labels exhausted");
  std::vector<Concept> out;
  out.reserve(cls.size());
  for (std::size_t j = 0; j < cls.size(); ++j) {
    Concept c = cls[j];
    const Label fresh(static_cast<Label::value_type>(base + j));
    for (auto& l : c)
      if (l.is_star()) l = fresh;
    out.push_back(std::move(c));
  }
  return ConceptClass(cls.domain_size(), std::move(out), ClassKind::Total);
}

ConceptClass table1_family(std::size_t r) {
  if (r < 1 || r > 10) throw ResourceError("table1_family needs 1 <= r <= 10");
  const std::size_t points = std::size_t{1} << r;
  std::vector<Concept> rows;
  for (std::size_t j = 1; j <= r; ++j) {
    Concept row(points);
    for (std::size_t p = 0; p < points; ++p) {
      bool member = (p >> (r - j)) & 1u;
      row[p] = Label(static_cast<Label::value_type>(2 * j - 1 + (member ? 1 : 0)));
    }
    rows.push_back(std::move(row));
  }
  return ConceptClass(points, std::move(rows), ClassKind::Total);
}

ConceptClass haussler_long(std::size_t m, std::size_t c, std::size_t d) {
  if (d < 1 || d > m) throw std::invalid_argument("haussler_long needs 1 <= d <= m");
  if (c < 2) throw std::invalid_argument("haussler_long needs c >= 2");
  u128 count = 0;
  u128 power = 1;
  for (std::size_t i = 0; i <= d; ++i) {
    count += static_cast<u128>(binomial(m, i)) * power;
    power *= (c - 1);
    if (count > (1u << 24)) throw ResourceError("haussler_long class too large to materialize");
  }
  std::vector<Concept> out;
  Concept cur(m, Label(0));
  // Lexicographic walk over label vectors, skipping subtrees with too many nonzeros.
  auto rec = [&](auto&& self, std::size_t x, std::size_t nonzero) -> void {
    if (x == m) {
      out.push_back(cur);
      return;
    }
    for (std::size_t y = 0; y < c; ++y) {
      if (y > 0 && nonzero == d) break;
      cur[x] = Label(static_cast<Label::value_type>(y));
      self(self, x + 1, nonzero + (y > 0 ? 1 : 0));
    }
    cur[x] = Label(0);
  };
  rec(rec, 0, 0);
  return ConceptClass(m, std::move(out), ClassKind::Total);
}

ExampleClasses section41_example() {
  const Label s = Label::star();
  auto L = [](Label::value_type v) { return Label(v); };
  std::vector<Concept> partial = {
      {L(0), L(0), L(0)}, {s, L(0), L(0)}, {L(0), s, L(0)}, {L(0), L(0), s},
      {s, s, L(0)},       {s, L(0), s},    {L(0), s, s},    {s, s, s},
  };
  std::vector<Concept> total = {
      {L(0), L(0), L(0)},   {L(3), L(0), L(0)},  {L(0), L(7), L(0)},   {L(0), L(0), L(11)},
      {L(20), L(20), L(0)}, {L(39), L(0), L(39)}, {L(0), L(53), L(53)}, {L(100), L(100), L(100)},
  };
  return {ConceptClass(3, std::move(partial), ClassKind::Partial),
          ConceptClass(3, std::move(total), ClassKind::Total)};
}

}  // namespace dsc
