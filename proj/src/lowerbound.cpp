#include "dsc/lowerbound.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "dsc/errors.hpp"
#include "dsc/io.hpp"

namespace dsc {

bool Coloring::proper() const {
  return std::all_of(graph.edges().begin(), graph.edges().end(),
                     [&](const Graph::Edge& e) { return color_of[e.first] != color_of[e.second]; });
}

std::size_t Coloring::color_count() const {
  return std::set<std::size_t>(color_of.begin(), color_of.end()).size();
}

Coloring extract_coloring(const BicliquePartition& partition, const ConceptClass& disambiguation,
                          std::span<const std::size_t> assignment) {
  const auto& graph = partition.graph();
  if (disambiguation.domain_size() != partition.size() || !disambiguation.is_total())
    throw std::invalid_argument("disambiguation must be total over the part indices");
  if (assignment.size() != graph.vertex_count())
    throw std::invalid_argument("assignment must name one concept per vertex");
  Coloring coloring{graph, std::vector<std::size_t>(graph.vertex_count())};
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    auto c = assignment[v];
    if (c >= disambiguation.size() || !agrees(disambiguation[c], support_sample(vertex_concept(partition, v))))
      throw std::invalid_argument("concept assigned to vertex " + std::to_string(v) +
                                  " does not disambiguate its partial concept");
    // Concepts in a class are distinct, so the index identifies the label vector.
    coloring.color_of[v] = c;
  }
  for (auto [u, v] : graph.edges())
    if (coloring.color_of[u] == coloring.color_of[v]) {
      auto part = partition.part_of_edge(u, v);
      throw ContractViolation("edge {" + std::to_string(u) + "," + std::to_string(v) + "} of part " +
                              std::to_string(part) + " got one color although h_u and h_v disagree there");
    }
  return coloring;
}

std::vector<std::size_t> first_agreeing_assignment(const BicliquePartition& partition,
                                                   const ConceptClass& disambiguation) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < partition.graph().vertex_count(); ++v) {
    auto c = find_disambiguator(disambiguation, vertex_concept(partition, v));
    if (!c) throw std::invalid_argument("no concept disambiguates vertex " + std::to_string(v));
    out.push_back(*c);
  }
  return out;
}

namespace {

constexpr std::size_t kMaxChromaticVertices = 10;

struct ColorSearch {
  const Graph& graph;
  std::vector<std::size_t> order;  // by descending degree
  std::size_t colors;

  explicit ColorSearch(const Graph& g, std::size_t k) : graph(g), order(g.vertex_count()), colors(k) {
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> degree(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) ++degree[u], ++degree[v];
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return degree[a] > degree[b]; });
  }

  bool fits(const std::vector<int>& color, std::size_t pos, int c) const {
    for (std::size_t j = 0; j < pos; ++j)
      if (color[order[j]] == c && graph.adjacent(order[j], order[pos])) return false;
    return true;
  }

  // Colors at positions [pos, n) given a consistent prefix using `used` colors.
  bool extend(std::vector<int>& color, std::size_t pos, int used) const {
    if (pos == order.size()) return true;
    const int limit = std::min<int>(used + 1, static_cast<int>(colors));
    for (int c = 0; c < limit; ++c) {
      if (!fits(color, pos, c)) continue;
      color[order[pos]] = c;
      if (extend(color, pos + 1, std::max(used, c + 1))) return true;
    }
    color[order[pos]] = -1;
    return false;
  }

  // All consistent symmetry-broken colorings of the first `depth` positions.
  void prefixes(std::vector<int>& color, std::size_t pos, int used, std::size_t depth,
                std::vector<std::pair<std::vector<int>, int>>& out) const {
    if (pos == depth) {
      out.emplace_back(color, used);
      return;
    }
    const int limit = std::min<int>(used + 1, static_cast<int>(colors));
    for (int c = 0; c < limit; ++c) {
      if (!fits(color, pos, c)) continue;
      color[order[pos]] = c;
      prefixes(color, pos + 1, std::max(used, c + 1), depth, out);
    }
    color[order[pos]] = -1;
  }
};

void check_size(const Graph& g) {
  if (g.vertex_count() > kMaxChromaticVertices)
    throw ResourceError("exact chromatic number limited to " + std::to_string(kMaxChromaticVertices) +
                        " vertices");
}

}  // namespace

std::size_t chromatic_number(const Graph& graph) {
  check_size(graph);
  const std::size_t n = graph.vertex_count();
  for (std::size_t k = 1; k <= n; ++k) {
    ColorSearch search(graph, k);
    std::vector<int> color(n, -1);
    std::vector<std::pair<std::vector<int>, int>> starts;
    const std::size_t depth = std::min<std::size_t>(3, n);
    search.prefixes(color, 0, 0, depth, starts);
    std::atomic<bool> found{false};
    const auto count = static_cast<std::int64_t>(starts.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
      if (found.load(std::memory_order_relaxed)) continue;
      auto local = starts[i].first;
      if (search.extend(local, depth, starts[i].second)) found = true;
    }
    if (found) return k;
  }
  return n;
}

namespace serial {

std::size_t chromatic_number(const Graph& graph) {
  check_size(graph);
  const std::size_t n = graph.vertex_count();
  for (std::size_t k = 1; k <= n; ++k) {
    ColorSearch search(graph, k);
    std::vector<int> color(n, -1);
    if (search.extend(color, 0, 0)) return k;
  }
  return n;
}

}  // namespace serial

CompressionScheme star_scheme(std::size_t t) {
  if (t < 2) throw std::invalid_argument("star_scheme needs t >= 2");
  const std::size_t n = t - 1;
  CompressionScheme out;
  out.name = "star(t=" + std::to_string(t) + ")";
  out.compress = [](const Sample& s) {
    for (const auto& e : s)
      if (e.label == Label(0)) return CompressionKey{Sample({e}), {}};
    return CompressionKey{};
  };
  out.reconstruct = [n](const CompressionKey& key) {
    Concept h(n, Label(1));
    for (const auto& e : key.subsample)
      if (e.index < n && e.label == Label(0)) h[e.index] = Label(0);
    return h;
  };
  return out;
}

bool PipelineReport::holds() const {
  if (!feasible_a_priori) return !(scheme_valid && within_declared_size);
  return scheme_valid && within_declared_size && coloring_proper && below_ceiling && above_floor;
}

PipelineReport pipeline_certificate(std::size_t t, const CompressionScheme& scheme, std::size_t k,
                                    std::size_t bit_budget) {
  const auto partition = star_partition(t);
  const auto cls = biclique_class(partition);
  PipelineReport r;
  r.t = t;
  r.n = partition.size();
  r.k = k;
  r.bit_budget = bit_budget;
  r.scheme_name = scheme.name;
  r.counting_ceiling = counting_bound(r.n, 2, k, bit_budget);
  r.chromatic_floor = chromatic_number(partition.graph());
  r.feasible_a_priori = r.counting_ceiling >= r.chromatic_floor;

  const auto elongated = elongating(scheme, r.n);
  r.scheme_valid = true;
  for (std::size_t m = 1; m <= r.n; ++m) {
    auto report = verify_scheme(cls, elongated, m);
    r.measured_max_subsample = std::max(r.measured_max_subsample, report.max_subsample);
    r.measured_max_bits = std::max(r.measured_max_bits, report.max_bits);
    if (!report.valid()) {
      r.scheme_valid = false;
      r.notes.push_back("scheme fails at m=" + std::to_string(m) + " on " +
                        (report.failures.empty() ? std::string("?") : serialize_sample(report.failures[0].sample)));
    }
  }
  r.within_declared_size = r.measured_max_subsample <= k && r.measured_max_bits <= bit_budget;
  if (!r.within_declared_size) r.notes.push_back("scheme keys exceed the declared (k, bits)");

  if (!r.feasible_a_priori) {
    r.notes.push_back("infeasible: " + std::to_string(r.counting_ceiling) + " keys cannot cover chi = " +
                      std::to_string(r.chromatic_floor));
    if (r.scheme_valid && r.within_declared_size)
      throw ContractViolation("a valid scheme fits a key space smaller than the chromatic number");
    return r;
  }
  if (!r.scheme_valid || !r.within_declared_size) return r;

  const auto disambiguation = extract_disambiguation(cls, scheme, k, bit_budget);
  r.disambiguation_size = disambiguation.size();
  const auto coloring =
      extract_coloring(partition, disambiguation, first_agreeing_assignment(partition, disambiguation));
  r.coloring_proper = coloring.proper();
  r.coloring_colors = coloring.color_count();
  r.below_ceiling = r.disambiguation_size <= r.counting_ceiling;
  r.above_floor = r.disambiguation_size >= r.chromatic_floor;
  if (!r.above_floor)
    throw ContractViolation("extracted disambiguation smaller than the chromatic number");
  return r;
}

}  // namespace dsc
