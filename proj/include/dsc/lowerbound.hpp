#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dsc/compression.hpp"
#include "dsc/constructions.hpp"

namespace dsc {

struct Coloring {
  Graph graph;
  std::vector<std::size_t> color_of;

  bool proper() const;
  std::size_t color_count() const;
};

/// Colors vertex v by the concept assignment[v] of a total disambiguation of
/// biclique_class(partition). Throws std::invalid_argument when an assigned
/// concept does not agree with h_v on its support, and ContractViolation if
/// the coloring comes out improper.
Coloring extract_coloring(const BicliquePartition& partition, const ConceptClass& disambiguation,
                          std::span<const std::size_t> assignment);

/// vertex -> first concept of `disambiguation` agreeing with h_v. Throws
/// std::invalid_argument if some vertex has none.
std::vector<std::size_t> first_agreeing_assignment(const BicliquePartition& partition,
                                                   const ConceptClass& disambiguation);

/// Exact chromatic number by branch and bound; throws ResourceError above 10
/// vertices. The first branching levels are explored in parallel.
std::size_t chromatic_number(const Graph& graph);

namespace serial {
std::size_t chromatic_number(const Graph& graph);
}

/// Hand-built k = 1, zero-bit scheme for biclique_class(star_partition(t)):
/// keep the entry labeled 0 if there is one, otherwise keep nothing.
/// Reconstruction puts 0 at that entry and 1 everywhere else.
CompressionScheme star_scheme(std::size_t t);

struct PipelineReport {
  std::size_t t = 0;
  std::size_t n = 0;  // parts in the star partition
  std::size_t k = 0;
  std::size_t bit_budget = 0;
  std::string scheme_name;

  bool scheme_valid = false;               // valid at every length 1..n (after elongation)
  std::size_t measured_max_subsample = 0;
  std::size_t measured_max_bits = 0;
  bool within_declared_size = false;       // measured sizes fit (k, bit_budget)

  std::uint64_t counting_ceiling = 0;      // counting_bound(n, 2, k, bit_budget)
  std::size_t chromatic_floor = 0;         // chi(K_t)
  bool feasible_a_priori = false;          // counting_ceiling >= chromatic_floor

  std::size_t disambiguation_size = 0;     // D
  std::size_t coloring_colors = 0;
  bool coloring_proper = false;
  bool below_ceiling = false;              // D <= counting_ceiling
  bool above_floor = false;                // D >= chromatic_floor

  std::vector<std::string> notes;

  /// Every check that applies passed.
  bool holds() const;
};

/// Runs scheme -> disambiguation -> coloring on K_t with its star partition.
/// If the (k, bit_budget) key space cannot reach chi(K_t), the report is
/// returned flagged infeasible without running the scheme.
PipelineReport pipeline_certificate(std::size_t t, const CompressionScheme& scheme, std::size_t k,
                                    std::size_t bit_budget);

}  // namespace dsc
