#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dsc/concept_class.hpp"
#include "dsc/scheme_table.hpp"

namespace dsc {

struct MinCompressionOptions {
  /// Largest subsample size tried; the search stops early once a scheme exists.
  std::size_t max_k = static_cast<std::size_t>(-1);
  std::uint64_t node_budget = 20'000'000;
  std::size_t sample_budget = 200'000;
};

struct MinCompressionResult {
  /// Smallest feasible subsample size, or nullopt if none up to max_k.
  std::optional<std::size_t> k;
  /// Table scheme achieving k, already replayed through verify_scheme.
  std::optional<TableScheme> certificate;
  /// Search nodes spent at each k tried, starting from 0. Every entry but the
  /// last (when k is set) is an exhaustive refutation.
  std::vector<std::uint64_t> nodes_per_k;
};

/// Exact search for a table scheme on the length-m realizable samples whose
/// keys use at most k distinct entries of the sample and at most bit_budget
/// bits. Samples sharing a key must be pairwise conflict-free, since one
/// reconstruction serves them all. Throws ResourceError past the node budget.
std::optional<TableScheme> find_scheme(const ConceptClass& cls, std::size_t m, std::size_t k,
                                       std::size_t bit_budget, const MinCompressionOptions& opts = {},
                                       std::uint64_t* nodes = nullptr);

MinCompressionResult min_compression_size(const ConceptClass& cls, std::size_t m, std::size_t bit_budget,
                                          const MinCompressionOptions& opts = {});

}  // namespace dsc
