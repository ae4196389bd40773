#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dsc/compression.hpp"
#include "dsc/concept_class.hpp"

namespace dsc {

struct BoostingParams {
  /// Weak hypotheses must reach weighted error <= 1/2 - edge.
  double edge = 0.125;
  /// Rounds allowed on a length-m sample: round_factor * ceil(log2(m + 1)).
  std::size_t round_factor = 64;
};

/// Wire format of a boosted key: 8-bit subsample size s, then 16-bit round
/// count t, both big-endian. The subsample is t blocks of s entries.
inline constexpr std::size_t kBoostHeaderBits = 24;

BitString encode_boost_header(std::size_t subsample_size, std::size_t rounds);
/// Returns (subsample size, rounds). Throws std::invalid_argument on a
/// malformed header.
std::pair<std::size_t, std::size_t> decode_boost_header(const BitString& bits);

/// First concept of the class, in stored order, agreeing with every entry.
std::optional<std::size_t> erm(const ConceptClass& cls, std::span<const Entry> entries);

/// Per point, the most frequent label among the given concepts; ties go to
/// the smallest label.
Concept plurality_vote(const ConceptClass& cls, std::span<const std::size_t> voters);

/// Majority-vote compression by multiplicative-weights boosting over ERM
/// hypotheses trained on subsamples of at most `subsample_size` distinct
/// entries. Total classes only; 1 <= subsample_size <= 255.
///
/// compress throws RealizabilityError when no weak hypothesis exists in a
/// round and ConvergenceError when the round cap is reached.
CompressionScheme boosted_scheme(const ConceptClass& cls, std::size_t subsample_size,
                                 BoostingParams params = {});

}  // namespace dsc
