#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dsc/concept_class.hpp"

namespace dsc {

using BitString = std::vector<bool>;

std::string to_string(const BitString& bits);
BitString parse_bits(std::string_view text);

/// The compressed form of a sample: kept entries plus side information.
struct CompressionKey {
  Sample subsample;
  BitString bits;

  /// max(|subsample|, |bits|)
  std::size_t size() const { return std::max(subsample.size(), bits.size()); }

  auto operator<=>(const CompressionKey&) const = default;
  bool operator==(const CompressionKey&) const = default;
};

/// A deterministic compress/reconstruct pair. Both functions must be pure and
/// safe to call concurrently. `compress` receives canonical samples.
struct CompressionScheme {
  std::string name;
  std::function<CompressionKey(const Sample&)> compress;
  std::function<Concept(const CompressionKey&)> reconstruct;
};

struct SchemeFailure {
  Sample sample;
  /// Entry of `sample` that was mislabeled, or sample.size() when the failure
  /// is not tied to one entry (bad key, exception, malformed reconstruction).
  std::size_t offending_index = 0;
  std::string reason;
};

enum class Verdict { Valid, Invalid, Unknown };

std::string_view to_string(Verdict v);

struct SchemeReport {
  Verdict verdict = Verdict::Unknown;
  std::size_t m = 0;
  std::size_t k_of_m = 0;          // max over samples of max(|S'|, |B|)
  std::size_t max_subsample = 0;   // max |S'|
  std::size_t max_bits = 0;        // max |B|
  std::size_t distinct_keys = 0;
  std::size_t samples_checked = 0;
  std::size_t failure_count = 0;
  std::vector<SchemeFailure> failures;  // first few, in sample order

  bool valid() const { return verdict == Verdict::Valid; }
};

struct VerifyOptions {
  std::size_t sample_budget = kDefaultSampleBudget;
  std::size_t max_recorded_failures = 16;
};

/// Checks the scheme on every realizable sample of length m: the key's
/// entries must occur in the sample and the reconstruction must be a total
/// concept matching every entry. Exceeding the sample budget yields an
/// Unknown verdict covering the samples seen so far.
SchemeReport verify_scheme(const ConceptClass& cls, const CompressionScheme& scheme, std::size_t m,
                           VerifyOptions opts = {});

namespace serial {

SchemeReport verify_scheme(const ConceptClass& cls, const CompressionScheme& scheme, std::size_t m,
                           VerifyOptions opts = {});

}  // namespace serial

/// sum_{i=0}^{k} C(m, i) c^i (2^(bit_budget+1) - 1): the number of keys made
/// of at most k distinct points of an m-point support, labeled from c labels,
/// with at most bit_budget bits. Saturates at UINT64_MAX.
std::uint64_t counting_bound(std::uint64_t m, std::uint64_t c, std::uint64_t k, std::uint64_t bit_budget);

/// Every bit string of length at most `bit_budget`, shortest first.
std::vector<BitString> all_bit_strings(std::size_t bit_budget);

/// Pads samples shorter than m by repeating their smallest entry before
/// compressing, so a scheme for length-m samples serves every shorter one.
CompressionScheme elongating(CompressionScheme inner, std::size_t m);

/// Applies reconstruct to every (realizable set of at most k distinct entries,
/// bit string of at most bit_budget bits) and keeps the distinct results.
/// Throws ContractViolation if the result does not disambiguate `cls` or
/// exceeds counting_bound.
ConceptClass extract_disambiguation(const ConceptClass& cls, const CompressionScheme& scheme, std::size_t k,
                                    std::size_t bit_budget);

/// Binary class over X x (labels used), ordered by (point, label); concept h
/// maps (x, y) to [h(x) == y].
ConceptClass to_binary_class(const ConceptClass& cls);

/// The (point, label) pairs indexing to_binary_class's domain.
std::vector<Entry> binary_domain(const ConceptClass& cls);

}  // namespace dsc
