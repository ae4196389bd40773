#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "dsc/compression.hpp"

namespace dsc {

/// A compression scheme given by explicit lookup tables. Compressing a sample
/// missing from the table throws std::out_of_range; reconstructing an unknown
/// key returns the fallback concept.
///
/// File format:
///   {"domain_size": n, "fallback": [..],
///    "compress":    [{"sample": [[i, y], ..], "subsample": [[i, y], ..], "bits": "01"}, ..],
///    "reconstruct": [{"subsample": [[i, y], ..], "bits": "01", "concept": [..]}, ..]}
class TableScheme {
 public:
  TableScheme(std::size_t domain_size, Concept fallback);

  void set_key(const Sample& sample, CompressionKey key);
  void set_reconstruction(CompressionKey key, Concept h);

  std::size_t domain_size() const { return domain_size_; }
  const std::map<Sample, CompressionKey>& keys() const { return keys_; }
  const std::map<CompressionKey, Concept>& reconstructions() const { return reconstructions_; }

  /// The returned scheme holds its own copy of the tables.
  CompressionScheme scheme(std::string name = "table") const;

  std::string to_json() const;
  static TableScheme from_json(std::string_view text);

 private:
  std::size_t domain_size_;
  Concept fallback_;
  std::map<Sample, CompressionKey> keys_;  // canonical samples
  std::map<CompressionKey, Concept> reconstructions_;
};

}  // namespace dsc
