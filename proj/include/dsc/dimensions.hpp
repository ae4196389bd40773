#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "dsc/concept_class.hpp"

namespace dsc {

enum class ShatterKind { VC, DS, Natarajan, Graph };

std::string_view to_string(ShatterKind kind);
std::optional<ShatterKind> parse_shatter_kind(std::string_view text);

/// DS witness: the maximal neighbor-closed set of full-support patterns on S.
struct DsWitness {
  std::vector<Pattern> patterns;                  // sorted
  std::vector<std::vector<std::size_t>> neighbor; // neighbor[p][i]: an i-neighbor of patterns[p]
  std::vector<std::size_t> realizers;             // realizers[p]: a concept with pattern p
};

/// VC witness: realizers[mask] has label 1 exactly at the coordinates in mask.
struct CubeWitness {
  std::vector<std::size_t> realizers;
};

/// Natarajan witness: realizers[mask] equals concept `first` on the coordinates
/// in mask and concept `second` elsewhere.
struct PairWitness {
  std::size_t first = 0;
  std::size_t second = 0;
  std::vector<std::size_t> realizers;
};

/// Graph witness: realizers[mask] agrees with concept `center` exactly on the
/// coordinates in mask.
struct CenterWitness {
  std::size_t center = 0;
  std::vector<std::size_t> realizers;
};

/// Concept indices refer to the class the witness was computed on. Bit i of a
/// mask stands for coordinate points[i].
struct ShatterWitness {
  std::vector<std::size_t> points;
  ShatterKind kind = ShatterKind::DS;
  std::variant<DsWitness, CubeWitness, PairWitness, CenterWitness> data;
};

// All checkers reject an empty or repeated `points` with std::invalid_argument
// and out-of-range indices with std::out_of_range.

/// Prunes full-support patterns lacking an i-neighbor until a fixpoint.
std::optional<ShatterWitness> ds_shatters(const ConceptClass& cls, std::span<const std::size_t> points);

/// Exhaustive oracle over subsets of full-support patterns. Returns the union
/// of all valid subsets. Throws ResourceError past 20 patterns.
std::optional<ShatterWitness> ds_shatters_bruteforce(const ConceptClass& cls,
                                                     std::span<const std::size_t> points);

/// Requires every Defined label in {0, 1}.
std::optional<ShatterWitness> vc_shatters(const ConceptClass& cls, std::span<const std::size_t> points);

/// Total classes only.
std::optional<ShatterWitness> n_shatters(const ConceptClass& cls, std::span<const std::size_t> points);

/// Total classes only.
std::optional<ShatterWitness> g_shatters(const ConceptClass& cls, std::span<const std::size_t> points);

std::optional<ShatterWitness> shatters(const ConceptClass& cls, std::span<const std::size_t> points,
                                       ShatterKind kind);

/// Replays a witness against the class by direct definition checks.
bool verify_witness(const ConceptClass& cls, const ShatterWitness& witness);

/// Rejects kinds that do not apply to the class (VC on non-binary labels,
/// Natarajan/Graph on partial classes).
void check_kind_applicable(const ConceptClass& cls, ShatterKind kind);

bool is_binary(const ConceptClass& cls);

struct DimensionOptions {
  /// Check every subset size instead of stopping at the first unshattered one.
  bool exhaustive = false;
};

struct DimensionResult {
  int dimension = -1;  // -1 for the empty class
  std::optional<ShatterWitness> witness;  // lexicographically first at `dimension`, when >= 1
};

/// OpenMP search over index subsets of ascending size.
DimensionResult dimension(const ConceptClass& cls, ShatterKind kind, DimensionOptions opts = {});

/// dimension(dual(cls), kind).
DimensionResult dual_dimension(const ConceptClass& cls, ShatterKind kind, DimensionOptions opts = {});

namespace serial {

/// Reference implementation of dsc::dimension.
DimensionResult dimension(const ConceptClass& cls, ShatterKind kind, DimensionOptions opts = {});

}  // namespace serial

/// Lexicographic unranking of d-subsets of {0..n-1}.
std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t d, std::uint64_t rank);
std::uint64_t binomial(std::size_t n, std::size_t k);

}  // namespace dsc
