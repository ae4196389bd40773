#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dsc/label.hpp"

namespace dsc {

/// One label per domain index.
using Concept = std::vector<Label>;

/// A concept restricted to a sequence of domain indices.
using Pattern = std::vector<Label>;

std::vector<std::size_t> support(const Concept& c);
bool is_total(const Concept& c);

enum class ClassKind { Partial, Total };

/// A finite table of distinct concepts over the domain {0, ..., domain_size-1}.
///
/// Concepts keep their construction order. That order is significant: it fixes
/// fresh-label assignment during disambiguation and ERM tie-breaking.
class ConceptClass {
 public:
  ConceptClass() = default;

  /// Throws std::invalid_argument on a length mismatch, a Star inside a Total
  /// class, or a duplicated concept.
  ConceptClass(std::size_t domain_size, std::vector<Concept> concepts, ClassKind kind);

  /// Total when no concept contains Star, Partial otherwise.
  static ConceptClass infer(std::size_t domain_size, std::vector<Concept> concepts);

  std::size_t domain_size() const { return domain_size_; }
  std::size_t size() const { return concepts_.size(); }
  bool empty() const { return concepts_.empty(); }
  ClassKind kind() const { return kind_; }
  bool is_total() const { return kind_ == ClassKind::Total; }

  std::span<const Concept> concepts() const { return concepts_; }
  const Concept& operator[](std::size_t i) const { return concepts_[i]; }
  auto begin() const { return concepts_.begin(); }
  auto end() const { return concepts_.end(); }

  /// Sorted distinct Defined labels appearing anywhere in the class.
  std::vector<Label> labels_used() const;

  /// Indices where at least one concept is Defined.
  std::vector<std::size_t> support() const;

  /// Index of the concept equal to c, if present.
  std::optional<std::size_t> find(const Concept& c) const;

  /// Same class with concepts sorted lexicographically (Star last).
  ConceptClass canonical() const;

  bool operator==(const ConceptClass&) const = default;

 private:
  std::size_t domain_size_ = 0;
  std::vector<Concept> concepts_;
  ClassKind kind_ = ClassKind::Total;
};

struct Entry {
  std::size_t index = 0;
  Label label;

  auto operator<=>(const Entry&) const = default;
};

/// A labeled sequence of (domain index, Defined label) pairs.
///
/// Order is preserved; verification works on canonical() samples, which are
/// sorted multisets.
class Sample {
 public:
  Sample() = default;
  /// Throws std::invalid_argument if any label is Star.
  explicit Sample(std::vector<Entry> entries);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::span<const Entry> entries() const { return entries_; }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Sample canonical() const;
  bool is_canonical() const;

  /// Sorted distinct entries.
  std::vector<Entry> distinct() const;

  /// True if every element of `sub` also occurs in this sample (set semantics).
  bool contains_elements_of(const Sample& sub) const;

  auto operator<=>(const Sample&) const = default;
  bool operator==(const Sample&) const = default;

 private:
  std::vector<Entry> entries_;
};

/// The set of distinct patterns a class realizes on a sequence of indices.
class PatternSet {
 public:
  PatternSet(std::size_t width, std::vector<Pattern> patterns);

  std::size_t width() const { return width_; }
  std::size_t size() const { return patterns_.size(); }
  bool empty() const { return patterns_.empty(); }
  bool contains(const Pattern& p) const;
  std::span<const Pattern> patterns() const { return patterns_; }
  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }

  bool operator==(const PatternSet&) const = default;

 private:
  std::size_t width_;
  std::vector<Pattern> patterns_;  // sorted, unique
};

Pattern project(const Concept& c, std::span<const std::size_t> points);

/// Throws std::out_of_range on an invalid index. Duplicated indices duplicate
/// the column.
PatternSet restrict(const ConceptClass& cls, std::span<const std::size_t> points);

/// True iff c is Defined and equal to the sample label at every entry.
bool agrees(const Concept& c, const Sample& s);

/// Throws std::out_of_range when an entry index is outside the domain.
bool is_realizable(const ConceptClass& cls, const Sample& s);

/// Index of the first concept (stored order) agreeing with the sample.
std::optional<std::size_t> first_consistent(const ConceptClass& cls, const Sample& s);

/// Lazily yields every realizable sample of length m exactly once, as sorted
/// multisets in lexicographic order. Single consumer.
class RealizableSamples {
 public:
  RealizableSamples(const ConceptClass& cls, std::size_t m);

  std::optional<Sample> next();

 private:
  bool advance();

  const ConceptClass* cls_;
  std::size_t m_;
  std::vector<Entry> pairs_;  // distinct Defined (index, label) pairs, sorted
  std::vector<std::size_t> pos_;
  std::vector<std::vector<std::size_t>> alive_;  // alive_[d]: concepts consistent with pos_[0..d)
  bool started_ = false;
  bool done_ = false;
};

inline constexpr std::size_t kDefaultSampleBudget = 2'000'000;

/// Materializes RealizableSamples. Throws ResourceError past `budget` samples.
std::vector<Sample> realizable_samples(const ConceptClass& cls, std::size_t m,
                                       std::size_t budget = kDefaultSampleBudget);

/// Transpose; duplicate columns collapse. Throws std::invalid_argument on an
/// empty class.
ConceptClass dual(const ConceptClass& cls);

/// Concatenates domains; each concept is Star outside its own block.
ConceptClass union_disjoint(std::span<const ConceptClass> classes);

/// Index of the first concept of `total` that agrees with `partial_concept`
/// on its support.
std::optional<std::size_t> find_disambiguator(const ConceptClass& total,
                                              const Concept& partial_concept);

/// Exact disambiguation test: every realizable sample of `partial` is a
/// sub-multiset of some concept's support sample, so checking supports is
/// sufficient.
bool disambiguates(const ConceptClass& total, const ConceptClass& partial);

/// The full-support sample of a concept, in index order.
Sample support_sample(const Concept& c);

}  // namespace dsc
