#include "dsc/concept_class.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "dsc/errors.hpp"

namespace dsc {

std::vector<std::size_t> support(const Concept& c) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < c.size(); ++x)
    if (c[x].is_defined()) out.push_back(x);
  return out;
}

bool is_total(const Concept& c) {
  return std::all_of(c.begin(), c.end(), [](Label l) { return l.is_defined(); });
}

ConceptClass::ConceptClass(std::size_t domain_size, std::vector<Concept> concepts, ClassKind kind)
    : domain_size_(domain_size), concepts_(std::move(concepts)), kind_(kind) {
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    if (concepts_[i].size() != domain_size_)
      throw std::invalid_argument("concept " + std::to_string(i) + " has " +
                                  std::to_string(concepts_[i].size()) + " entries, expected " +
                                  std::to_string(domain_size_));
    if (kind_ == ClassKind::Total && !dsc::is_total(concepts_[i]))
      throw std::invalid_argument("concept " + std::to_string(i) + " contains * in a total class");
  }
  std::vector<const Concept*> sorted;
  sorted.reserve(concepts_.size());
  for (const auto& c : concepts_) sorted.push_back(&c);
  std::sort(sorted.begin(), sorted.end(), [](auto a, auto b) { return *a < *b; });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (*sorted[i - 1] == *sorted[i]) throw std::invalid_argument("duplicate concept in class");
}

ConceptClass ConceptClass::infer(std::size_t domain_size, std::vector<Concept> concepts) {
  bool total = std::all_of(concepts.begin(), concepts.end(),
                           [](const Concept& c) { return dsc::is_total(c); });
  return ConceptClass(domain_size, std::move(concepts), total ? ClassKind::Total : ClassKind::Partial);
}

std::vector<Label> ConceptClass::labels_used() const {
  std::set<Label> seen;
  for (const auto& c : concepts_)
    for (Label l : c)
      if (l.is_defined()) seen.insert(l);
  return {seen.begin(), seen.end()};
}

std::vector<std::size_t> ConceptClass::support() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < domain_size_; ++x)
    if (std::any_of(concepts_.begin(), concepts_.end(),
                    [x](const Concept& c) { return c[x].is_defined(); }))
      out.push_back(x);
  return out;
}

std::optional<std::size_t> ConceptClass::find(const Concept& c) const {
  auto it = std::find(concepts_.begin(), concepts_.end(), c);
  if (it == concepts_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - concepts_.begin());
}

ConceptClass ConceptClass::canonical() const {
  auto sorted = concepts_;
  std::sort(sorted.begin(), sorted.end());
  return ConceptClass(domain_size_, std::move(sorted), kind_);
}

Sample::Sample(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_)
    if (e.label.is_star()) throw std::invalid_argument("sample entries cannot carry *");
}

Sample Sample::canonical() const {
  Sample out = *this;
  std::sort(out.entries_.begin(), out.entries_.end());
  return out;
}

bool Sample::is_canonical() const { return std::is_sorted(entries_.begin(), entries_.end()); }

std::vector<Entry> Sample::distinct() const {
  std::vector<Entry> out = entries_;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Sample::contains_elements_of(const Sample& sub) const {
  auto mine = distinct();
  return std::all_of(sub.begin(), sub.end(), [&](const Entry& e) {
    return std::binary_search(mine.begin(), mine.end(), e);
  });
}

PatternSet::PatternSet(std::size_t width, std::vector<Pattern> patterns)
    : width_(width), patterns_(std::move(patterns)) {
  for (const auto& p : patterns_)
    if (p.size() != width_) throw std::invalid_argument("pattern width mismatch");
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

bool PatternSet::contains(const Pattern& p) const {
  return std::binary_search(patterns_.begin(), patterns_.end(), p);
}

Pattern project(const Concept& c, std::span<const std::size_t> points) {
  Pattern p;
  p.reserve(points.size());
  for (auto x : points) p.push_back(c[x]);
  return p;
}

PatternSet restrict(const ConceptClass& cls, std::span<const std::size_t> points) {
  for (auto x : points)
    if (x >= cls.domain_size())
      throw std::out_of_range("index " + std::to_string(x) + " outside domain of size " +
                              std::to_string(cls.domain_size()));
  std::vector<Pattern> patterns;
  patterns.reserve(cls.size());
  for (const auto& c : cls) patterns.push_back(project(c, points));
  return PatternSet(points.size(), std::move(patterns));
}

bool agrees(const Concept& c, const Sample& s) {
  return std::all_of(s.begin(), s.end(), [&](const Entry& e) { return c[e.index] == e.label; });
}

namespace {

void check_indices(const ConceptClass& cls, const Sample& s) {
  for (const auto& e : s)
    if (e.index >= cls.domain_size())
      throw std::out_of_range("sample index " + std::to_string(e.index) +
                              " outside domain of size " + std::to_string(cls.domain_size()));
}

}  // namespace

bool is_realizable(const ConceptClass& cls, const Sample& s) {
  return first_consistent(cls, s).has_value();
}

std::optional<std::size_t> first_consistent(const ConceptClass& cls, const Sample& s) {
  check_indices(cls, s);
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (agrees(cls[i], s)) return i;
  return std::nullopt;
}

RealizableSamples::RealizableSamples(const ConceptClass& cls, std::size_t m)
    : cls_(&cls), m_(m), pos_(m), alive_(m + 1) {
  if (m == 0) throw std::invalid_argument("sample length must be at least 1");
  std::set<Entry> pairs;
  for (const auto& c : cls)
    for (std::size_t x = 0; x < c.size(); ++x)
      if (c[x].is_defined()) pairs.insert(Entry{x, c[x]});
  pairs_.assign(pairs.begin(), pairs.end());
  alive_[0].resize(cls.size());
  for (std::size_t i = 0; i < cls.size(); ++i) alive_[0][i] = i;
}

bool RealizableSamples::advance() {
  std::size_t depth = 0;
  std::size_t candidate = 0;
  if (started_) {
    depth = m_ - 1;
    candidate = pos_[depth] + 1;
  }
  started_ = true;
  for (;;) {
    bool placed = false;
    for (std::size_t p = candidate; p < pairs_.size(); ++p) {
      const Entry& e = pairs_[p];
      auto& next = alive_[depth + 1];
      next.clear();
      for (auto i : alive_[depth])
        if ((*cls_)[i][e.index] == e.label) next.push_back(i);
      if (!next.empty()) {
        pos_[depth] = p;
        placed = true;
        break;
      }
    }
    if (placed) {
      if (depth + 1 == m_) return true;
      ++depth;
      candidate = pos_[depth - 1];
    } else {
      if (depth == 0) return false;
      --depth;
      candidate = pos_[depth] + 1;
    }
  }
}

std::optional<Sample> RealizableSamples::next() {
  if (done_) return std::nullopt;
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  std::vector<Entry> entries;
  entries.reserve(m_);
  for (auto p : pos_) entries.push_back(pairs_[p]);
  return Sample(std::move(entries));
}

std::vector<Sample> realizable_samples(const ConceptClass& cls, std::size_t m, std::size_t budget) {
  std::vector<Sample> out;
  RealizableSamples stream(cls, m);
  while (auto s = stream.next()) {
    if (out.size() == budget)
      throw ResourceError("more than " + std::to_string(budget) + " realizable samples of length " +
                          std::to_string(m));
    out.push_back(std::move(*s));
  }
  return out;
}

ConceptClass dual(const ConceptClass& cls) {
  if (cls.empty()) throw std::invalid_argument("dual of an empty class");
  std::vector<Concept> columns;
  std::set<Concept> seen;
  for (std::size_t x = 0; x < cls.domain_size(); ++x) {
    Concept col;
    col.reserve(cls.size());
    for (const auto& c : cls) col.push_back(c[x]);
    if (seen.insert(col).second) columns.push_back(std::move(col));
  }
  return ConceptClass(cls.size(), std::move(columns), cls.kind());
}

ConceptClass union_disjoint(std::span<const ConceptClass> classes) {
  std::size_t total_domain = 0;
  for (const auto& c : classes) {
    if (c.empty()) throw std::invalid_argument("union_disjoint: empty input class");
    total_domain += c.domain_size();
  }
  std::vector<Concept> out;
  std::set<Concept> seen;
  std::size_t offset = 0;
  for (const auto& cls : classes) {
    for (const auto& c : cls) {
      Concept ext(total_domain, Label::star());
      std::copy(c.begin(), c.end(), ext.begin() + static_cast<std::ptrdiff_t>(offset));
      // All-Star concepts from different blocks coincide after extension.
      if (seen.insert(ext).second) out.push_back(std::move(ext));
    }
    offset += cls.domain_size();
  }
  return ConceptClass(total_domain, std::move(out), ClassKind::Partial);
}

std::optional<std::size_t> find_disambiguator(const ConceptClass& total,
                                              const Concept& partial_concept) {
  if (partial_concept.size() != total.domain_size())
    throw std::invalid_argument("find_disambiguator: domain size mismatch");
  return first_consistent(total, support_sample(partial_concept));
}

bool disambiguates(const ConceptClass& total, const ConceptClass& partial) {
  if (total.domain_size() != partial.domain_size()) return false;
  return std::all_of(partial.begin(), partial.end(), [&](const Concept& h) {
    return find_disambiguator(total, h).has_value();
  });
}

Sample support_sample(const Concept& c) {
  std::vector<Entry> entries;
  for (std::size_t x = 0; x < c.size(); ++x)
    if (c[x].is_defined()) entries.push_back(Entry{x, c[x]});
  return Sample(std::move(entries));
}

}  // namespace dsc
