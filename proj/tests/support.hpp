#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "dsc/concept_class.hpp"

namespace dsc::test {

inline constexpr int X = -1;  // Star in the literal helpers below

inline Label lab(int v) { return v < 0 ? Label::star() : Label(static_cast<std::uint32_t>(v)); }

inline Concept con(std::initializer_list<int> values) {
  Concept c;
  for (int v : values) c.push_back(lab(v));
  return c;
}

inline ConceptClass cls(std::size_t n, std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Concept> concepts;
  for (auto r : rows) concepts.push_back(con(r));
  return ConceptClass::infer(n, std::move(concepts));
}

inline Sample smp(std::initializer_list<std::pair<std::size_t, int>> entries) {
  std::vector<Entry> out;
  for (auto [i, y] : entries) out.push_back(Entry{i, lab(y)});
  return Sample(std::move(out));
}

/// Random class with distinct rows. With `partial`, the top label stands for Star.
inline ConceptClass random_class(std::mt19937_64& rng, std::size_t n, std::size_t rows, std::size_t labels,
                                 bool partial) {
  std::set<Concept> seen;
  for (std::size_t attempt = 0; attempt < 50 * rows && seen.size() < rows; ++attempt) {
    Concept c(n);
    for (auto& l : c) {
      auto v = static_cast<int>(rng() % labels);
      l = (partial && v + 1 == static_cast<int>(labels)) ? Label::star() : lab(v);
    }
    seen.insert(c);
  }
  return ConceptClass::infer(n, {seen.begin(), seen.end()});
}

/// Every multiset of m (index, label) pairs drawn from `pairs`, as sorted
/// entry vectors. Independent of the library's sample enumerator.
inline std::vector<std::vector<Entry>> all_multisets(const std::vector<Entry>& pairs, std::size_t m) {
  std::vector<std::vector<Entry>> out;
  std::vector<Entry> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == m) {
      out.push_back(cur);
      return;
    }
    for (std::size_t p = start; p < pairs.size(); ++p) {
      cur.push_back(pairs[p]);
      self(self, p);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Realizability by direct definition.
inline bool realizable_by_definition(const ConceptClass& c, const std::vector<Entry>& s) {
  for (const auto& h : c) {
    bool ok = true;
    for (const auto& e : s)
      if (h[e.index].is_star() || h[e.index] != e.label) ok = false;
    if (ok) return true;
  }
  return false;
}

/// All (index, label) pairs over the domain and the class's labels.
inline std::vector<Entry> grid(const ConceptClass& c) {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < c.domain_size(); ++i)
    for (auto l : c.labels_used()) out.push_back(Entry{i, l});
  return out;
}

inline std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace dsc::test
