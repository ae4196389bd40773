#include "dsc/dimensions.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "dsc/errors.hpp"

namespace dsc {

__extension__ using u128 = unsigned __int128;

std::string_view to_string(ShatterKind kind) {
  switch (kind) {
    case ShatterKind::VC: return "vc";
    case ShatterKind::DS: return "ds";
    case ShatterKind::Natarajan: return "natarajan";
    case ShatterKind::Graph: return "graph";
  }
  return "?";
}

std::optional<ShatterKind> parse_shatter_kind(std::string_view text) {
  if (text == "vc") return ShatterKind::VC;
  if (text == "ds") return ShatterKind::DS;
  if (text == "natarajan" || text == "n") return ShatterKind::Natarajan;
  if (text == "graph" || text == "g") return ShatterKind::Graph;
  return std::nullopt;
}

namespace {

// Masks over coordinates are 64-bit, and cube-style witnesses store 2^d entries.
constexpr std::size_t kMaxCubeWidth = 24;
constexpr std::size_t kMaxBruteForcePatterns = 20;

void check_points(const ConceptClass& cls, std::span<const std::size_t> points) {
  if (points.empty()) throw std::invalid_argument("shattering needs a nonempty index sequence");
  for (auto x : points)
    if (x >= cls.domain_size())
      throw std::out_of_range("index " + std::to_string(x) + " outside domain of size " +
                              std::to_string(cls.domain_size()));
  std::vector<std::size_t> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("shattering needs distinct indices");
}

void check_cube_width(std::size_t d) {
  if (d > kMaxCubeWidth)
    throw ResourceError("cannot enumerate 2^" + std::to_string(d) + " sub-patterns");
}

// Distinct patterns on `points`, each with the first concept realizing it.
std::map<Pattern, std::size_t> patterns_with_realizers(const ConceptClass& cls,
                                                       std::span<const std::size_t> points,
                                                       bool full_support_only) {
  std::map<Pattern, std::size_t> out;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    Pattern p = project(cls[i], points);
    if (full_support_only && !is_total(p)) continue;
    out.emplace(std::move(p), i);
  }
  return out;
}

bool is_i_neighbor(const Pattern& a, const Pattern& b, std::size_t i) {
  if (a[i] == b[i]) return false;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (j != i && a[j] != b[j]) return false;
  return true;
}

Pattern masked(const Pattern& p, std::size_t i) {
  Pattern key = p;
  key[i] = Label::star();
  return key;
}

ShatterWitness make_ds_witness(std::span<const std::size_t> points, std::vector<Pattern> patterns,
                               std::vector<std::size_t> realizers) {
  const std::size_t d = points.size();
  DsWitness w;
  w.neighbor.assign(patterns.size(), std::vector<std::size_t>(d));
  for (std::size_t i = 0; i < d; ++i) {
    std::map<Pattern, std::vector<std::size_t>> groups;
    for (std::size_t p = 0; p < patterns.size(); ++p) groups[masked(patterns[p], i)].push_back(p);
    for (const auto& [key, members] : groups)
      for (auto p : members) w.neighbor[p][i] = members[0] == p ? members[1] : members[0];
  }
  w.patterns = std::move(patterns);
  w.realizers = std::move(realizers);
  return ShatterWitness{{points.begin(), points.end()}, ShatterKind::DS, std::move(w)};
}

}  // namespace

bool is_binary(const ConceptClass& cls) {
  for (Label l : cls.labels_used())
    if (l.value() > 1) return false;
  return true;
}

void check_kind_applicable(const ConceptClass& cls, ShatterKind kind) {
  switch (kind) {
    case ShatterKind::VC:
      if (!is_binary(cls)) throw std::invalid_argument("VC shattering needs labels in {0, 1, *}");
      break;
    case ShatterKind::Natarajan:
    case ShatterKind::Graph:
      if (!cls.is_total())
        throw std::invalid_argument(std::string(to_string(kind)) + " shattering needs a total class");
      break;
    case ShatterKind::DS:
      break;
  }
}

std::optional<ShatterWitness> ds_shatters(const ConceptClass& cls, std::span<const std::size_t> points) {
  check_points(cls, points);
  const std::size_t d = points.size();
  auto table = patterns_with_realizers(cls, points, true);
  std::vector<Pattern> patterns;
  std::vector<std::size_t> realizers;
  for (auto& [p, r] : table) {
    patterns.push_back(p);
    realizers.push_back(r);
  }
  std::vector<char> alive(patterns.size(), 1);
  std::size_t alive_count = patterns.size();
  for (bool changed = true; changed && alive_count > 0;) {
    changed = false;
    for (std::size_t i = 0; i < d; ++i) {
      std::map<Pattern, std::size_t> group_size;
      for (std::size_t p = 0; p < patterns.size(); ++p)
        if (alive[p]) ++group_size[masked(patterns[p], i)];
      for (std::size_t p = 0; p < patterns.size(); ++p) {
        if (alive[p] && group_size[masked(patterns[p], i)] < 2) {
          alive[p] = 0;
          --alive_count;
          changed = true;
        }
      }
    }
  }
  if (alive_count == 0) return std::nullopt;
  std::vector<Pattern> kept;
  std::vector<std::size_t> kept_realizers;
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    if (!alive[p]) continue;
    kept.push_back(std::move(patterns[p]));
    kept_realizers.push_back(realizers[p]);
  }
  return make_ds_witness(points, std::move(kept), std::move(kept_realizers));
}

std::optional<ShatterWitness> ds_shatters_bruteforce(const ConceptClass& cls,
                                                     std::span<const std::size_t> points) {
  check_points(cls, points);
  const std::size_t d = points.size();
  auto table = patterns_with_realizers(cls, points, true);
  if (table.size() > kMaxBruteForcePatterns)
    throw ResourceError("brute-force DS check limited to " + std::to_string(kMaxBruteForcePatterns) +
                        " patterns, got " + std::to_string(table.size()));
  std::vector<Pattern> patterns;
  std::vector<std::size_t> realizers;
  for (auto& [p, r] : table) {
    patterns.push_back(p);
    realizers.push_back(r);
  }
  const std::size_t n = patterns.size();
  // neighbors[p * d + i]: bitmask of the i-neighbors of p.
  std::vector<std::uint32_t> neighbors(n * d, 0);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t i = 0; i < d; ++i)
        if (is_i_neighbor(patterns[p], patterns[q], i)) neighbors[p * d + i] |= 1u << q;

  std::uint32_t all_valid = 0;
  for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
    bool valid = true;
    for (std::size_t p = 0; p < n && valid; ++p) {
      if (!(subset >> p & 1u)) continue;
      for (std::size_t i = 0; i < d && valid; ++i) valid = (neighbors[p * d + i] & subset) != 0;
    }
    if (valid) all_valid |= subset;
  }
  if (all_valid == 0) return std::nullopt;
  std::vector<Pattern> kept;
  std::vector<std::size_t> kept_realizers;
  for (std::size_t p = 0; p < n; ++p) {
    if (!(all_valid >> p & 1u)) continue;
    kept.push_back(patterns[p]);
    kept_realizers.push_back(realizers[p]);
  }
  return make_ds_witness(points, std::move(kept), std::move(kept_realizers));
}

std::optional<ShatterWitness> vc_shatters(const ConceptClass& cls, std::span<const std::size_t> points) {
  check_points(cls, points);
  check_kind_applicable(cls, ShatterKind::VC);
  const std::size_t d = points.size();
  check_cube_width(d);
  auto table = patterns_with_realizers(cls, points, true);
  CubeWitness w;
  w.realizers.resize(std::size_t{1} << d);
  Pattern target(d);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    for (std::size_t i = 0; i < d; ++i) target[i] = Label((mask >> i) & 1u);
    auto it = table.find(target);
    if (it == table.end()) return std::nullopt;
    w.realizers[mask] = it->second;
  }
  return ShatterWitness{{points.begin(), points.end()}, ShatterKind::VC, std::move(w)};
}

std::optional<ShatterWitness> n_shatters(const ConceptClass& cls, std::span<const std::size_t> points) {
  check_points(cls, points);
  check_kind_applicable(cls, ShatterKind::Natarajan);
  const std::size_t d = points.size();
  check_cube_width(d);
  auto table = patterns_with_realizers(cls, points, false);
  std::vector<const Pattern*> patterns;
  for (const auto& [p, r] : table) patterns.push_back(&p);

  Pattern mixture(d);
  std::vector<std::size_t> realizers(std::size_t{1} << d);
  for (const Pattern* a : patterns) {
    for (const Pattern* b : patterns) {
      bool disagree_everywhere = true;
      for (std::size_t i = 0; i < d && disagree_everywhere; ++i) disagree_everywhere = (*a)[i] != (*b)[i];
      if (!disagree_everywhere) continue;
      bool all_present = true;
      for (std::uint64_t mask = 0; mask < realizers.size() && all_present; ++mask) {
        for (std::size_t i = 0; i < d; ++i) mixture[i] = (mask >> i & 1u) ? (*a)[i] : (*b)[i];
        auto it = table.find(mixture);
        all_present = it != table.end();
        if (all_present) realizers[mask] = it->second;
      }
      if (all_present)
        return ShatterWitness{{points.begin(), points.end()},
                              ShatterKind::Natarajan,
                              PairWitness{table.at(*a), table.at(*b), std::move(realizers)}};
    }
  }
  return std::nullopt;
}

std::optional<ShatterWitness> g_shatters(const ConceptClass& cls, std::span<const std::size_t> points) {
  check_points(cls, points);
  check_kind_applicable(cls, ShatterKind::Graph);
  const std::size_t d = points.size();
  check_cube_width(d);
  auto table = patterns_with_realizers(cls, points, false);
  const std::size_t cube = std::size_t{1} << d;
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  for (const auto& [center, center_realizer] : table) {
    std::vector<std::size_t> realizers(cube, kUnset);
    std::size_t covered = 0;
    for (const auto& [p, r] : table) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < d; ++i)
        if (p[i] == center[i]) mask |= std::uint64_t{1} << i;
      if (realizers[mask] == kUnset) {
        realizers[mask] = r;
        ++covered;
      }
    }
    if (covered == cube)
      return ShatterWitness{{points.begin(), points.end()},
                            ShatterKind::Graph,
                            CenterWitness{center_realizer, std::move(realizers)}};
  }
  return std::nullopt;
}

std::optional<ShatterWitness> shatters(const ConceptClass& cls, std::span<const std::size_t> points,
                                       ShatterKind kind) {
  switch (kind) {
    case ShatterKind::VC: return vc_shatters(cls, points);
    case ShatterKind::DS: return ds_shatters(cls, points);
    case ShatterKind::Natarajan: return n_shatters(cls, points);
    case ShatterKind::Graph: return g_shatters(cls, points);
  }
  return std::nullopt;
}

bool verify_witness(const ConceptClass& cls, const ShatterWitness& witness) {
  const auto& points = witness.points;
  try {
    check_points(cls, points);
  } catch (const std::exception&) {
    return false;
  }
  const std::size_t d = points.size();
  auto valid_index = [&](std::size_t i) { return i < cls.size(); };
  auto pattern_of = [&](std::size_t concept_index) { return project(cls[concept_index], points); };

  struct Visitor {
    const ConceptClass& cls;
    const std::vector<std::size_t>& points;
    std::size_t d;
    ShatterKind kind;
    decltype(valid_index)& valid;
    decltype(pattern_of)& pattern;

    bool cube_sized(const std::vector<std::size_t>& r) const {
      return d <= kMaxCubeWidth && r.size() == (std::size_t{1} << d) &&
             std::all_of(r.begin(), r.end(), valid);
    }

    bool operator()(const DsWitness& w) const {
      if (kind != ShatterKind::DS || w.patterns.empty()) return false;
      if (w.realizers.size() != w.patterns.size() || w.neighbor.size() != w.patterns.size()) return false;
      if (!std::is_sorted(w.patterns.begin(), w.patterns.end()) ||
          std::adjacent_find(w.patterns.begin(), w.patterns.end()) != w.patterns.end())
        return false;
      for (std::size_t p = 0; p < w.patterns.size(); ++p) {
        const auto& pat = w.patterns[p];
        if (pat.size() != d || !is_total(pat)) return false;
        if (!valid(w.realizers[p]) || pattern(w.realizers[p]) != pat) return false;
        if (w.neighbor[p].size() != d) return false;
        for (std::size_t i = 0; i < d; ++i) {
          auto q = w.neighbor[p][i];
          if (q >= w.patterns.size() || !is_i_neighbor(pat, w.patterns[q], i)) return false;
        }
      }
      return true;
    }

    bool operator()(const CubeWitness& w) const {
      if (kind != ShatterKind::VC || !cube_sized(w.realizers)) return false;
      for (std::size_t mask = 0; mask < w.realizers.size(); ++mask) {
        auto p = pattern(w.realizers[mask]);
        for (std::size_t i = 0; i < d; ++i)
          if (p[i] != Label((mask >> i) & 1u)) return false;
      }
      return true;
    }

    bool operator()(const PairWitness& w) const {
      if (kind != ShatterKind::Natarajan || !cls.is_total()) return false;
      if (!valid(w.first) || !valid(w.second) || !cube_sized(w.realizers)) return false;
      auto a = pattern(w.first), b = pattern(w.second);
      for (std::size_t i = 0; i < d; ++i)
        if (a[i] == b[i]) return false;
      for (std::size_t mask = 0; mask < w.realizers.size(); ++mask) {
        auto p = pattern(w.realizers[mask]);
        for (std::size_t i = 0; i < d; ++i)
          if (p[i] != ((mask >> i & 1u) ? a[i] : b[i])) return false;
      }
      return true;
    }

    bool operator()(const CenterWitness& w) const {
      if (kind != ShatterKind::Graph || !cls.is_total()) return false;
      if (!valid(w.center) || !cube_sized(w.realizers)) return false;
      auto f = pattern(w.center);
      for (std::size_t mask = 0; mask < w.realizers.size(); ++mask) {
        auto p = pattern(w.realizers[mask]);
        for (std::size_t i = 0; i < d; ++i)
          if ((p[i] == f[i]) != static_cast<bool>(mask >> i & 1u)) return false;
      }
      return true;
    }
  };
  return std::visit(Visitor{cls, points, d, witness.kind, valid_index, pattern_of}, witness.data);
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t d, std::uint64_t rank) {
  std::vector<std::size_t> out;
  out.reserve(d);
  std::size_t x = 0;
  for (std::size_t slot = 0; slot < d; ++slot) {
    for (;; ++x) {
      auto with_x = binomial(n - x - 1, d - slot - 1);
      if (rank < with_x) break;
      rank -= with_x;
    }
    out.push_back(x++);
  }
  return out;
}

namespace {

bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
  const std::size_t d = combo.size();
  for (std::size_t i = d; i-- > 0;) {
    if (combo[i] < n - d + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < d; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

constexpr std::uint64_t kMaxSubsetsPerSize = std::uint64_t{1} << 40;

void check_subset_count(std::uint64_t count) {
  if (count > kMaxSubsetsPerSize) throw ResourceError("too many index subsets to search");
}

// Each size-d search hands back the lexicographically first shattered subset.
template <typename FindFirst>
DimensionResult ascending_search(const ConceptClass& cls, ShatterKind kind, DimensionOptions opts,
                                 FindFirst find_first) {
  DimensionResult result;
  if (cls.empty()) return result;
  check_kind_applicable(cls, kind);
  result.dimension = 0;
  for (std::size_t d = 1; d <= cls.domain_size(); ++d) {
    if (kind != ShatterKind::DS && d > kMaxCubeWidth) break;
    auto witness = find_first(d);
    if (witness) {
      result.dimension = static_cast<int>(d);
      result.witness = std::move(witness);
    } else if (!opts.exhaustive) {
      break;
    }
  }
  return result;
}

}  // namespace

DimensionResult dimension(const ConceptClass& cls, ShatterKind kind, DimensionOptions opts) {
  const std::size_t n = cls.domain_size();
  return ascending_search(cls, kind, opts, [&](std::size_t d) -> std::optional<ShatterWitness> {
    const std::uint64_t total = binomial(n, d);
    check_subset_count(total);
    std::atomic<std::int64_t> best{static_cast<std::int64_t>(total)};
    std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(total); ++r) {
      if (r >= best.load(std::memory_order_relaxed) || failed.load(std::memory_order_relaxed)) continue;
      try {
        auto combo = unrank_combination(n, d, static_cast<std::uint64_t>(r));
        if (!shatters(cls, combo, kind)) continue;
      } catch (...) {
        failed = true;
        continue;
      }
      auto current = best.load();
      while (r < current && !best.compare_exchange_weak(current, r)) {
      }
    }
    if (failed) throw ResourceError("shattering check failed inside the parallel subset search");
    auto rank = best.load();
    if (rank == static_cast<std::int64_t>(total)) return std::nullopt;
    return shatters(cls, unrank_combination(n, d, static_cast<std::uint64_t>(rank)), kind);
  });
}

DimensionResult dual_dimension(const ConceptClass& cls, ShatterKind kind, DimensionOptions opts) {
  return dimension(dual(cls), kind, opts);
}

namespace serial {

DimensionResult dimension(const ConceptClass& cls, ShatterKind kind, DimensionOptions opts) {
  const std::size_t n = cls.domain_size();
  return ascending_search(cls, kind, opts, [&](std::size_t d) -> std::optional<ShatterWitness> {
    check_subset_count(binomial(n, d));
    std::vector<std::size_t> combo(d);
    for (std::size_t i = 0; i < d; ++i) combo[i] = i;
    do {
      if (auto w = shatters(cls, combo, kind)) return w;
    } while (next_combination(combo, n));
    return std::nullopt;
  });
}

}  // namespace serial

}  // namespace dsc
