#include "dsc/min_compression.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "dsc/compression.hpp"
#include "dsc/errors.hpp"

namespace dsc {

namespace {

struct Group {
  std::vector<Label> labels;  // Star where no member has fixed the point yet
  std::size_t members = 0;
};

struct Placement {
  std::size_t subset = 0;
  std::size_t group = 0;
};

// Assigns every sample a key (subset of its distinct entries, bit string)
// so that each key's samples agree wherever they overlap. Bit strings are
// interchangeable, so a sample may open at most one new group per subset.
class KeySearch {
 public:
  KeySearch(const ConceptClass& cls, std::vector<Sample> samples, std::size_t k, std::size_t bit_budget,
            std::uint64_t node_budget)
      : domain_size_(cls.domain_size()),
        samples_(std::move(samples)),
        bit_strings_(all_bit_strings(bit_budget)),
        node_budget_(node_budget) {
    std::map<std::vector<Entry>, std::size_t> subset_ids;
    for (const auto& s : samples_) {
      auto entries = s.distinct();
      std::vector<std::size_t> ids;
      std::vector<Entry> chosen;
      auto rec = [&](auto&& self, std::size_t start) -> void {
        auto [it, inserted] = subset_ids.emplace(chosen, subset_ids.size());
        if (inserted) subsets_.emplace_back(chosen);
        ids.push_back(it->second);
        if (chosen.size() == k) return;
        for (std::size_t p = start; p < entries.size(); ++p) {
          chosen.push_back(entries[p]);
          self(self, p + 1);
          chosen.pop_back();
        }
      };
      rec(rec, 0);
      distinct_.push_back(std::move(entries));
      options_.push_back(std::move(ids));
    }
    groups_.resize(subsets_.size());
    placement_.resize(samples_.size());
  }

  bool run() { return dfs(samples_.size()); }

  std::uint64_t nodes() const { return nodes_; }

  TableScheme certificate() const {
    TableScheme table(domain_size_, Concept(domain_size_, Label(0)));
    for (std::size_t s = 0; s < samples_.size(); ++s) {
      const auto& pl = *placement_[s];
      CompressionKey key{subsets_[pl.subset], bit_strings_[pl.group]};
      table.set_key(samples_[s], key);
      Concept h = groups_[pl.subset][pl.group].labels;
      for (auto& l : h)
        if (l.is_star()) l = Label(0);
      table.set_reconstruction(std::move(key), std::move(h));
    }
    return table;
  }

 private:
  bool compatible(std::size_t s, const Group& g) const {
    return std::all_of(distinct_[s].begin(), distinct_[s].end(), [&](const Entry& e) {
      Label current = g.labels[e.index];
      return current.is_star() || current == e.label;
    });
  }

  std::size_t option_count(std::size_t s, std::size_t stop_at) const {
    std::size_t count = 0;
    for (auto u : options_[s]) {
      for (const auto& g : groups_[u])
        if (compatible(s, g) && ++count >= stop_at) return count;
      if (groups_[u].size() < bit_strings_.size() && ++count >= stop_at) return count;
    }
    return count;
  }

  void place(std::size_t s, std::size_t u, std::size_t gi) {
    auto& list = groups_[u];
    if (gi == list.size()) list.push_back(Group{std::vector<Label>(domain_size_, Label::star()), 0});
    auto& g = list[gi];
    auto& changed = undo_.emplace_back();
    for (const auto& e : distinct_[s])
      if (g.labels[e.index].is_star()) {
        g.labels[e.index] = e.label;
        changed.push_back(e.index);
      }
    ++g.members;
    placement_[s] = Placement{u, gi};
  }

  void unplace(std::size_t s) {
    auto [u, gi] = *placement_[s];
    auto& list = groups_[u];
    auto& g = list[gi];
    for (auto x : undo_.back()) g.labels[x] = Label::star();
    undo_.pop_back();
    if (--g.members == 0) list.pop_back();  // only the newest group can empty out
    placement_[s].reset();
  }

  bool dfs(std::size_t remaining) {
    if (remaining == 0) return true;
    if (++nodes_ > node_budget_)
      throw ResourceError("key search exceeded " + std::to_string(node_budget_) + " nodes");
    // Most-constrained sample first; a sample with no option refutes this branch.
    std::size_t best = samples_.size();
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    for (std::size_t s = 0; s < samples_.size(); ++s) {
      if (placement_[s]) continue;
      auto count = option_count(s, best_count);
      if (count == 0) return false;
      if (count < best_count) {
        best = s;
        best_count = count;
      }
    }
    for (auto u : options_[best]) {
      const std::size_t existing = groups_[u].size();
      for (std::size_t gi = 0; gi <= existing && gi < bit_strings_.size(); ++gi) {
        if (gi < existing && !compatible(best, groups_[u][gi])) continue;
        place(best, u, gi);
        if (dfs(remaining - 1)) return true;
        unplace(best);
      }
    }
    return false;
  }

  std::size_t domain_size_;
  std::vector<Sample> samples_;
  std::vector<BitString> bit_strings_;
  std::uint64_t node_budget_;
  std::uint64_t nodes_ = 0;

  std::vector<Sample> subsets_;
  std::vector<std::vector<Entry>> distinct_;
  std::vector<std::vector<std::size_t>> options_;
  std::vector<std::vector<Group>> groups_;
  std::vector<std::optional<Placement>> placement_;
  std::vector<std::vector<std::size_t>> undo_;
};

}  // namespace

std::optional<TableScheme> find_scheme(const ConceptClass& cls, std::size_t m, std::size_t k,
                                       std::size_t bit_budget, const MinCompressionOptions& opts,
                                       std::uint64_t* nodes) {
  KeySearch search(cls, realizable_samples(cls, m, opts.sample_budget), k, bit_budget, opts.node_budget);
  bool found = search.run();
  if (nodes) *nodes = search.nodes();
  if (!found) return std::nullopt;
  return search.certificate();
}

MinCompressionResult min_compression_size(const ConceptClass& cls, std::size_t m, std::size_t bit_budget,
                                          const MinCompressionOptions& opts) {
  MinCompressionResult result;
  const auto samples = realizable_samples(cls, m, opts.sample_budget);
  std::size_t widest = 0;
  for (const auto& s : samples) widest = std::max(widest, s.distinct().size());
  const std::size_t top = std::min(opts.max_k, widest);
  for (std::size_t k = 0; k <= top; ++k) {
    std::uint64_t nodes = 0;
    auto table = find_scheme(cls, m, k, bit_budget, opts, &nodes);
    result.nodes_per_k.push_back(nodes);
    if (!table) continue;
    auto report = verify_scheme(cls, table->scheme(), m, VerifyOptions{opts.sample_budget, 4});
    if (!report.valid() || report.max_subsample > k || report.max_bits > bit_budget)
      throw ContractViolation("key search produced a scheme that fails replay at k=" + std::to_string(k));
    result.k = k;
    result.certificate = std::move(table);
    return result;
  }
  return result;
}

}  // namespace dsc
