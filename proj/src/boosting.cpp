#include "dsc/boosting.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include "dsc/errors.hpp"

namespace dsc {

BitString encode_boost_header(std::size_t subsample_size, std::size_t rounds) {
  if (subsample_size > 0xFF || rounds > 0xFFFF) throw std::invalid_argument("boost header field overflow");
  BitString bits;
  bits.reserve(kBoostHeaderBits);
  for (int i = 7; i >= 0; --i) bits.push_back((subsample_size >> i) & 1u);
  for (int i = 15; i >= 0; --i) bits.push_back((rounds >> i) & 1u);
  return bits;
}

std::pair<std::size_t, std::size_t> decode_boost_header(const BitString& bits) {
  if (bits.size() != kBoostHeaderBits) throw std::invalid_argument("boost header must be 24 bits");
  std::size_t s = 0, t = 0;
  for (std::size_t i = 0; i < 8; ++i) s = (s << 1) | bits[i];
  for (std::size_t i = 8; i < kBoostHeaderBits; ++i) t = (t << 1) | bits[i];
  return {s, t};
}

std::optional<std::size_t> erm(const ConceptClass& cls, std::span<const Entry> entries) {
  for (std::size_t i = 0; i < cls.size(); ++i) {
    bool ok = true;
    for (const auto& e : entries)
      if (cls[i][e.index] != e.label) {
        ok = false;
        break;
      }
    if (ok) return i;
  }
  return std::nullopt;
}

Concept plurality_vote(const ConceptClass& cls, std::span<const std::size_t> voters) {
  Concept out(cls.domain_size());
  for (std::size_t x = 0; x < cls.domain_size(); ++x) {
    std::map<Label, std::size_t> tally;
    for (auto v : voters) ++tally[cls[v][x]];
    Label best;
    std::size_t best_count = 0;
    for (const auto& [label, count] : tally)  // ascending labels, so ties keep the smallest
      if (count > best_count) {
        best = label;
        best_count = count;
      }
    out[x] = best;
  }
  return out;
}

namespace {

struct Candidate {
  std::vector<Entry> entries;
  std::size_t hypothesis;
  std::vector<char> mistakes;  // per entry of the sample being compressed
};

std::size_t round_cap(std::size_t m, std::size_t factor) {
  return factor * static_cast<std::size_t>(std::bit_width(m));  // bit_width(m) == ceil(log2(m + 1))
}

CompressionKey boost(const ConceptClass& cls, std::size_t s, const BoostingParams& params,
                     const Sample& input) {
  const Sample sample = input.canonical();
  const std::size_t m = sample.size();
  if (m == 0) return CompressionKey{Sample{}, encode_boost_header(s, 0)};

  // Weak-learner pool: distinct-entry subsets of size 1..s in lexicographic order.
  const auto distinct = sample.distinct();
  std::vector<Candidate> pool;
  std::vector<Entry> chosen;
  for (std::size_t size = 1; size <= std::min(s, distinct.size()); ++size) {
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (chosen.size() == size) {
        auto h = erm(cls, chosen);
        if (!h) return;
        Candidate c{chosen, *h, std::vector<char>(m)};
        for (std::size_t i = 0; i < m; ++i) c.mistakes[i] = cls[*h][sample[i].index] != sample[i].label;
        pool.push_back(std::move(c));
        return;
      }
      for (std::size_t p = start; p < distinct.size(); ++p) {
        chosen.push_back(distinct[p]);
        self(self, p + 1);
        chosen.pop_back();
      }
    };
    rec(rec, 0);
  }

  const double threshold = 0.5 - params.edge;
  const double mistake_factor = (0.5 + params.edge) / (0.5 - params.edge);
  std::vector<double> weights(m, 1.0 / static_cast<double>(m));
  std::vector<std::size_t> voters;
  std::vector<Entry> key_entries;
  const std::size_t cap = std::min<std::size_t>(round_cap(m, params.round_factor), 0xFFFF);

  for (std::size_t round = 0; round < cap; ++round) {
    const Candidate* pick = nullptr;
    for (const auto& c : pool) {
      double error = 0.0;
      for (std::size_t i = 0; i < m; ++i)
        if (c.mistakes[i]) error += weights[i];
      if (error <= threshold) {
        pick = &c;
        break;
      }
    }
    if (!pick) throw RealizabilityError("no weak hypothesis reaches the required edge");
    voters.push_back(pick->hypothesis);
    key_entries.insert(key_entries.end(), pick->entries.begin(), pick->entries.end());
    key_entries.insert(key_entries.end(), s - pick->entries.size(), pick->entries.front());

    const auto vote = plurality_vote(cls, voters);
    if (agrees(vote, sample))
      return CompressionKey{Sample(std::move(key_entries)), encode_boost_header(s, voters.size())};

    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (pick->mistakes[i]) weights[i] *= mistake_factor;
      total += weights[i];
    }
    for (auto& w : weights) w /= total;
  }
  throw ConvergenceError("boosting did not converge within " + std::to_string(cap) + " rounds");
}

Concept unboost(const ConceptClass& cls, const CompressionKey& key) {
  auto [s, t] = decode_boost_header(key.bits);
  if (t == 0) return cls[0];
  if (s == 0 || key.subsample.size() != s * t)
    throw std::invalid_argument("boosted key length does not match its header");
  std::vector<std::size_t> voters;
  for (std::size_t b = 0; b < t; ++b) {
    auto block = key.subsample.entries().subspan(b * s, s);
    for (const auto& e : block)
      if (e.index >= cls.domain_size()) throw std::out_of_range("boosted key index outside domain");
    auto h = erm(cls, block);
    if (!h) throw RealizabilityError("boosted key block is not realizable");
    voters.push_back(*h);
  }
  return plurality_vote(cls, voters);
}

}  // namespace

CompressionScheme boosted_scheme(const ConceptClass& cls, std::size_t subsample_size, BoostingParams params) {
  if (!cls.is_total()) throw std::invalid_argument("boosted_scheme needs a total class");
  if (cls.empty()) throw std::invalid_argument("boosted_scheme needs a nonempty class");
  if (subsample_size < 1 || subsample_size > 0xFF)
    throw std::invalid_argument("subsample size must be in [1, 255]");
  if (!(params.edge > 0.0 && params.edge < 0.5)) throw std::invalid_argument("edge must be in (0, 1/2)");
  auto shared = std::make_shared<const ConceptClass>(cls);
  CompressionScheme out;
  out.name = "boosted(s=" + std::to_string(subsample_size) + ")";
  out.compress = [shared, subsample_size, params](const Sample& s) {
    return boost(*shared, subsample_size, params, s);
  };
  out.reconstruct = [shared](const CompressionKey& key) { return unboost(*shared, key); };
  return out;
}

}  // namespace dsc
