#include "dsc/compression.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include <omp.h>

#include "dsc/errors.hpp"
#include "dsc/io.hpp"

namespace dsc {

std::string to_string(const BitString& bits) {
  std::string out;
  out.reserve(bits.size());
  for (bool b : bits) out.push_back(b ? '1' : '0');
  return out;
}

BitString parse_bits(std::string_view text) {
  BitString out;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("bit strings contain only 0 and 1");
    out.push_back(ch == '1');
  }
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Valid: return "valid";
    case Verdict::Invalid: return "invalid";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

namespace {

struct Outcome {
  std::optional<CompressionKey> key;
  std::optional<SchemeFailure> failure;
};

Outcome check_sample(const ConceptClass& cls, const CompressionScheme& scheme, const Sample& sample) {
  Outcome out;
  auto fail = [&](std::size_t index, std::string reason) {
    out.failure = SchemeFailure{sample, index, std::move(reason)};
    return out;
  };
  try {
    out.key = scheme.compress(sample);
  } catch (const std::exception& e) {
    return fail(sample.size(), std::string("compress failed: ") + e.what());
  }
  if (!sample.contains_elements_of(out.key->subsample))
    return fail(sample.size(), "compressed subsample has an entry absent from the sample");
  Concept h;
  try {
    h = scheme.reconstruct(*out.key);
  } catch (const std::exception& e) {
    return fail(sample.size(), std::string("reconstruct failed: ") + e.what());
  }
  if (h.size() != cls.domain_size() || !is_total(h))
    return fail(sample.size(), "reconstruction is not a total concept over the domain");
  for (std::size_t i = 0; i < sample.size(); ++i)
    if (h[sample[i].index] != sample[i].label) return fail(i, "reconstruction mislabels entry");
  return out;
}

// Collects at most `budget` samples; `truncated` reports whether more exist.
std::vector<Sample> collect_samples(const ConceptClass& cls, std::size_t m, std::size_t budget,
                                    bool& truncated) {
  std::vector<Sample> samples;
  RealizableSamples stream(cls, m);
  truncated = false;
  while (auto s = stream.next()) {
    if (samples.size() == budget) {
      truncated = true;
      break;
    }
    samples.push_back(std::move(*s));
  }
  return samples;
}

SchemeReport merge(std::size_t m, const std::vector<Outcome>& outcomes, bool truncated,
                   const VerifyOptions& opts) {
  SchemeReport report;
  report.m = m;
  std::set<CompressionKey> keys;
  for (const auto& o : outcomes) {
    ++report.samples_checked;
    if (o.key) {
      report.max_subsample = std::max(report.max_subsample, o.key->subsample.size());
      report.max_bits = std::max(report.max_bits, o.key->bits.size());
      report.k_of_m = std::max(report.k_of_m, o.key->size());
      keys.insert(*o.key);
    }
    if (o.failure) {
      ++report.failure_count;
      if (report.failures.size() < opts.max_recorded_failures) report.failures.push_back(*o.failure);
    }
  }
  report.distinct_keys = keys.size();
  if (report.failure_count > 0)
    report.verdict = Verdict::Invalid;
  else
    report.verdict = truncated ? Verdict::Unknown : Verdict::Valid;
  return report;
}

}  // namespace

SchemeReport verify_scheme(const ConceptClass& cls, const CompressionScheme& scheme, std::size_t m,
                           VerifyOptions opts) {
  bool truncated = false;
  auto samples = collect_samples(cls, m, opts.sample_budget, truncated);
  std::vector<Outcome> outcomes(samples.size());
  const auto n = static_cast<std::int64_t>(samples.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i) outcomes[i] = check_sample(cls, scheme, samples[i]);
  return merge(m, outcomes, truncated, opts);
}

namespace serial {

SchemeReport verify_scheme(const ConceptClass& cls, const CompressionScheme& scheme, std::size_t m,
                           VerifyOptions opts) {
  bool truncated = false;
  auto samples = collect_samples(cls, m, opts.sample_budget, truncated);
  std::vector<Outcome> outcomes;
  outcomes.reserve(samples.size());
  for (const auto& s : samples) outcomes.push_back(check_sample(cls, scheme, s));
  return merge(m, outcomes, truncated, opts);
}

}  // namespace serial

std::uint64_t counting_bound(std::uint64_t m, std::uint64_t c, std::uint64_t k, std::uint64_t bit_budget) {
  __extension__ using u128 = unsigned __int128;
  constexpr u128 kCap = std::numeric_limits<std::uint64_t>::max();
  auto sat_mul = [&](u128 a, u128 b) -> u128 {
    if (a == 0 || b == 0) return 0;
    if (a > kCap / b) return kCap;
    return std::min(a * b, kCap);
  };
  u128 bit_strings = bit_budget >= 63 ? kCap : (u128{1} << (bit_budget + 1)) - 1;
  u128 sum = 0;
  u128 choose = 1;     // C(m, i)
  u128 labelings = 1;  // c^i
  for (std::uint64_t i = 0; i <= std::min(k, m); ++i) {
    if (i > 0) {
      choose = std::min<u128>(choose * (m - i + 1) / i, kCap);
      labelings = sat_mul(labelings, c);
    }
    sum = std::min(sum + sat_mul(sat_mul(choose, labelings), bit_strings), kCap);
  }
  return static_cast<std::uint64_t>(sum);
}

std::vector<BitString> all_bit_strings(std::size_t bit_budget) {
  if (bit_budget > 20) throw ResourceError("bit budget above 20 is not enumerable");
  std::vector<BitString> out;
  for (std::size_t len = 0; len <= bit_budget; ++len)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      BitString b(len);
      for (std::size_t i = 0; i < len; ++i) b[i] = (v >> (len - 1 - i)) & 1u;
      out.push_back(std::move(b));
    }
  return out;
}

CompressionScheme elongating(CompressionScheme inner, std::size_t m) {
  CompressionScheme out;
  out.name = inner.name + "+elongate(" + std::to_string(m) + ")";
  out.reconstruct = inner.reconstruct;
  out.compress = [compress = std::move(inner.compress), m](const Sample& s) {
    if (s.empty() || s.size() >= m) return compress(s.canonical());
    auto canon = s.canonical();
    std::vector<Entry> entries(canon.begin(), canon.end());
    entries.insert(entries.begin(), m - canon.size(), canon[0]);
    return compress(Sample(std::move(entries)));
  };
  return out;
}

namespace {

// Realizable sets of at most k entries with distinct points, in lexicographic order.
void for_each_realizable_set(const ConceptClass& cls, std::size_t k,
                             const std::function<void(const Sample&)>& visit) {
  std::set<Entry> pair_set;
  for (const auto& c : cls)
    for (std::size_t x = 0; x < c.size(); ++x)
      if (c[x].is_defined()) pair_set.insert(Entry{x, c[x]});
  const std::vector<Entry> pairs(pair_set.begin(), pair_set.end());
  std::vector<Entry> chosen;
  std::vector<std::size_t> all(cls.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  auto rec = [&](auto&& self, std::size_t start, const std::vector<std::size_t>& alive) -> void {
    visit(Sample(chosen));
    if (chosen.size() == k) return;
    for (std::size_t p = start; p < pairs.size(); ++p) {
      if (!chosen.empty() && pairs[p].index == chosen.back().index) continue;
      std::vector<std::size_t> next;
      for (auto i : alive)
        if (cls[i][pairs[p].index] == pairs[p].label) next.push_back(i);
      if (next.empty()) continue;
      chosen.push_back(pairs[p]);
      self(self, p + 1, next);
      chosen.pop_back();
    }
  };
  if (!cls.empty()) rec(rec, 0, all);
}

}  // namespace

ConceptClass extract_disambiguation(const ConceptClass& cls, const CompressionScheme& scheme, std::size_t k,
                                    std::size_t bit_budget) {
  const auto ceiling =
      counting_bound(cls.support().size(), cls.labels_used().size(), k, bit_budget);
  if (ceiling > 20'000'000) throw ResourceError("too many compression keys to enumerate");
  const auto bit_strings = all_bit_strings(bit_budget);
  std::vector<Concept> found;
  std::set<Concept> seen;
  for_each_realizable_set(cls, k, [&](const Sample& subsample) {
    for (const auto& bits : bit_strings) {
      Concept h;
      try {
        h = scheme.reconstruct(CompressionKey{subsample, bits});
      } catch (const std::exception&) {
        // Keys the reconstructor rejects contribute nothing; coverage is checked below.
        continue;
      }
      if (h.size() != cls.domain_size() || !is_total(h))
        throw ContractViolation("reconstruction of key (" + serialize_sample(subsample) + ", " +
                                to_string(bits) + ") is not a total concept");
      if (seen.insert(h).second) found.push_back(std::move(h));
    }
  });
  ConceptClass out(cls.domain_size(), std::move(found), ClassKind::Total);
  for (const auto& h : cls)
    if (!find_disambiguator(out, h))
      throw ContractViolation("extracted class misses realizable sample " +
                              serialize_sample(support_sample(h)));
  if (out.size() > ceiling)
    throw ContractViolation("extracted class has " + std::to_string(out.size()) +
                            " concepts, above the key count " + std::to_string(ceiling));
  return out;
}

std::vector<Entry> binary_domain(const ConceptClass& cls) {
  std::vector<Entry> out;
  const auto labels = cls.labels_used();
  for (std::size_t x = 0; x < cls.domain_size(); ++x)
    for (Label y : labels) out.push_back(Entry{x, y});
  return out;
}

ConceptClass to_binary_class(const ConceptClass& cls) {
  if (!cls.is_total()) throw std::invalid_argument("to_binary_class needs a total class");
  const auto domain = binary_domain(cls);
  std::vector<Concept> out;
  out.reserve(cls.size());
  for (const auto& h : cls) {
    Concept b(domain.size());
    for (std::size_t j = 0; j < domain.size(); ++j) b[j] = Label(h[domain[j].index] == domain[j].label ? 1 : 0);
    out.push_back(std::move(b));
  }
  return ConceptClass(domain.size(), std::move(out), ClassKind::Total);
}

}  // namespace dsc
