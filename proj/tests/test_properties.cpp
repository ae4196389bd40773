#include <doctest.h>

#include <set>

#include "dsc/compression.hpp"
#include "dsc/dimensions.hpp"
#include "support.hpp"

using namespace dsc;
using namespace dsc::test;

namespace {

// Shattering straight from the definitions, sharing nothing with the library.
bool vc_by_definition(const ConceptClass& c, const std::vector<std::size_t>& s) {
  std::set<Pattern> seen;
  for (const auto& h : c) seen.insert(project(h, s));
  for (std::size_t mask = 0; mask < (std::size_t{1} << s.size()); ++mask) {
    Pattern p;
    for (std::size_t i = 0; i < s.size(); ++i) p.push_back(Label(mask >> i & 1));
    if (!seen.count(p)) return false;
  }
  return true;
}

bool n_by_definition(const ConceptClass& c, const std::vector<std::size_t>& s) {
  std::set<Pattern> seen;
  for (const auto& h : c) seen.insert(project(h, s));
  for (const auto& f1 : seen)
    for (const auto& f2 : seen) {
      bool apart = true;
      for (std::size_t i = 0; i < s.size(); ++i) apart = apart && f1[i] != f2[i];
      if (!apart) continue;
      bool all = true;
      for (std::size_t mask = 0; mask < (std::size_t{1} << s.size()) && all; ++mask) {
        Pattern p;
        for (std::size_t i = 0; i < s.size(); ++i) p.push_back(mask >> i & 1 ? f1[i] : f2[i]);
        all = seen.count(p) > 0;
      }
      if (all) return true;
    }
  return false;
}

bool g_by_definition(const ConceptClass& c, const std::vector<std::size_t>& s) {
  for (const auto& f : c) {
    std::set<std::size_t> masks;
    for (const auto& h : c) {
      std::size_t mask = 0;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (h[s[i]] == f[s[i]]) mask |= std::size_t{1} << i;
      masks.insert(mask);
    }
    if (masks.size() == (std::size_t{1} << s.size())) return true;
  }
  return false;
}

int dim_by_definition(const ConceptClass& c, bool (*shattered)(const ConceptClass&, const std::vector<std::size_t>&)) {
  int best = 0;
  for (const auto& s : nonempty_subsets(c.domain_size()))
    if (static_cast<int>(s.size()) > best && shattered(c, s)) best = static_cast<int>(s.size());
  return best;
}

}  // namespace

TEST_CASE("pruning DS check equals the exhaustive oracle on random classes") {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 400; ++round) {
    auto c = random_class(rng, 1 + rng() % 4, 1 + rng() % 8, 2 + rng() % 3, round % 2 == 0);
    for (const auto& s : nonempty_subsets(c.domain_size())) {
      auto fast = ds_shatters(c, s);
      auto slow = ds_shatters_bruteforce(c, s);
      REQUIRE(fast.has_value() == slow.has_value());
      if (fast) {
        CHECK(std::get<DsWitness>(fast->data).patterns == std::get<DsWitness>(slow->data).patterns);
        CHECK(verify_witness(c, *fast));
        CHECK(verify_witness(c, *slow));
      }
    }
  }
}

TEST_CASE("dimensions match definition-level oracles") {
  std::mt19937_64 rng(72);
  for (int round = 0; round < 200; ++round) {
    const bool binary = round % 3 == 0;
    auto c = random_class(rng, 1 + rng() % 4, 1 + rng() % 9, binary ? 2 : 3, false);
    CHECK(dimension(c, ShatterKind::Natarajan).dimension == dim_by_definition(c, n_by_definition));
    CHECK(dimension(c, ShatterKind::Graph).dimension == dim_by_definition(c, g_by_definition));
    if (binary) CHECK(dimension(c, ShatterKind::VC).dimension == dim_by_definition(c, vc_by_definition));
  }
}

TEST_CASE("shattered sets are closed under taking subsets") {
  std::mt19937_64 rng(73);
  const ShatterKind kinds[] = {ShatterKind::DS, ShatterKind::Natarajan, ShatterKind::Graph, ShatterKind::VC};
  for (int round = 0; round < 100; ++round) {
    const bool binary = round % 2 == 0;
    auto c = random_class(rng, 2 + rng() % 3, 2 + rng() % 10, binary ? 2 : 3, false);
    for (auto kind : kinds) {
      if (kind == ShatterKind::VC && !binary) continue;
      for (const auto& s : nonempty_subsets(c.domain_size())) {
        if (!shatters(c, s, kind)) continue;
        for (std::size_t drop = 0; drop < s.size() && s.size() > 1; ++drop) {
          auto t = s;
          t.erase(t.begin() + static_cast<long>(drop));
          CHECK(shatters(c, t, kind));
        }
      }
    }
  }
}

TEST_CASE("N-shattering implies G-shattering") {
  std::mt19937_64 rng(74);
  for (int round = 0; round < 150; ++round) {
    auto c = random_class(rng, 1 + rng() % 4, 1 + rng() % 10, 3, false);
    for (const auto& s : nonempty_subsets(c.domain_size()))
      if (n_shatters(c, s)) CHECK(g_shatters(c, s));
  }
}

TEST_CASE("on binary classes the four dimensions coincide") {
  std::mt19937_64 rng(75);
  for (int round = 0; round < 150; ++round) {
    auto c = random_class(rng, 1 + rng() % 5, 1 + rng() % 12, 2, false);
    auto vc = dimension(c, ShatterKind::VC).dimension;
    CHECK(dimension(c, ShatterKind::DS).dimension == vc);
    CHECK(dimension(c, ShatterKind::Natarajan).dimension == vc);
    CHECK(dimension(c, ShatterKind::Graph).dimension == vc);
  }
}

TEST_CASE("binary reduction turns graph dimension into VC dimension") {
  std::mt19937_64 rng(76);
  for (int round = 0; round < 100; ++round) {
    auto c = random_class(rng, 1 + rng() % 3, 1 + rng() % 8, 3, false);
    CHECK(dimension(to_binary_class(c), ShatterKind::VC).dimension == dimension(c, ShatterKind::Graph).dimension);
  }
}
