// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dsc/boosting.hpp"
#include "dsc/compression.hpp"
#include "dsc/constructions.hpp"
#include "dsc/dimensions.hpp"
#include "dsc/errors.hpp"
#include "dsc/lowerbound.hpp"
#include "dsc/min_compression.hpp"
#include "dsc/report.hpp"

using namespace dsc;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

int contract_violations = 0;

std::vector<std::size_t> iota_points(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

ConceptClass random_class(std::mt19937_64& rng, std::size_t n, std::size_t rows, std::size_t labels, bool partial) {
  std::set<Concept> seen;
  for (std::size_t attempt = 0; attempt < 50 * rows && seen.size() < rows; ++attempt) {
    Concept c(n);
    for (auto& l : c) {
      auto v = static_cast<std::uint32_t>(rng() % labels);
      l = (partial && v + 1 == labels) ? Label::star() : Label(v);
    }
    seen.insert(c);
  }
  return ConceptClass::infer(n, {seen.begin(), seen.end()});
}

ConceptClass biclique(std::size_t t) { return biclique_class(star_partition(t)); }

ConceptClass biclique_union(std::size_t lo, std::size_t hi) {
  std::vector<ConceptClass> parts;
  for (std::size_t t = lo; t <= hi; ++t) parts.push_back(biclique(t));
  return union_disjoint(parts);
}

// 1
void ds_preservation(Outcome& o) {
  auto u = biclique_union(3, 6);
  auto du = dimension(u, ShatterKind::DS).dimension;
  auto dd = dimension(unique_label_disambiguation(u), ShatterKind::DS).dimension;
  o.detail << "DS(U)=" << du << " DS(disambiguation)=" << dd << " ";
  o.require(du == 1 && dd == 1, "both dimensions equal 1");
}

// 2
void biclique_ds(Outcome& o) {
  for (std::size_t t = 3; t <= 7; ++t) {
    auto d = dimension(biclique(t), ShatterKind::DS).dimension;
    o.detail << "t=" << t << ":" << d << " ";
    o.require(d == 1, "DS = 1 at t=" + std::to_string(t));
  }
}

// 3
void table1_blowup(Outcome& o) {
  for (std::size_t r = 1; r <= 4; ++r) {
    auto c = table1_family(r);
    auto primal = dimension(c, ShatterKind::DS).dimension;
    auto dual = dual_dimension(c, ShatterKind::DS).dimension;
    o.detail << "r=" << r << ":" << primal << "/" << dual << " ";
    o.require(primal == (r == 1 ? 0 : 1), "primal DS at r=" + std::to_string(r));
    o.require(dual == static_cast<int>(r), "dual DS at r=" + std::to_string(r));
  }
}

// 4
void section41(Outcome& o) {
  auto [partial, total] = section41_example();
  auto dp = dimension(partial, ShatterKind::DS).dimension;
  auto g = dimension(total, ShatterKind::Graph);
  o.detail << "DS(partial)=" << dp << " G(total)=" << g.dimension << " ";
  o.require(dp == 0, "partial DS = 0");
  o.require(g.dimension == 3, "graph dimension 3");
  auto s = iota_points(3);
  auto w = g_shatters(total, s);
  const Concept zero(3, Label(0));
  o.require(w && total[std::get<CenterWitness>(w->data).center] == zero && verify_witness(total, *w),
            "(0,0,0) G-shatters all three points");
  o.require(g.witness && total[std::get<CenterWitness>(g.witness->data).center] == zero,
            "dimension witness centred at (0,0,0)");
}

// 5
void haussler_long_sizes(Outcome& o) {
  const std::size_t params[][3] = {{2, 3, 1}, {3, 3, 2}, {4, 2, 2}, {3, 4, 3}};
  for (auto [m, c, d] : params) {
    auto cls = haussler_long(m, c, d);
    std::uint64_t expected = 0, power = 1;
    for (std::size_t i = 0; i <= d; ++i, power *= c - 1) expected += binomial(m, i) * power;
    auto n = dimension(cls, ShatterKind::Natarajan).dimension;
    o.detail << "(" << m << "," << c << "," << d << "):|H|=" << cls.size() << ",N=" << n << " ";
    o.require(cls.size() == expected, "size formula");
    o.require(n == static_cast<int>(d), "Natarajan dimension equals d");
    if (m == d) {
      std::uint64_t cd = 1;
      for (std::size_t i = 0; i < d; ++i) cd *= c;
      o.require(cls.size() == cd, "size c^d when m = d");
    }
  }
}

// 6
void binary_reduction(Outcome& o) {
  const std::pair<const char*, ConceptClass> cases[] = {
      {"section41", section41_example().total},
      {"HL(3,3,2)", haussler_long(3, 3, 2)},
      {"ULD(K4)", unique_label_disambiguation(biclique(4))},
  };
  for (const auto& [name, c] : cases) {
    auto vc = dimension(to_binary_class(c), ShatterKind::VC).dimension;
    auto g = dimension(c, ShatterKind::Graph).dimension;
    o.detail << name << ":VC=" << vc << ",G=" << g << " ";
    o.require(vc == g, std::string(name));
  }
}

// 7
void boosted_validity(Outcome& o) {
  struct Case {
    const char* name;
    ConceptClass cls;
    std::size_t m_lo, m_hi;
  };
  const Case cases[] = {{"HL(4,2,1)", haussler_long(4, 2, 1), 2, 6}, {"section41", section41_example().total, 2, 4}};
  for (const auto& c : cases) {
    auto s = static_cast<std::size_t>(std::max(1, dimension(c.cls, ShatterKind::Graph).dimension));
    auto scheme = boosted_scheme(c.cls, s);
    std::vector<SchemeReport> reports;
    for (auto m = c.m_lo; m <= c.m_hi; ++m) {
      reports.push_back(verify_scheme(c.cls, scheme, m));
      o.require(reports.back().valid() && reports.back().failure_count == 0,
                std::string(c.name) + " valid at m=" + std::to_string(m));
      o.detail << c.name << " m=" << m << " |S'|<=" << reports.back().max_subsample << " ";
    }
    std::printf("# k(m) for boosted(s=%zu) on %s\n%s", s, c.name, report_table(reports).c_str());
  }
}

// 8
void monotonicity(Outcome& o) {
  std::vector<std::pair<std::string, std::pair<ConceptClass, ConceptClass>>> catalog;
  for (std::size_t t = 3; t <= 6; ++t) {
    auto p = biclique(t);
    catalog.push_back({"K" + std::to_string(t), {p, unique_label_disambiguation(p)}});
  }
  auto u = biclique_union(3, 5);
  catalog.push_back({"U(3..5)", {u, unique_label_disambiguation(u)}});
  auto [partial, total] = section41_example();
  catalog.push_back({"section41", {partial, total}});

  std::size_t checked = 0, violations = 0;
  for (const auto& [name, pair] : catalog) {
    const auto& [p, d] = pair;
    std::vector<CompressionScheme> schemes;
    for (std::size_t s = 1; s <= 3; ++s) schemes.push_back(boosted_scheme(d, s));
    for (std::size_t m = 1; m <= 3; ++m) {
      std::vector<CompressionScheme> at_m = schemes;
      if (d.domain_size() <= 5 && m <= 2) {
        MinCompressionOptions opts;
        opts.node_budget = 2'000'000;
        try {
          auto exact = min_compression_size(d, m, 0, opts);
          if (exact.certificate) at_m.push_back(exact.certificate->scheme("exact"));
        } catch (const ResourceError&) {
        }
      }
      for (const auto& scheme : at_m) {
        auto on_d = verify_scheme(d, scheme, m);
        if (!on_d.valid()) continue;
        auto on_p = verify_scheme(p, scheme, m);
        ++checked;
        if (!on_p.valid() || on_p.k_of_m > on_d.k_of_m) {
          ++violations;
          o.detail << name << " m=" << m << " " << scheme.name << " ";
        }
      }
    }
  }
  o.detail << checked << " scheme/size pairs, " << violations << " violations ";
  o.require(violations == 0, "no violations");
  o.require(checked > 0, "at least one valid scheme checked");
}

// 9
void exact_oracle(Outcome& o) {
  struct Case {
    const char* name;
    ConceptClass cls;
    std::size_t m;
    std::size_t expected;
  };
  const Concept c00(2, Label(0)), c11(2, Label(1));
  const Case cases[] = {
      {"singleton", ConceptClass(2, {Concept{Label(0), Label(1)}}, ClassKind::Total), 2, 0},
      {"two-constant", ConceptClass(2, {c00, c11}, ClassKind::Total), 2, 1},
      {"2-cube", haussler_long(2, 2, 2), 2, 2},
  };
  for (const auto& c : cases) {
    auto r = min_compression_size(c.cls, c.m, 0);
    o.detail << c.name << ":" << (r.k ? std::to_string(*r.k) : std::string("none")) << " (expected "
             << c.expected << ") ";
    o.require(r.k == c.expected, std::string(c.name) + " value");
    if (!r.k) continue;
    auto replay = verify_scheme(c.cls, r.certificate->scheme(), c.m);
    o.require(replay.valid() && replay.max_subsample <= *r.k && replay.max_bits == 0,
              std::string(c.name) + " certificate replays");
    // Every k below the answer was searched to exhaustion.
    o.require(r.nodes_per_k.size() == *r.k + 1, std::string(c.name) + " refutations recorded");
    if (*r.k > 0) o.require(!find_scheme(c.cls, c.m, *r.k - 1, 0), std::string(c.name) + " refuted at k-1");
  }
}

// 10
void pipeline(Outcome& o) {
  for (std::size_t t = 3; t <= 4; ++t) {
    const std::size_t n = t - 1;
    auto cls = biclique(t);
    std::vector<std::pair<CompressionScheme, std::size_t>> schemes{{star_scheme(t), 1}};
    auto exact = min_compression_size(cls, n, 0);
    o.require(exact.k.has_value(), "exact scheme exists at t=" + std::to_string(t));
    if (exact.k) schemes.emplace_back(exact.certificate->scheme("exact"), *exact.k);

    for (const auto& [scheme, k_min] : schemes)
      for (std::size_t k = k_min; k <= 2; ++k)
        for (std::size_t bits = 0; bits <= 1; ++bits) {
          auto r = pipeline_certificate(t, scheme, k, bits);
          o.require(r.feasible_a_priori && r.holds(), "feasible certificate t=" + std::to_string(t));
          o.require(r.disambiguation_size >= t && r.disambiguation_size <= r.counting_ceiling,
                    "t <= D <= ceiling at t=" + std::to_string(t));
          o.detail << "t=" << t << "," << scheme.name << ",k=" << k << ",B=" << bits << ":D=" << r.disambiguation_size
                   << "/" << r.counting_ceiling << " ";
        }

    for (std::size_t k = 0; k <= 2; ++k)
      for (std::size_t bits = 0; bits <= 2; ++bits) {
        if (counting_bound(n, 2, k, bits) >= t) continue;
        auto r = pipeline_certificate(t, star_scheme(t), k, bits);
        o.require(!r.feasible_a_priori && r.holds(), "infeasible flagged");
        MinCompressionOptions opts;
        opts.max_k = k;
        auto confirm = min_compression_size(cls, n, bits, opts);
        o.require(!confirm.k, "search confirms no scheme at (k, B)");
        o.detail << "t=" << t << ",k=" << k << ",B=" << bits << ":infeasible ";
      }
  }
}

bool ds_agree(const ConceptClass& c, std::size_t& compared) {
  for (const auto& s : nonempty_subsets(c.domain_size())) {
    ++compared;
    auto fast = ds_shatters(c, s);
    auto slow = ds_shatters_bruteforce(c, s);
    if (fast.has_value() != slow.has_value()) return false;
    if (fast && std::get<DsWitness>(fast->data).patterns != std::get<DsWitness>(slow->data).patterns) return false;
  }
  return true;
}

// 11
void oracle_equivalence(Outcome& o) {
  std::size_t classes = 0, compared = 0, disagreements = 0;
  // Exhaustive: every class of 1..6 concepts over 1..3 points, total over
  // labels {0,1,2} and partial over {0,1,*}.
  for (bool partial : {false, true})
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<Concept> universe;
      std::size_t count = 1;
      for (std::size_t i = 0; i < n; ++i) count *= 3;
      for (std::size_t code = 0; code < count; ++code) {
        Concept c(n);
        auto rest = code;
        for (std::size_t i = n; i-- > 0; rest /= 3) {
          auto v = static_cast<std::uint32_t>(rest % 3);
          c[i] = (partial && v == 2) ? Label::star() : Label(v);
        }
        universe.push_back(std::move(c));
      }
      std::vector<std::size_t> pick;
      auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!pick.empty()) {
          std::vector<Concept> rows;
          for (auto i : pick) rows.push_back(universe[i]);
          ++classes;
          if (!ds_agree(ConceptClass::infer(n, std::move(rows)), compared)) ++disagreements;
        }
        if (pick.size() == 6) return;
        for (std::size_t i = start; i < universe.size(); ++i) {
          pick.push_back(i);
          self(self, i + 1);
          pick.pop_back();
        }
      };
      rec(rec, 0);
    }
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 1000; ++i) {
    auto c = random_class(rng, 4 + rng() % 2, 7 + rng() % 6, 3 + rng() % 2, i % 2 == 1);
    ++classes;
    if (!ds_agree(c, compared)) ++disagreements;
  }
  o.detail << classes << " classes, " << compared << " point sets, " << disagreements << " disagreements ";
  o.require(disagreements == 0, "100% agreement");
}

// 12
void shattering_order(Outcome& o) {
  std::mt19937_64 rng(12012);
  std::size_t shattered_sets = 0, binary = 0;
  const ShatterKind kinds[] = {ShatterKind::VC, ShatterKind::DS, ShatterKind::Natarajan, ShatterKind::Graph};
  for (int i = 0; i < 500; ++i) {
    const std::size_t labels = i % 3 == 0 ? 2 : 3 + rng() % 2;
    auto c = random_class(rng, 2 + rng() % 4, 2 + rng() % 11, labels, false);
    const bool is_bin = is_binary(c);
    for (auto kind : kinds) {
      if (kind == ShatterKind::VC && !is_bin) continue;
      for (const auto& s : nonempty_subsets(c.domain_size())) {
        if (!shatters(c, s, kind)) continue;
        ++shattered_sets;
        for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << s.size()); ++mask) {
          std::vector<std::size_t> sub;
          for (std::size_t j = 0; j < s.size(); ++j)
            if (mask >> j & 1) sub.push_back(s[j]);
          if (!shatters(c, sub, kind)) {
            o.require(false, "subset of a shattered set unshattered");
            break;
          }
        }
      }
    }
    auto dn = dimension(c, ShatterKind::Natarajan).dimension;
    auto dg = dimension(c, ShatterKind::Graph).dimension;
    o.require(dn <= dg, "d_N <= d_G");
    if (is_bin) {
      ++binary;
      auto vc = dimension(c, ShatterKind::VC).dimension;
      auto ds = dimension(c, ShatterKind::DS).dimension;
      o.require(vc == ds && ds == dn && dn == dg, "binary dimensions coincide");
    }
  }
  o.detail << "500 classes (" << binary << " binary), " << shattered_sets << " shattered sets checked ";
}

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;  // 0: no runtime bound
  std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "DS preserved by unique-label disambiguation", 10, ds_preservation},
      {2, "biclique classes have DS dimension 1", 10, biclique_ds},
      {3, "dual DS blow-up of the table family", 30, table1_blowup},
      {4, "partial example and its disambiguation", 0, section41},
      {5, "Haussler-Long sizes and Natarajan dimension", 0, haussler_long_sizes},
      {6, "binary reduction preserves graph dimension", 0, binary_reduction},
      {7, "boosted scheme validity", 120, boosted_validity},
      {8, "compression monotone under disambiguation", 0, monotonicity},
      {9, "exact compression oracle", 60, exact_oracle},
      {10, "compression to coloring pipeline", 0, pipeline},
      {11, "DS pruning equals exhaustive oracle", 0, oracle_equivalence},
      {12, "shattering monotonicity and ordering", 0, shattering_order},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const ContractViolation& e) {
      ++contract_violations;
      o.require(false, std::string("contract violation: ") + e.what());
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds)
      o.require(false, "runtime " + std::to_string(seconds) + "s over " + std::to_string(c.limit_seconds) + "s");
    failed += !o.pass;
    std::printf("criterion %2d %s  %s (%.2fs): %s\n", c.number, o.pass ? "PASS" : "FAIL", c.title, seconds,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("contract violations: %d\n", contract_violations);
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 && contract_violations == 0 ? 0 : 1;
}
