#include "dsc/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dsc {

using nlohmann::ordered_json;

std::string report_table(std::span<const SchemeReport> reports) {
  if (reports.empty()) throw std::invalid_argument("report_table needs at least one report");
  std::vector<const SchemeReport*> rows;
  for (const auto& r : reports) rows.push_back(&r);
  std::stable_sort(rows.begin(), rows.end(), [](auto a, auto b) { return a->m < b->m; });
  std::ostringstream out;
  out << "m,k_of_m,samples_checked,valid\n";
  for (const auto* r : rows)
    out << r->m << ',' << r->k_of_m << ',' << r->samples_checked << ',' << to_string(r->verdict) << '\n';
  return out.str();
}

namespace {

ordered_json label_json(Label l) {
  if (l.is_star()) return "*";
  return l.value();
}

ordered_json concept_json(const Concept& c) {
  auto out = ordered_json::array();
  for (auto l : c) out.push_back(label_json(l));
  return out;
}

}  // namespace

ordered_json to_json(const Sample& s) {
  auto out = ordered_json::array();
  for (const auto& e : s) out.push_back(ordered_json::array({e.index, e.label.value()}));
  return out;
}

ordered_json to_json(const SchemeReport& r) {
  ordered_json j;
  j["verdict"] = std::string(to_string(r.verdict));
  j["m"] = r.m;
  j["k_of_m"] = r.k_of_m;
  j["max_subsample"] = r.max_subsample;
  j["max_bits"] = r.max_bits;
  j["distinct_keys"] = r.distinct_keys;
  j["samples_checked"] = r.samples_checked;
  j["failure_count"] = r.failure_count;
  auto failures = ordered_json::array();
  for (const auto& f : r.failures) {
    ordered_json fj;
    fj["sample"] = to_json(f.sample);
    if (f.offending_index < f.sample.size())
      fj["offending_index"] = f.offending_index;
    else
      fj["offending_index"] = nullptr;
    fj["reason"] = f.reason;
    failures.push_back(std::move(fj));
  }
  j["failures"] = std::move(failures);
  return j;
}

ordered_json to_json(const ShatterWitness& w, const ConceptClass& cls) {
  ordered_json j;
  j["kind"] = std::string(to_string(w.kind));
  j["points"] = w.points;
  ordered_json data;
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, DsWitness>) {
          auto patterns = ordered_json::array();
          for (const auto& p : d.patterns) patterns.push_back(concept_json(p));
          data["patterns"] = std::move(patterns);
          data["neighbor"] = d.neighbor;
          data["realizers"] = d.realizers;
        } else if constexpr (std::is_same_v<T, CubeWitness>) {
          data["realizers"] = d.realizers;
        } else if constexpr (std::is_same_v<T, PairWitness>) {
          data["first"] = d.first;
          data["second"] = d.second;
          data["realizers"] = d.realizers;
        } else {
          data["center"] = d.center;
          data["center_concept"] = concept_json(cls[d.center]);
          data["realizers"] = d.realizers;
        }
      },
      w.data);
  j["data"] = std::move(data);
  j["verified"] = verify_witness(cls, w);
  return j;
}

ordered_json to_json(const DimensionResult& r, const ConceptClass& cls, ShatterKind kind) {
  ordered_json j;
  j["kind"] = std::string(to_string(kind));
  j["dimension"] = r.dimension;
  if (r.witness)
    j["witness"] = to_json(*r.witness, cls);
  else
    j["witness"] = nullptr;
  return j;
}

ordered_json to_json(const PipelineReport& r) {
  ordered_json j;
  j["t"] = r.t;
  j["n"] = r.n;
  j["k"] = r.k;
  j["bits"] = r.bit_budget;
  j["scheme"] = r.scheme_name;
  j["scheme_valid"] = r.scheme_valid;
  j["measured_max_subsample"] = r.measured_max_subsample;
  j["measured_max_bits"] = r.measured_max_bits;
  j["within_declared_size"] = r.within_declared_size;
  j["counting_ceiling"] = r.counting_ceiling;
  j["chromatic_floor"] = r.chromatic_floor;
  j["feasible_a_priori"] = r.feasible_a_priori;
  j["disambiguation_size"] = r.disambiguation_size;
  j["coloring_colors"] = r.coloring_colors;
  j["coloring_proper"] = r.coloring_proper;
  j["below_ceiling"] = r.below_ceiling;
  j["above_floor"] = r.above_floor;
  j["holds"] = r.holds();
  j["notes"] = r.notes;
  return j;
}

ordered_json to_json(const MinCompressionResult& r) {
  ordered_json j;
  if (r.k)
    j["k"] = *r.k;
  else
    j["k"] = nullptr;
  j["nodes_per_k"] = r.nodes_per_k;
  j["certified"] = r.certificate.has_value();
  return j;
}

std::string render(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace dsc
