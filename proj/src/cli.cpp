#include "dsc/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "dsc/boosting.hpp"
#include "dsc/compression.hpp"
#include "dsc/constructions.hpp"
#include "dsc/dimensions.hpp"
#include "dsc/errors.hpp"
#include "dsc/io.hpp"
#include "dsc/lowerbound.hpp"
#include "dsc/min_compression.hpp"
#include "dsc/report.hpp"
#include "dsc/scheme_table.hpp"

namespace dsc::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string output;
  int threads = 0;

  std::string family;
  std::size_t t = 0, r = 0, m = 0, c = 0, d = 0;
  std::vector<std::size_t> ts;
  std::uint64_t seed = 0;
  std::size_t domain = 3, concepts = 4, labels = 3;
  bool partial = false;

  std::string class_path;
  std::string kind = "ds";
  bool dual_flag = false;
  bool exhaustive = false;

  std::string scheme = "boosted";
  std::size_t subsample_size = 1;
  std::size_t k = 0;
  std::size_t bits = 0;
  std::optional<std::size_t> max_k;
  std::string emit_scheme;
  std::string pipeline_scheme = "builtin";
  std::size_t m_from = 1, m_to = 1;
};

ConceptClass random_class(const Options& o) {
  if (o.labels < 1 || (o.partial && o.labels < 2)) throw UsageError("random class needs more labels");
  std::mt19937_64 rng(o.seed);
  std::set<Concept> rows;
  for (std::size_t attempt = 0; attempt < 64 * o.concepts && rows.size() < o.concepts; ++attempt) {
    Concept h(o.domain);
    for (auto& l : h) {
      auto v = rng() % o.labels;
      // In partial mode the top label value stands for Star.
      l = (o.partial && v + 1 == o.labels) ? Label::star() : Label(static_cast<std::uint32_t>(v));
    }
    rows.insert(std::move(h));
  }
  return ConceptClass(o.domain, {rows.begin(), rows.end()}, o.partial ? ClassKind::Partial : ClassKind::Total);
}

ConceptClass generate(const Options& o) {
  const auto& f = o.family;
  if (f == "biclique") return biclique_class(star_partition(o.t));
  if (f == "union") {
    if (o.ts.empty()) throw UsageError("--ts is required for the union family");
    std::vector<ConceptClass> parts;
    for (auto t : o.ts) parts.push_back(biclique_class(star_partition(t)));
    return union_disjoint(parts);
  }
  if (f == "disambiguate") return unique_label_disambiguation(read_class_file(o.class_path));
  if (f == "table1") return table1_family(o.r);
  if (f == "haussler-long") return haussler_long(o.m, o.c, o.d);
  if (f == "section41-partial") return section41_example().partial;
  if (f == "section41-total") return section41_example().total;
  if (f == "binary") return to_binary_class(read_class_file(o.class_path));
  if (f == "dual") return dual(read_class_file(o.class_path));
  if (f == "random") return random_class(o);
  throw UsageError("unknown family '" + f + "'");
}

CompressionScheme load_scheme(const Options& o, const ConceptClass& cls) {
  if (o.scheme == "boosted") return boosted_scheme(cls, o.subsample_size);
  auto table = TableScheme::from_json(read_text_file(o.scheme));
  if (table.domain_size() != cls.domain_size())
    throw UsageError("scheme domain size does not match the class");
  return table.scheme(o.scheme);
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty())
    out << text;
  else
    write_text_file(o.output, text);
}

int cmd_gen(const Options& o, std::ostream& out) {
  emit(o, out, serialize_class(generate(o)));
  return kOk;
}

int cmd_dim(const Options& o, std::ostream& out) {
  auto kind = parse_shatter_kind(o.kind);
  if (!kind) throw UsageError("unknown shattering kind '" + o.kind + "'");
  auto cls = read_class_file(o.class_path);
  if (o.dual_flag) cls = dual(cls);
  check_kind_applicable(cls, *kind);
  auto result = dimension(cls, *kind, DimensionOptions{o.exhaustive});
  auto j = to_json(result, cls, *kind);
  j["dual"] = o.dual_flag;
  emit(o, out, render(j));
  if (result.witness && !verify_witness(cls, *result.witness)) return kContractViolation;
  return kOk;
}

int verdict_code(const SchemeReport& r) {
  switch (r.verdict) {
    case Verdict::Valid: return kOk;
    case Verdict::Invalid: return kContractViolation;
    case Verdict::Unknown: return kResource;
  }
  return kContractViolation;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto cls = read_class_file(o.class_path);
  auto report = verify_scheme(cls, load_scheme(o, cls), o.m);
  emit(o, out, render(to_json(report)));
  return verdict_code(report);
}

int cmd_report(const Options& o, std::ostream& out) {
  if (o.m_from < 1 || o.m_to < o.m_from) throw UsageError("need 1 <= --m-from <= --m-to");
  auto cls = read_class_file(o.class_path);
  auto scheme = load_scheme(o, cls);
  std::vector<SchemeReport> reports;
  int code = kOk;
  for (auto m = o.m_from; m <= o.m_to; ++m) {
    reports.push_back(verify_scheme(cls, scheme, m));
    code = std::max(code, verdict_code(reports.back()));
  }
  emit(o, out, report_table(reports));
  return code;
}

int cmd_min_compression(const Options& o, std::ostream& out) {
  auto cls = read_class_file(o.class_path);
  MinCompressionOptions opts;
  if (o.max_k) opts.max_k = *o.max_k;
  auto result = min_compression_size(cls, o.m, o.bits, opts);
  auto j = to_json(result);
  j["m"] = o.m;
  j["bits"] = o.bits;
  emit(o, out, render(j));
  if (!o.emit_scheme.empty() && result.certificate) write_text_file(o.emit_scheme, result.certificate->to_json());
  return kOk;
}

int cmd_extract(const Options& o, std::ostream& out) {
  auto cls = read_class_file(o.class_path);
  if (o.scheme == "boosted") throw UsageError("extract-disambiguation needs a table scheme file");
  auto scheme = load_scheme(o, cls);
  emit(o, out, serialize_class(extract_disambiguation(cls, scheme, o.k, o.bits)));
  return kOk;
}

int cmd_pipeline(const Options& o, std::ostream& out) {
  CompressionScheme scheme;
  if (o.pipeline_scheme == "builtin") {
    scheme = star_scheme(o.t);
  } else {
    auto table = TableScheme::from_json(read_text_file(o.pipeline_scheme));
    scheme = table.scheme(o.pipeline_scheme);
  }
  auto report = pipeline_certificate(o.t, scheme, o.k, o.bits);
  emit(o, out, render(to_json(report)));
  return report.holds() ? kOk : kContractViolation;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact dimension, compression and lower-bound checks on finite concept classes", "dscomp"};
  app.require_subcommand(1);
  app.add_option("-o,--output", o.output, "Write the report to this file");
  app.add_option("--threads", o.threads, "Cap on worker threads")->check(CLI::NonNegativeNumber);

  auto* gen = app.add_subcommand("gen", "Generate a concept class file");
  gen->add_option("--family", o.family,
                  "biclique|union|disambiguate|table1|haussler-long|section41-partial|section41-total|"
                  "binary|dual|random")
      ->required();
  gen->add_option("--t", o.t, "Complete graph size for biclique");
  gen->add_option("--ts", o.ts, "Graph sizes for union")->delimiter(',');
  gen->add_option("--r", o.r, "Table 1 parameter");
  gen->add_option("--m", o.m, "Haussler-Long domain size");
  gen->add_option("--c", o.c, "Haussler-Long label count");
  gen->add_option("--d", o.d, "Haussler-Long dimension");
  gen->add_option("--class", o.class_path, "Input class for disambiguate, binary and dual");
  gen->add_option("--seed", o.seed, "Seed for random");
  gen->add_option("--domain", o.domain, "Domain size for random");
  gen->add_option("--concepts", o.concepts, "Concept count for random");
  gen->add_option("--labels", o.labels, "Labels for random (the last one is Star with --partial)");
  gen->add_flag("--partial", o.partial, "Random partial class");

  auto* dim = app.add_subcommand("dim", "Compute a shattering dimension with witness");
  dim->add_option("--class", o.class_path)->required();
  dim->add_option("--kind", o.kind, "vc|ds|natarajan|graph");
  dim->add_flag("--dual", o.dual_flag, "Use the dual class");
  dim->add_flag("--exhaustive", o.exhaustive, "Check every subset size");

  auto* verify = app.add_subcommand("verify-compression", "Verify a scheme on all length-m samples");
  verify->add_option("--class", o.class_path)->required();
  verify->add_option("--scheme", o.scheme, "boosted or a table scheme file");
  verify->add_option("--m", o.m)->required();
  verify->add_option("--subsample-size", o.subsample_size, "Weak learner subsample size");

  auto* report = app.add_subcommand("report", "k(m) table for a scheme over a range of m");
  report->add_option("--class", o.class_path)->required();
  report->add_option("--scheme", o.scheme, "boosted or a table scheme file");
  report->add_option("--m-from", o.m_from);
  report->add_option("--m-to", o.m_to)->required();
  report->add_option("--subsample-size", o.subsample_size, "Weak learner subsample size");

  auto* minc = app.add_subcommand("min-compression", "Exact minimum subsample size");
  minc->add_option("--class", o.class_path)->required();
  minc->add_option("--m", o.m)->required();
  minc->add_option("--bits", o.bits)->required();
  minc->add_option("--max-k", o.max_k);
  minc->add_option("--emit-scheme", o.emit_scheme, "Write the certifying table scheme here");

  auto* extract = app.add_subcommand("extract-disambiguation", "Disambiguation from a scheme's reconstructions");
  extract->add_option("--class", o.class_path)->required();
  extract->add_option("--scheme", o.scheme, "Table scheme file")->required();
  extract->add_option("--k", o.k)->required();
  extract->add_option("--bits", o.bits)->required();

  auto* pipeline = app.add_subcommand("pipeline", "Scheme to disambiguation to coloring certificate on K_t");
  pipeline->add_option("--t", o.t)->required();
  pipeline->add_option("--k", o.k)->required();
  pipeline->add_option("--bits", o.bits)->required();
  pipeline->add_option("--scheme", o.pipeline_scheme, "builtin or a table scheme file");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  if (o.threads > 0) omp_set_num_threads(o.threads);

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (dim->parsed()) return cmd_dim(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (report->parsed()) return cmd_report(o, out);
    if (minc->parsed()) return cmd_min_compression(o, out);
    if (extract->parsed()) return cmd_extract(o, out);
    if (pipeline->parsed()) return cmd_pipeline(o, out);
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << "\n";
    return kContractViolation;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kContractViolation;
  }
  return kUsage;
}

}  // namespace dsc::cli
