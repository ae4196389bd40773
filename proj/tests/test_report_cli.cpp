#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "dsc/cli.hpp"
#include "dsc/constructions.hpp"
#include "dsc/io.hpp"
#include "dsc/report.hpp"
#include "support.hpp"

using namespace dsc;
using namespace dsc::test;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run dscomp(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) { return (std::filesystem::path(DSC_TEST_TMP) / name).string(); }

}  // namespace

TEST_CASE("report table") {
  SchemeReport a;
  a.verdict = Verdict::Valid;
  a.m = 2;
  a.k_of_m = 1;
  a.samples_checked = 3;
  std::vector<SchemeReport> one{a};
  CHECK(report_table(one) == "m,k_of_m,samples_checked,valid\n2,1,3,valid\n");

  SchemeReport b = a;
  b.m = 1;
  b.verdict = Verdict::Invalid;
  std::vector<SchemeReport> mixed{a, b};
  CHECK(report_table(mixed) == "m,k_of_m,samples_checked,valid\n1,1,3,invalid\n2,1,3,valid\n");

  CHECK_THROWS_AS(report_table(std::vector<SchemeReport>{}), std::invalid_argument);
}

TEST_CASE("json reports carry witness verification") {
  auto c = table1_family(2);
  auto r = dimension(c, ShatterKind::DS);
  auto j = to_json(r, c, ShatterKind::DS);
  CHECK(j["dimension"] == 1);
  CHECK(j["witness"]["verified"] == true);
  CHECK(j["witness"]["kind"] == "ds");
  CHECK(to_json(dimension(cls(1, {{0}}), ShatterKind::DS), cls(1, {{0}}), ShatterKind::DS)["witness"].is_null());
}

TEST_CASE("cli gen") {
  auto r = dscomp({"gen", "--family", "biclique", "--t", "4"});
  CHECK(r.code == cli::kOk);
  auto c = parse_class(r.out);
  CHECK(c.size() == 4);
  CHECK(c.domain_size() == 3);
  CHECK(serialize_class(c) == r.out);

  CHECK(parse_class(dscomp({"gen", "--family", "union", "--ts", "3,4"}).out).size() == 7);
  CHECK(parse_class(dscomp({"gen", "--family", "haussler-long", "--m", "2", "--c", "3", "--d", "1"}).out).size() ==
        5);

  auto a = dscomp({"gen", "--family", "random", "--seed", "7", "--domain", "4", "--concepts", "6"});
  auto b = dscomp({"gen", "--family", "random", "--seed", "7", "--domain", "4", "--concepts", "6"});
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);
  CHECK(serialize_class(parse_class(a.out)) == a.out);
}

TEST_CASE("cli dim on table1 and its dual") {
  auto path = tmp("table1_2.json");
  CHECK(dscomp({"-o", path, "gen", "--family", "table1", "--r", "2"}).code == cli::kOk);
  auto primal = nlohmann::json::parse(dscomp({"dim", "--class", path, "--kind", "ds"}).out);
  CHECK(primal["dimension"] == 1);
  CHECK(primal["witness"]["verified"] == true);
  auto dual = nlohmann::json::parse(dscomp({"dim", "--class", path, "--kind", "ds", "--dual"}).out);
  CHECK(dual["dimension"] == 2);
}

TEST_CASE("cli exit codes") {
  CHECK(dscomp({"gen", "--family", "nonesuch"}).code == cli::kUsage);
  CHECK(dscomp({"frobnicate"}).code == cli::kUsage);
  CHECK(dscomp({"dim"}).code == cli::kUsage);
  CHECK(dscomp({"dim", "--class", tmp("missing.json")}).code == cli::kUsage);
  CHECK(dscomp({"gen", "--family", "table1", "--r", "11"}).code == cli::kResource);
  CHECK(dscomp({"--help"}).code == cli::kOk);

  auto path = tmp("two_constants.json");
  write_text_file(path, serialize_class(cls(2, {{0, 0}, {1, 1}})));
  auto bad = tmp("constant_scheme.json");
  TableScheme always(2, con({0, 0}));
  always.set_key(smp({{0, 0}}), CompressionKey{});
  always.set_key(smp({{0, 1}}), CompressionKey{});
  always.set_key(smp({{1, 0}}), CompressionKey{});
  always.set_key(smp({{1, 1}}), CompressionKey{});
  write_text_file(bad, always.to_json());
  auto r = dscomp({"verify-compression", "--class", path, "--scheme", bad, "--m", "1"});
  CHECK(r.code == cli::kContractViolation);
  CHECK(nlohmann::json::parse(r.out)["verdict"] == "invalid");
}

TEST_CASE("cli compression round trip: search, verify, extract") {
  auto path = tmp("k3.json");
  write_text_file(path, serialize_class(biclique_class(star_partition(3))));
  auto scheme = tmp("k3_scheme.json");
  auto mc = dscomp({"min-compression", "--class", path, "--m", "2", "--bits", "0", "--emit-scheme", scheme});
  REQUIRE(mc.code == cli::kOk);
  CHECK(nlohmann::json::parse(mc.out)["k"] == 1);

  auto v = dscomp({"verify-compression", "--class", path, "--scheme", scheme, "--m", "2"});
  CHECK(v.code == cli::kOk);

  auto e = dscomp({"extract-disambiguation", "--class", path, "--scheme", scheme, "--k", "1", "--bits", "0"});
  CHECK(e.code == cli::kOk);
  auto d = parse_class(e.out);
  CHECK(disambiguates(d, biclique_class(star_partition(3))));
  CHECK(d.size() >= 3);
}

TEST_CASE("cli boosted verification, report table and pipeline") {
  auto path = tmp("hl421.json");
  write_text_file(path, serialize_class(haussler_long(4, 2, 1)));
  auto v = dscomp({"verify-compression", "--class", path, "--scheme", "boosted", "--m", "3"});
  CHECK(v.code == cli::kOk);
  CHECK(nlohmann::json::parse(v.out)["verdict"] == "valid");

  auto t = dscomp({"report", "--class", path, "--m-from", "1", "--m-to", "3"});
  CHECK(t.code == cli::kOk);
  CHECK(t.out.rfind("m,k_of_m,samples_checked,valid\n1,", 0) == 0);

  auto p = dscomp({"pipeline", "--t", "4", "--k", "1", "--bits", "0"});
  CHECK(p.code == cli::kOk);
  auto j = nlohmann::json::parse(p.out);
  CHECK(j["holds"] == true);
  CHECK(j["chromatic_floor"] == 4);
  CHECK(dscomp({"pipeline", "--t", "4", "--k", "1", "--bits", "0"}).out == p.out);

  auto infeasible = nlohmann::json::parse(dscomp({"pipeline", "--t", "4", "--k", "0", "--bits", "1"}).out);
  CHECK(infeasible["feasible_a_priori"] == false);
}
