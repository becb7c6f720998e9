#include "adlv/json_io.hpp"
#include "adlv/selfcheck.hpp"
#include "adlv/words.hpp"
#include "doctest.h"

using namespace adlv;
using nlohmann::ordered_json;

namespace {

AffineElt make_xly(const RootSystem& R, const WeylElt& x, const Coweight& lambda,
                   const WeylElt& y) {
  AffineElt a = aff_mul(R, from_finite(R, x), from_translation(R, neg(lambda)));
  return aff_mul(R, a, aff_inv(R, from_finite(R, y)));
}

} // namespace

TEST_CASE("verdict serialization carries the evidence") {
  RootSystem R = RootSystem::build('A', 3);
  Coweight lambda({0, 4, 4});
  AffineElt a = make_xly(R, parse_finite(R, "s2 s1 s3 s2"), lambda,
                         parse_finite(R, "s3 s2"));
  ordered_json j = verdict_to_json(R, decide(R, a));
  CHECK(j["schema"] == "adlv.verdict/1");
  CHECK(j["system"] == "A3");
  CHECK(j["status"] == "Empty");
  CHECK(j["rule"] == "Main2Empty");
  CHECK(j["evidence"]["normal_form"]["J"] == ordered_json::array({1}));
  CHECK(j["evidence"]["normal_form"]["x"] == "s2 s1 s3 s2");
  CHECK(j["evidence"]["normal_form"]["y"] == "s3 s2");
  REQUIRE(j["evidence"]["pieces"].size() == 1);
  // Every printed element parses back to an equal value.
  AffineElt piece = parse_affine(R, j["evidence"]["pieces"][0].get<std::string>());
  CHECK(piece == AffineElt{parse_finite(R, "s3 s2"), neg(lambda)});
  CHECK(parse_affine(R, j["element"].get<std::string>()) == a);
}

TEST_CASE("piece sets round-trip through their printed words") {
  RootSystem R = RootSystem::build('A', 2);
  AffineElt a = make_xly(R, parse_finite(R, "s1 s2"), Coweight({2, 1}), simple(R, 0));
  PieceSet p = kpieces(R, a);
  ordered_json j = pieces_to_json(R, p);
  CHECK(j["schema"] == "adlv.pieces/1");
  CHECK(parse_affine(R, j["source"].get<std::string>()) == a);
  REQUIRE(j["members"].size() == p.members.size());
  for (std::size_t k = 0; k < p.members.size(); ++k)
    CHECK(parse_affine(R, j["members"][k].get<std::string>()) == p.members[k]);
}

TEST_CASE("the rank one closure graph is pinned") {
  RootSystem R = RootSystem::build('A', 1);
  std::string dot = closure_to_dot(R, enumerate_gpieces(R));
  CHECK(dot ==
        "digraph closure {\n"
        "  node [shape=box];\n"
        "  n0 [label=\"{} e\"];\n"
        "  n1 [label=\"{} s1\"];\n"
        "  n2 [label=\"{1} e\"];\n"
        "  n0 -> n1;\n"
        "  n2 -> n0;\n"
        "}\n");
  ordered_json j = closure_to_json(R, enumerate_gpieces(R));
  CHECK(j["edges"] == ordered_json::array({{0, 1}, {2, 0}}));
}

TEST_CASE("table output is a status matrix with word headers") {
  RootSystem R = RootSystem::build('A', 2);
  EmptinessTable t = emptiness_table(R, Coweight({64, 64}));
  std::string csv = table_to_csv(R, t);
  CHECK(csv.substr(0, csv.find('\n')) == "x\\y,e,s1,s2,s1 s2,s2 s1,s1 s2 s1");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
  CHECK(csv.find("e,Empty") != std::string::npos);

  ordered_json j = table_to_json(R, t);
  CHECK(j["schema"] == "adlv.table/1");
  CHECK(j["statuses"].size() == 6);
  CHECK(j["statuses"][0][0] == "Empty");
  int nonempty = 0;
  for (const auto& row : j["statuses"])
    for (const auto& cell : row)
      if (cell == "NonEmpty") ++nonempty;
  CHECK(nonempty == 18);
}

TEST_CASE("the quick validation sweep is clean and reproducible") {
  std::vector<OracleReport> a = run_selfcheck(false, 7);
  for (const OracleReport& r : a) {
    INFO(r.check_name);
    CHECK(r.passed());
    CHECK(r.instance_count > 0);
  }
  std::vector<OracleReport> b = run_selfcheck(false, 7);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].check_name == b[i].check_name);
    CHECK(a[i].instance_count == b[i].instance_count);
  }
  ordered_json j = reports_to_json(a);
  CHECK(j["schema"] == "adlv.report/1");
  CHECK(j["passed"] == true);
}
