#include <string>
#include <vector>

#include "doctest.h"

#include "hyperg/catalog.hpp"
#include "hyperg/expectation.hpp"
#include "hyperg/hypergroup.hpp"
#include "hyperg/json_io.hpp"
#include "hyperg/pipeline.hpp"

using namespace hyperg;

namespace {

InstanceSpec worked_example_spec() {
  InstanceSpec spec;
  spec.name = "S3:double_coset";
  const auto cg = catalog_group("S3");
  spec.group = cg.table;
  spec.element_names = cg.element_names;
  spec.expectation = build_double_coset(cg.table, {0, 2});
  spec.samples = 32;
  return spec;
}

}  // namespace

TEST_SUITE("pipeline") {
  TEST_CASE("full pipeline passes on the worked example") {
    const auto result = run_pipeline(worked_example_spec());
    CHECK(result.exit_code == kExitPass);
    const Json& rep = result.report;
    CHECK(rep.at("all_pass").get<bool>());
    CHECK(rep.at("exit_code").get<int>() == 0);
    CHECK(rep.at("instance").get<std::string>() == "S3:double_coset");
    CHECK(rep.at("quotient").at("size").get<int>() == 2);
    CHECK(rep.at("quotient").at("haar") == Json::array({"2", "4"}));
    CHECK(rep.at("quotient").at("modular") == Json::array({"1", "1"}));

    const auto expected = pipeline_stage_names();
    const auto& stages = rep.at("stages");
    REQUIRE(stages.size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
      CHECK(stages[k].at("stage").get<std::string>() == expected[k]);
      CHECK(stages[k].at("pass").get<bool>());
    }
  }

  TEST_CASE("pipeline stops at the failing gate with exit code 3") {
    InstanceSpec spec;
    spec.name = "S3:skewed";
    spec.group = catalog_group("S3").table;
    spec.expectation = make_expectation(
        {{0, 3, 4}, {1, 2, 5}},
        {{rat_of(1, 2), rat_of(1, 4), rat_of(1, 4)}, {rat_of(1, 3), rat_of(1, 3), rat_of(1, 3)}},
        6);
    const auto result = run_pipeline(spec);
    CHECK(result.exit_code == kExitPreconditionFailed);
    CHECK(result.report.at("failed_stage").get<std::string>() == "hypergroup_conditions");
    CHECK(!result.report.at("all_pass").get<bool>());
    REQUIRE(result.report.at("stages").size() == 2);
    CHECK(result.report.at("stages")[1].at("pass").get<bool>() == false);

    spec.expectation.weights[0] = {rat_of(3, 2), rat_of(-1, 4), rat_of(-1, 4)};
    const auto bad = run_pipeline(spec);
    CHECK(bad.exit_code == kExitPreconditionFailed);
    CHECK(bad.report.at("failed_stage").get<std::string>() == "expectation_axioms");
  }

  TEST_CASE("requested checks select verification stages, gates always run") {
    InstanceSpec spec = worked_example_spec();
    spec.checks = {"cp_certificate"};
    const auto result = run_pipeline(spec);
    CHECK(result.exit_code == kExitPass);
    const auto& stages = result.report.at("stages");
    REQUIRE(stages.size() == 3);
    CHECK(stages[0].at("stage") == "expectation_axioms");
    CHECK(stages[1].at("stage") == "hypergroup_conditions");
    CHECK(stages[2].at("stage") == "cp_certificate");

    spec.checks = {"no_such_stage"};
    CHECK_THROWS_AS(run_pipeline(spec), ParseError);
  }

  TEST_CASE("reports are byte-identical across runs") {
    const auto a = run_pipeline(worked_example_spec());
    const auto b = run_pipeline(worked_example_spec());
    CHECK(a.report.dump(2) == b.report.dump(2));
  }

  TEST_CASE("the identity expectation reproduces the group") {
    for (const std::string name : {"Z3", "Z4"}) {
      const auto g = catalog_group(name).table;
      InstanceSpec spec;
      spec.name = name + ":id";
      spec.group = g;
      spec.expectation = build_identity(g);
      spec.samples = 16;
      CHECK(run_pipeline(spec).exit_code == kExitPass);

      const HypergroupTable h = construct_hypergroup(spec.expectation, g);
      for (int s = 0; s < g.order; ++s) {
        CHECK(h.haar[s] == 1);
        CHECK(h.involution[s] == g.inv(s));
        for (int t = 0; t < g.order; ++t)
          for (int r = 0; r < g.order; ++r) CHECK(h.c[s][t][r] == (g.mul(s, t) == r ? 1 : 0));
      }
    }
  }

  TEST_CASE("group JSON round-trip and validation") {
    const auto g = catalog_group("S3").table;
    const Json j = group_to_json(g);
    const auto back = group_from_json(j);
    CHECK(back.order == g.order);
    CHECK(back.mult == g.mult);
    CHECK(back.identity == g.identity);
    CHECK(back.inverse == g.inverse);

    CHECK_THROWS_AS(group_from_json(Json{{"order", 2}}), ParseError);
    CHECK_THROWS_AS(group_from_json(Json::parse(R"({"order":2,"table":[[0,1]]})")), ParseError);
    CHECK_THROWS_AS(group_from_json(Json::parse(R"({"order":2,"table":[[0,1],[1,2]]})")),
                    GroupError);
  }

  TEST_CASE("expectation JSON round-trip and validation") {
    const auto g = catalog_group("S3").table;
    const auto e = build_double_coset(g, {0, 2});
    const auto back = expectation_from_json(expectation_to_json(e), g.order);
    CHECK(back.blocks.blocks == e.blocks.blocks);
    CHECK(back.weights == e.weights);

    CHECK_THROWS_AS(expectation_from_json(Json{{"blocks", Json::array()}}, 6), ParseError);
    CHECK_THROWS_AS(
        expectation_from_json(
            Json::parse(R"({"blocks":[[0,1,2,3,4,5]],"weights":[["1/2","1/2","0","0","0","0"]]})"),
            6),
        ExpectationError);  // zero weights are rejected
  }

  TEST_CASE("hypergroup JSON round-trip preserves the table exactly") {
    const auto g = catalog_group("S3").table;
    const HypergroupTable h = construct_hypergroup(build_conjugation(g), g);
    const Json j = hypergroup_to_json(h);
    CHECK(j.at("constants")[1][1] == Json::array({"1/3", "0", "2/3"}));
    const auto back = hypergroup_from_json(j);
    CHECK(back.size == h.size);
    CHECK(back.identity == h.identity);
    CHECK(back.involution == h.involution);
    CHECK(back.c == h.c);
    CHECK(back.haar == h.haar);
    CHECK(back.modular == h.modular);
    CHECK(verify_djs(back).all_pass());

    Json broken = j;
    broken["haar"] = Json::array({"1", "3"});
    CHECK_THROWS_AS(hypergroup_from_json(broken), ParseError);
  }

  TEST_CASE("check reports serialize with their items") {
    const auto g = catalog_group("S3").table;
    const auto report = verify_hypergroup_conditions(build_conjugation(g), g);
    const Json j = report_to_json(report);
    CHECK(j.at("all_pass").get<bool>());
    CHECK(j.at("items").size() == report.items.size());
    CHECK(j.at("items")[0].contains("name"));
    CHECK(j.at("items")[0].at("pass").get<bool>());
  }
}
