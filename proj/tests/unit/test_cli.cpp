#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "refpoly/errors.hpp"
#include "refpoly_cli/analysis.hpp"
#include "refpoly_cli/examples.hpp"
#include "refpoly_cli/graph_source.hpp"
#include "refpoly_cli/sweep.hpp"

namespace refpoly::cli {
namespace {

TEST(GraphSource, ParsesKinds) {
  EXPECT_EQ(load_graph(parse_graph_source("cycle:5")), cycle(5));
  EXPECT_EQ(load_graph(parse_graph_source("multipartite:2,2,2")), complete_multipartite({2, 2, 2}));
  EXPECT_EQ(load_graph(parse_graph_source("graph6:Dhc")), cycle(5));
  EXPECT_EQ(load_graph6(REFPOLY_DATA_DIR "/c5.g6"), cycle(5));
  EXPECT_THROW(parse_graph_source("cycle"), InputError);
  EXPECT_THROW(load_graph(parse_graph_source("wheel:5")), InputError);
  EXPECT_THROW(parse_int_list("2,x"), InputError);
  EXPECT_EQ(parse_int_list("3,1"), (std::vector<int>{3, 1}));
}

TEST(GraphSource, DimensionCapFromEnvironment) {
  ::setenv("REFPOLY_MAX_DIM", "4", 1);
  EXPECT_EQ(max_dimension(), 4);
  EXPECT_THROW(enforce_dimension_cap(cycle(5)), CapacityError);
  EXPECT_NO_THROW(enforce_dimension_cap(cycle(4)));
  ::setenv("REFPOLY_MAX_DIM", "four", 1);
  EXPECT_THROW(max_dimension(), InputError);
  ::unsetenv("REFPOLY_MAX_DIM");
  EXPECT_EQ(max_dimension(), 10);
}

TEST(Analysis, FiveCycleReport) {
  const AnalysisResult r = analyze(cycle(5), cycle(5), {});
  EXPECT_TRUE(r.consistent);
  const Json& j = r.report;
  EXPECT_FALSE(j["graph"]["g1"]["perfect_spgt"].get<bool>());
  EXPECT_TRUE(j["graph"]["same_graph"].get<bool>());
  EXPECT_FALSE(j["gamma"]["reflexive"].get<bool>());
  EXPECT_TRUE(j["omega"]["reflexive"].get<bool>());
  EXPECT_EQ(j["gamma"]["normalized_volume"], "154");
  EXPECT_EQ(j["omega"]["delta"], Json({"1", "16", "75", "124", "75", "16", "1"}));
  EXPECT_EQ(j["omega"]["idp"]["witness"]["n"], 3);
  EXPECT_TRUE(j["theorems"]["omega_idp_iff_perfect"]["witness"]["non_decomposable"].get<bool>());
  for (const auto& [name, entry] : j["theorems"].items())
    if (entry.contains("consistent")) EXPECT_TRUE(entry["consistent"].get<bool>()) << name;
  EXPECT_NE(format_report(j).find("reflexive"), std::string::npos);
}

TEST(Analysis, ReportIsDeterministic) {
  const AnalysisOptions options{.idp_bound = 2, .skip_idp = false, .skip_delta = false,
                                .skip_groebner = false, .facets = true, .max_groebner_variables = 50};
  EXPECT_EQ(analyze(path(4), cycle(4), options).report.dump(), analyze(path(4), cycle(4), options).report.dump());
}

TEST(Analysis, GroebnerCapSkipsToricCheck) {
  AnalysisOptions options;
  options.skip_idp = true;
  options.max_groebner_variables = 4;
  const Json j = analyze(path(3), path(3), options).report;
  EXPECT_TRUE(j["theorems"]["squarefree_initial_ideal"]["skipped"].get<bool>());
}

TEST(Examples, EmbeddedGoldenPassesForFiveCycle) {
  std::ostringstream out;
  const auto s = run_examples(nlohmann::json::parse(embedded_golden()), "4.1", out);
  EXPECT_EQ(s.examples, 1);
  EXPECT_GT(s.checks, 0);
  EXPECT_EQ(s.mismatches, 0) << out.str();
}

TEST(Examples, CorruptedGoldenIsReported) {
  auto golden = nlohmann::json::parse(embedded_golden());
  golden["examples"]["4.1"]["gamma"]["delta"][3] = "63";
  std::ostringstream out;
  const auto s = run_examples(golden, "4.1", out);
  EXPECT_EQ(s.mismatches, 1);
  EXPECT_NE(out.str().find("delta_3"), std::string::npos) << out.str();
}

TEST(Examples, UnknownIdOrField) {
  std::ostringstream out;
  const auto golden = nlohmann::json::parse(embedded_golden());
  EXPECT_THROW(run_examples(golden, "9.9", out), InputError);
  auto bad = golden;
  bad["examples"]["4.1"]["gamma"]["colour"] = "red";
  EXPECT_THROW(run_examples(bad, "4.1", out), InputError);
}

TEST(Sweep, SmallGraphsAreReflexive) {
  SweepOptions options;
  options.max_vertices = 3;
  std::ostringstream out;
  const SweepSummary s = sweep_all(options, out);
  EXPECT_EQ(s.graphs, 1 + 2 + 4);
  EXPECT_EQ(s.omega_reflexive, 7);
  EXPECT_EQ(s.inconsistent, 0);
  EXPECT_EQ(s.to_json(3)["summary"]["reflexive_up_to_6_vertices"], "confirmed");
}

TEST(Sweep, CapacityLimits) {
  SweepOptions options;
  options.max_vertices = 7;
  std::ostringstream out;
  EXPECT_THROW(sweep_all(options, out), CapacityError);
  options.max_vertices = 8;
  options.skip_idp = options.skip_groebner = true;
  EXPECT_THROW(sweep_all(options, out), CapacityError);
}

TEST(Sweep, StreamSkipsMalformedLines) {
  std::istringstream in("Dhc\n!!\nCr\n");
  std::ostringstream out, err;
  SweepOptions options;
  options.skip_idp = true;
  const SweepSummary s = sweep_stream(in, options, out, err);
  EXPECT_EQ(s.graphs, 2);
  EXPECT_EQ(s.skipped_lines, 1);
  EXPECT_FALSE(err.str().empty());
}

}  // namespace
}  // namespace refpoly::cli
