#include <gtest/gtest.h>

#include "fsg/error.hpp"
#include "fsg/theorems.hpp"

using namespace fsg;

TEST(Theorems, CycleComplementPredictions) {
  EXPECT_FALSE(predicted_connected_vs_cycle_complement({2, 2, 1}));
  EXPECT_FALSE(predicted_connected_vs_cycle_complement({1, 1, 1, 1}));
  EXPECT_FALSE(predicted_connected_vs_cycle_complement({6, 1, 1}));
  EXPECT_TRUE(predicted_connected_vs_cycle_complement({2, 2, 1, 1}));
  EXPECT_TRUE(predicted_connected_vs_cycle_complement({3, 3, 2}));
  EXPECT_TRUE(predicted_connected_vs_cycle_complement({1, 1, 1, 1, 1}));
}

TEST(Theorems, FruitComplementPredictions) {
  EXPECT_TRUE(predicted_disconnected_vs_fruit_complement({2, 2, 2}));
  EXPECT_TRUE(predicted_disconnected_vs_fruit_complement({4, 1, 1, 1}));
  EXPECT_TRUE(predicted_disconnected_vs_fruit_complement({5, 3, 1}));
  EXPECT_FALSE(predicted_disconnected_vs_fruit_complement({3, 2, 2}));
}

TEST(Theorems, SweepsCoverEveryPartition) {
  const auto r = verify_thm_cycle_classification(4, 7, {});
  // p(3) + p(4) + p(5) + p(6)
  EXPECT_EQ(r.instances_checked, 3u + 5u + 7u + 11u);
  EXPECT_TRUE(r.passed());
}

TEST(Theorems, FruitSweep) {
  const auto r = verify_thm_fruit_classification(5, 8, {});
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.instances_checked, 0u);
}

TEST(Theorems, DeletionPredictions) {
  // tad(5,2): labels 1..5 on the cycle, 6 and 7 on the tail.
  EXPECT_EQ(predict_tadpole_deletion(5, 2, 4).kind, DeletionCase::TwoPaths);
  EXPECT_EQ(predict_tadpole_deletion(5, 2, 0).kind, DeletionCase::PathRemainder);
  EXPECT_EQ(predict_tadpole_deletion(5, 2, 2).kind, DeletionCase::SpiderRemainder);
  const auto near = predict_tadpole_deletion(5, 2, 5);
  EXPECT_EQ(near.kind, DeletionCase::PathPlusTadpole);
  EXPECT_TRUE(is_isomorphic(near.expected, disjoint_union(path(1), cycle(5))));
  const auto foot = predict_tadpole_deletion(5, 2, 6);
  EXPECT_TRUE(is_isomorphic(foot.expected, tadpole({5, 1})));
  EXPECT_THROW(predict_tadpole_deletion(5, 0, 1), ParameterError);
}

TEST(Theorems, DeletionSweep) {
  const auto r = verify_lemma_deletion_cases(3, 9, 1, 7, 10);
  EXPECT_TRUE(r.passed());
  std::uint64_t expected = 0;
  for (int c = 3; c <= 9; ++c) {
    for (int t = 1; c + t <= 10; ++t) expected += c + t;
  }
  EXPECT_EQ(r.instances_checked, expected);
}

TEST(Theorems, ReportJson) {
  VerificationReport r;
  r.theorem_id = "demo";
  r.instances_checked = 3;
  r.mismatches.push_back({"x", "connected", "disconnected"});
  r.seed = 5;
  const Json j = report_to_json(r, false);
  EXPECT_FALSE(j.contains("elapsed_ms"));
  EXPECT_EQ(j["theorem"], "demo");
  EXPECT_EQ(j["checked"], 3);
  EXPECT_EQ(j["seed"], 5);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(report_to_json(r).contains("elapsed_ms"));
}

TEST(Theorems, SeededRunsRepeat) {
  SuiteOptions opts;
  opts.max_n = 8;
  opts.samples = 10;
  opts.seed = 42;
  const auto a = report_to_json(run_verification("cor-mindeg4", opts), false);
  const auto b = report_to_json(run_verification("cor-mindeg4", opts), false);
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Theorems, UnknownId) {
  EXPECT_THROW(run_verification("nope", {}), ParameterError);
  EXPECT_EQ(verification_ids().size(), 10u);
}

TEST(Theorems, SmallSuitePasses) {
  SuiteOptions opts;
  opts.max_n = 8;
  opts.samples = 10;
  for (const auto& id : verification_ids()) {
    const auto r = run_verification(id, opts);
    EXPECT_TRUE(r.passed()) << id;
    EXPECT_GT(r.instances_checked, 0u) << id;
  }
}

TEST(Theorems, SupergraphOfTheCoreSpider) {
  const Graph x = spider(SpiderSignature::of({3, 2, 1, 1}));
  EXPECT_TRUE(contains_subgraph(spider(SpiderSignature::of({2, 2, 1, 1})), x).has_value());
  EXPECT_TRUE(fs_is_connected(
      FsInstance::make(x, complement(spider(SpiderSignature::of({4, 2, 1})))), {}));
  const auto r = verify_thm_spider_induct(50, 8, 3, 7, {});
  EXPECT_EQ(r.instances_checked, 50u);
  EXPECT_TRUE(r.passed());
}
