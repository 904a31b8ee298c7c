#include <gtest/gtest.h>

#include <set>

#include "mixcay/analysis.hpp"
#include "mixcay/error.hpp"
#include "mixcay/harness.hpp"
#include "mixcay/report.hpp"
#include "oracles.hpp"

using namespace mixcay;

namespace {

InstanceSpaceSpec space(std::vector<std::string> groups) {
  InstanceSpaceSpec s;
  s.groups = std::move(groups);
  s.threads = 1;
  return s;
}

std::string key(const MixedCayleyParams& p) { return params_to_json(p).dump(); }

}  // namespace

TEST(Enumeration, Counts) {
  const auto s = space({});
  // S: subsets of G\{1} of size <= 2; T: subsets of size 1..2.
  EXPECT_EQ(candidate_count(2, s), 2u * 2u * 3u * 3u);
  EXPECT_EQ(candidate_count(3, s), 4u * 4u * 6u * 6u);
  EXPECT_EQ(candidate_count(4, s), 7u * 7u * 10u * 10u);
  EXPECT_EQ(candidate_count(6, s), 16u * 16u * 21u * 21u);
  EXPECT_EQ(enumerate_group(make_cyclic(4), s).size(), 4900u);
}

TEST(Enumeration, OrderAndShape) {
  const auto all = enumerate_group(make_cyclic(3), space({}));
  ASSERT_EQ(all.size(), 576u);
  EXPECT_EQ(key(all.front()), key(make_params(make_cyclic(3), {}, {}, {0}, {0})));
  EXPECT_EQ(key(all[1]), key(make_params(make_cyclic(3), {}, {}, {0}, {1})));
  std::set<std::string> seen;
  for (const auto& p : all) {
    EXPECT_FALSE(p.s0.contains(kIdentity));
    EXPECT_FALSE(p.s1.contains(kIdentity));
    EXPECT_LE(p.s0.size(), 2u);
    EXPECT_GE(p.t0.size(), 1u);
    EXPECT_LE(p.t1.size(), 2u);
    seen.insert(key(p));
  }
  EXPECT_EQ(seen.size(), all.size());
}

TEST(Enumeration, SamplingIsSeededAndWithoutReplacement) {
  auto s = space({});
  s.sample_limit = 300;
  s.seed = 2026;
  const Group g = make_cyclic(5);
  const auto a = enumerate_group(g, s);
  const auto b = enumerate_group(g, s);
  ASSERT_EQ(a.size(), 300u);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(key(a[i]), key(b[i]));
    seen.insert(key(a[i]));
  }
  EXPECT_EQ(seen.size(), 300u);
  s.seed = 2027;
  const auto c = enumerate_group(g, s);
  std::size_t same = 0;
  for (std::size_t i = 0; i < c.size(); ++i) same += key(a[i]) == key(c[i]);
  EXPECT_LT(same, 300u);
  // Below the limit nothing is sampled.
  s.sample_limit = 100000;
  EXPECT_EQ(enumerate_group(g, s).size(), candidate_count(5, s));
}

TEST(Crosscheck, EmptySpace) {
  const auto r = run_crosscheck(space({}));
  EXPECT_EQ(r.instances_total, 0u);
  EXPECT_TRUE(r.ok());
  const Json doc = crosscheck_document(space({}), r);
  EXPECT_EQ(doc["instances_total"], 0);
  EXPECT_TRUE(doc["mismatches"].empty());
}

TEST(Crosscheck, BelowDeltaInstance) {
  auto s = space({});
  s.instances.push_back(make_params(make_cyclic(4), {2}, {2}, {0, 1}, {0, 2}));
  const auto r = run_crosscheck(s);
  EXPECT_EQ(r.instances_total, 1u);
  EXPECT_EQ(r.not_max_lambda_instances, 1u);
  EXPECT_EQ(r.max_lambda_conditions.at("2"), 1u);
  EXPECT_EQ(r.gamma_labels.at("2 / 4'"), 1u);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.agreements(predicate::max_lambda), 1u);
}

TEST(Crosscheck, NotStrongInstancesAreCounted) {
  auto s = space({});
  s.instances.push_back(make_params(make_cyclic(2), {}, {}, {0}, {0}));
  const auto r = run_crosscheck(s);
  EXPECT_EQ(r.instances_not_strong, 1u);
  EXPECT_EQ(r.instances_strong, 0u);
}

TEST(Crosscheck, Z2AndZ3AgreeEverywhere) {
  const auto r = run_crosscheck(space({"Z2", "Z3"}));
  EXPECT_EQ(r.instances_total, 36u + 576u);
  EXPECT_TRUE(r.ok());
  for (const auto& [name, t] : r.tallies) EXPECT_EQ(t.checked, t.agreements) << name;
  EXPECT_GT(r.checked(predicate::super_lambda), 0u);
  EXPECT_GT(r.literal_reading_disagreements, 0u);
}

TEST(Crosscheck, ThreadCountDoesNotChangeTheDocument) {
  auto s = space({"Z3"});
  const std::string one = crosscheck_document(s, run_crosscheck(s)).dump();
  s.threads = 4;
  const std::string four = crosscheck_document(s, run_crosscheck(s)).dump();
  s.threads = 1;
  EXPECT_EQ(one, crosscheck_document(s, run_crosscheck(s)).dump());
  // The space echo differs only in the thread count, which is not recorded.
  EXPECT_EQ(one, four);
}

TEST(Report, ParamsRoundTrip) {
  const auto p = make_params(parse_group_spec("S3"), {1}, {2, 3}, {0}, {4, 5});
  const Json j = params_to_json(p);
  const auto q = params_from_json(j);
  EXPECT_EQ(q.group, p.group);
  EXPECT_EQ(key(q), key(p));
  Json t = j;
  t.erase("group");
  t["table"] = p.group.table();
  EXPECT_EQ(params_from_json(t).group, p.group);
}

TEST(Report, ParamsErrors) {
  auto kind_of = [](const Json& j) {
    try {
      params_from_json(j);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::validation;  // not thrown
  };
  EXPECT_EQ(kind_of(Json::array()), ErrorKind::parse);
  EXPECT_EQ(kind_of(Json{{"s0", Json::array()}}), ErrorKind::parse);
  EXPECT_EQ(kind_of(Json::parse(R"({"group":"Z3","s0":"x","s1":[],"t0":[0],"t1":[0]})")),
            ErrorKind::parse);
  EXPECT_EQ(kind_of(Json::parse(R"({"group":"Z3","s0":[0],"s1":[],"t0":[0],"t1":[0]})")),
            ErrorKind::invalid_input);
}

TEST(Report, GraphRoundTrip) {
  const auto p = make_params(make_cyclic(4), {2}, {1, 3}, {0}, {0});
  const Digraph x = build_mixed(p);
  const Json doc = graph_document(p, x);
  const Digraph y = graph_from_json(Json::parse(doc.dump()));
  EXPECT_EQ(x, y);
  EXPECT_EQ(x.labels(), y.labels());
  EXPECT_EQ(doc.dump(), graph_document(p, y).dump());
  EXPECT_THROW(graph_from_json(Json::parse(R"({"vertices":[{"id":1}],"arcs":[]})")), Error);
}

TEST(Report, AnalysisDocumentIsDeterministic) {
  const auto p = make_params(make_cyclic(4), {2}, {2}, {0, 1}, {0, 2});
  const std::string a = analysis_document(p, analyze_instance(p)).dump();
  const std::string b = analysis_document(p, analyze_instance(p)).dump();
  EXPECT_EQ(a, b);
  const Json j = Json::parse(a);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["connectivity"]["lambda"], 2);
  EXPECT_EQ(j["gamma"]["positive"]["label"], "2");
}

TEST(Report, SpaceRoundTrip) {
  auto s = space({"Z2", "S3"});
  s.sample_limit = 10;
  s.seed = 7;
  s.instances.push_back(make_params(make_cyclic(2), {1}, {1}, {0}, {0}));
  const auto t = space_from_json(Json::parse(space_to_json(s).dump()));
  EXPECT_EQ(t.groups, s.groups);
  EXPECT_EQ(t.sample_limit, s.sample_limit);
  EXPECT_EQ(t.seed, s.seed);
  ASSERT_EQ(t.instances.size(), 1u);
  EXPECT_EQ(key(t.instances[0]), key(s.instances[0]));
  EXPECT_EQ(space_to_json(t).dump(), space_to_json(s).dump());
}
