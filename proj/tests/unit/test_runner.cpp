#include <gtest/gtest.h>

#include <cstdlib>
#include <nlohmann/json.hpp>
#include <set>
#include <sys/wait.h>

#include "lcklab/runner.hpp"
#include "lcklab/suites.hpp"

using namespace lcklab;
using nlohmann::json;

namespace {

RunConfig config(ModelKind m, std::vector<std::string> suites, int points = 20) {
  RunConfig c;
  c.model = m;
  c.suites = std::move(suites);
  c.points = points;
  return c;
}

}  // namespace

TEST(Catalogue, AnchorLookup) {
  ASSERT_NE(find_suite("thm1-totally-geodesic"), nullptr);
  EXPECT_EQ(find_suite("thm1-totally-geodesic")->anchor, "Theorem 1");
  EXPECT_EQ(find_suite("eq8-transversal")->anchor, "Eq. (8)");
  EXPECT_EQ(find_suite("lemma7-leaf-radius")->anchor, "Lemma 7");
  EXPECT_EQ(find_suite("no-such-suite"), nullptr);
  const std::string text = list_suites_text();
  for (const char* key : {"prop1-lee-field", "eq5-nv-invariance", "thm4-integrability", "eq18-mean-curvature",
                          "thm5-leaf-space", "cayley-boundary", "submersion-fibre-invariance",
                          "retraction-monotonicity", "torus-isometry", "gab-invariance", "levi-signature"})
    EXPECT_NE(text.find(key), std::string::npos) << key;
}

TEST(Catalogue, NamesAreUnique) {
  std::set<std::string> names;
  for (const SuiteInfo& s : suite_catalogue()) EXPECT_TRUE(names.insert(s.name).second) << s.name;
}

TEST(Run, HopfParallelLee) {
  const VerificationReport r = run(config(ModelKind::Hopf, {"parallel-lee"}, 100));
  ASSERT_EQ(r.suites.size(), 1u);
  EXPECT_TRUE(r.suites[0].pass);
  EXPECT_LT(r.suites[0].max_residual, 1e-6);
}

TEST(Run, TricerriParallelLeeFailsButNonparallelWitnessPasses) {
  RunConfig c = config(ModelKind::Tricerri, {"parallel-lee", "nonparallel-lee"});
  c.n = 1;
  const VerificationReport r = run(c);
  EXPECT_FALSE(r.suites[0].pass);
  EXPECT_TRUE(r.suites[1].pass);
  EXPECT_FALSE(r.pass());
}

TEST(Run, SyntheticIsotropicPair) {
  RunConfig c = config(ModelKind::SyntheticNull, {"lemma6-pair"}, 1000);
  c.n = 3;
  c.s = 1;
  EXPECT_TRUE(run(c).pass());
}

TEST(Run, AllExpandsPerModel) {
  const auto hopf = resolve_suites(config(ModelKind::Hopf, {"all"}));
  EXPECT_NE(std::find(hopf.begin(), hopf.end(), "thm5-leaf-space"), hopf.end());
  EXPECT_EQ(std::find(hopf.begin(), hopf.end(), "gab-invariance"), hopf.end());
  RunConfig sn = config(ModelKind::SyntheticNull, {"all"});
  sn.n = 2;
  const auto small = resolve_suites(sn);
  EXPECT_EQ(std::find(small.begin(), small.end(), "lemma6-pair"), small.end());
  sn.n = 3;
  const auto big = resolve_suites(sn);
  EXPECT_NE(std::find(big.begin(), big.end(), "lemma6-pair"), big.end());
}

TEST(Run, UsageErrors) {
  EXPECT_THROW(resolve_suites(config(ModelKind::Hopf, {"bogus"})), UsageError);
  EXPECT_THROW(resolve_suites(config(ModelKind::Flat, {"thm5-leaf-space"})), UsageError);
  RunConfig bad = config(ModelKind::Hopf, {"all"});
  bad.s = 2;
  EXPECT_THROW(validate(bad), UsageError);
  bad = config(ModelKind::Hopf, {"all"});
  bad.lambda = 1.0;
  EXPECT_THROW(validate(bad), UsageError);
  bad = config(ModelKind::Hopf, {"all"});
  bad.points = 0;
  EXPECT_THROW(validate(bad), UsageError);
}

TEST(Report, JsonSchemaAndDeterminism) {
  RunConfig c = config(ModelKind::Hopf, {"prop1-lee-field", "eq1-leaf-index"});
  c.threads = 4;
  const std::string a = to_json(run(c));
  c.threads = 1;
  const std::string b = to_json(run(c));
  EXPECT_EQ(a, b);
  const json j = json::parse(a);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["config"]["model"], "hopf");
  EXPECT_EQ(j["config"]["seed"], 1);
  ASSERT_EQ(j["suites"].size(), 2u);
  EXPECT_EQ(j["suites"][0]["name"], "prop1-lee-field");
  EXPECT_EQ(j["suites"][0]["points"], 20);
  EXPECT_TRUE(j["suites"][0]["pass"].get<bool>());
  EXPECT_TRUE(j["summary"]["pass"].get<bool>());
  EXPECT_FALSE(j.contains("wall_time_s"));
}

TEST(Report, SeedChangesResiduals) {
  RunConfig c = config(ModelKind::Hopf, {"christoffel-oracle"});
  const double a = run(c).suites[0].max_residual;
  c.seed = 2;
  EXPECT_NE(a, run(c).suites[0].max_residual);
}

TEST(Report, TimingAddsWallTime) {
  RunConfig c = config(ModelKind::Flat, {"chart-signature"}, 5);
  c.timing = true;
  EXPECT_TRUE(json::parse(to_json(run(c))).contains("wall_time_s"));
}

TEST(Report, Csv) {
  const std::string csv = to_csv(run(config(ModelKind::Flat, {"chart-signature"}, 5)));
  EXPECT_EQ(csv.rfind("name,anchor,points,max_residual,tolerance,pass,error\n", 0), 0u);
  EXPECT_NE(csv.find("chart-signature,"), std::string::npos);
}

TEST(Report, PointErrorsFailTheSuite) {
  // lemma6-pair needs real dimension 6.
  RunConfig c = config(ModelKind::SyntheticNull, {"lemma6-pair"}, 3);
  c.n = 2;
  const VerificationReport r = run(c);
  EXPECT_FALSE(r.suites[0].pass);
  EXPECT_NE(r.suites[0].error.find("point 0"), std::string::npos);
}

#ifdef LCKLAB_CLI_PATH
TEST(Cli, ExitCodes) {
  const std::string cli = LCKLAB_CLI_PATH;
  auto code = [&](const std::string& args) {
    const int st = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(st);
  };
  EXPECT_EQ(code("--model hopf --suites prop1-lee-field --points 5"), 0);
  EXPECT_EQ(code("--model tricerri --n 1 --suites parallel-lee --points 5"), 1);
  EXPECT_EQ(code("--model nowhere"), 2);
  EXPECT_EQ(code("--model hopf --suites bogus"), 2);
  EXPECT_EQ(code("--format xml"), 2);
  EXPECT_EQ(code("--list-suites"), 0);
}
#endif
