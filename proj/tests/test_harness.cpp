#include <gtest/gtest.h>

#include <amalg/harness.hpp>

using namespace amalg;

TEST(Harness, ConfigValidation)
{
  Config cfg;
  cfg.tolerance = 0;
  EXPECT_THROW(cfg.validate(), Error);
  cfg.tolerance = 1e-9;
  cfg.samples = 0;
  EXPECT_THROW(cfg.validate(), Error);
  try {
    run_suite("nope", Config{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_config);
  }
}

TEST(Harness, OrbitsOnTwoPrimes)
{
  Config cfg;
  cfg.primes = PrimeSeq({2, 3});
  auto r = run_suite("orbits", cfg);
  ASSERT_EQ(r.checks.size(), 4u);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checks[2].result["blocks"], 4);
  EXPECT_EQ(r.checks[3].result["dimension"], 4);
}

TEST(Harness, SizeGuardSkipsWithoutFailing)
{
  Config cfg;
  cfg.size_guard = 1000;
  auto r = run_suite("orbits", cfg);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.count(Outcome::skipped), 2u);
  EXPECT_EQ(r.checks.back().outcome, Outcome::skipped);
  EXPECT_FALSE(r.checks.back().reason.empty());
}

TEST(Harness, XiAtOneLevel)
{
  Config cfg;
  cfg.level = 1;
  cfg.radius = 3;
  auto r = run_suite("xi", cfg);
  ASSERT_EQ(r.checks.size(), 4u);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checks[1].parameters["n"], 2);
  EXPECT_EQ(r.checks[1].result["violations"], 0);
}

TEST(Harness, MissingIndicesAreSkipped)
{
  Config cfg;
  cfg.primes = PrimeSeq({2, 3});
  auto r = run_suite("bound", cfg);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.count(Outcome::skipped), 2u);
}

TEST(Harness, FailuresAreReported)
{
  Config cfg;
  cfg.tolerance = 1e-300;
  auto r = run_suite("fourier", cfg);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.to_json()["summary"]["outcome"], "fail");
}

TEST(Harness, DeterministicReports)
{
  Config cfg;
  cfg.samples = 200;
  cfg.seed = 42;
  auto a = run_suite("disjoint", cfg).to_json();
  auto b = run_suite("disjoint", cfg).to_json();
  EXPECT_EQ(without_timing(a), without_timing(b));
  EXPECT_EQ(without_timing(a).dump(), without_timing(b).dump());

  std::vector<std::string> keys;
  for (const auto& [k, v] : a.items())
    keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"suite", "config", "summary", "checks", "seconds"}));
  EXPECT_FALSE(without_timing(a)["checks"][0].contains("seconds"));
}
