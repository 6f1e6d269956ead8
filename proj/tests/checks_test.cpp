#include <gtest/gtest.h>

#include "leray/checks.hpp"

using namespace leray;

TEST(Checks, RegistryNamesEveryCheck) {
  const auto& r = checks::registry();
  for (const char* name : {"alexander", "link_deletion", "shift", "matroid", "concentration", "euler", "nonvanishing", "rtch", "helly"})
    EXPECT_TRUE(r.count(name)) << name;
}

TEST(Checks, SmallRunsPass) {
  for (const auto& [name, fn] : checks::registry()) {
    const auto out = checks::run_suite(fn, 99, 6, 2);
    ASSERT_EQ(out.size(), 6u);
    for (std::size_t i = 0; i < out.size(); ++i) {
      EXPECT_EQ(out[i].index, i);
      EXPECT_TRUE(out[i].passed) << name << " #" << i << ": " << out[i].detail;
    }
  }
}

TEST(Checks, ReportIndependentOfThreadCount) {
  const auto& fn = checks::registry().at("helly");
  const auto a = checks::run_suite(fn, 7, 20, 1);
  const auto b = checks::run_suite(fn, 7, 20, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].passed, b[i].passed);
    EXPECT_EQ(a[i].detail, b[i].detail);
  }
}

TEST(Checks, ExceptionsBecomeFailures) {
  const auto out = checks::run_suite(
      [](std::uint64_t, std::size_t i) -> checks::Outcome {
        if (i == 1) throw InternalError("boom");
        return {i, true, {}};
      },
      0, 3, 1);
  EXPECT_TRUE(out[0].passed);
  EXPECT_FALSE(out[1].passed);
  EXPECT_NE(out[1].detail.find("boom"), std::string::npos);
}
