#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace horikawa;

namespace {

void expect_round_trip(const Report& r) {
  const std::string text = to_json_text(r);
  const Report back = report_from_json_text(text);
  EXPECT_EQ(back, r) << text;
  EXPECT_EQ(to_json_text(back), text);
}

}  // namespace

TEST(ReportJson, SmallIntegersBecomeNumbers) {
  Report r;
  r.command = "x";
  r.section("s").add("a", "42", "src").add("b", "-7", "").add("c", "1/3", "").add("d", "007", "").add("e", "-0", "");
  const auto j = nlohmann::json::parse(to_json_text(r));
  const auto& fields = j["sections"][0]["fields"];
  EXPECT_TRUE(fields[0]["value"].is_number_integer());
  EXPECT_TRUE(fields[1]["value"].is_number_integer());
  EXPECT_TRUE(fields[2]["value"].is_string());
  EXPECT_TRUE(fields[3]["value"].is_string());
  EXPECT_TRUE(fields[4]["value"].is_string());
  expect_round_trip(r);
}

TEST(ReportJson, LargeIntegersStayDecimalStrings) {
  Report r;
  r.command = "big";
  const Integer huge = Integer("9223372036854775807") + 1;
  r.section("s").add("edge", "9223372036854775807", "").add("over", huge.str(), "").add("under", "-9223372036854775808", "");
  const auto j = nlohmann::json::parse(to_json_text(r));
  const auto& fields = j["sections"][0]["fields"];
  EXPECT_TRUE(fields[0]["value"].is_number_integer());
  EXPECT_TRUE(fields[1]["value"].is_string());
  EXPECT_EQ(fields[1]["value"].get<std::string>(), "9223372036854775808");
  EXPECT_TRUE(fields[2]["value"].is_number_integer());
  expect_round_trip(r);
}

TEST(ReportJson, EveryCommandRoundTrips) {
  expect_round_trip(cmd_classify(8, 7));
  expect_round_trip(cmd_classify(0, 1));
  expect_round_trip(cmd_classify(Integer("100000000000000000000000"), Integer("50000000000000000000003")));
  for (int chi = 3; chi <= 12; ++chi) {
    expect_round_trip(cmd_construct({"stable", chi, std::nullopt, std::nullopt, {}}));
    if (chi >= 4) expect_round_trip(cmd_construct({"component-I", chi, std::nullopt, std::nullopt, {}}));
  }
  for (int k = 1; k <= 5; ++k) expect_round_trip(cmd_construct({"component-II", std::nullopt, k, std::nullopt, {}}));
  expect_round_trip(cmd_construct({"stable", 9, std::nullopt, 3, {}}));
  expect_round_trip(cmd_enumerate(1, 30));
  expect_round_trip(cmd_enumerate(5, 4));
  expect_round_trip(cmd_verify_paper({12, 3, std::nullopt}));
  expect_round_trip(cmd_verify_paper({12, 3, Fault::parse("stable:5:D2:0:neg")}));
}

TEST(ReportText, ShowsSourcesAndChecks) {
  const std::string text = to_text(cmd_verify_paper({8, 2, std::nullopt}));
  EXPECT_NE(text.find("PASS I.k-squared"), std::string::npos);
  const std::string c = to_text(cmd_construct({"component-I", 9, std::nullopt, std::nullopt, {}}));
  EXPECT_NE(c.find("<- pick_parameters"), std::string::npos);
}
