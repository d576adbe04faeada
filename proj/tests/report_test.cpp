#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace blobtilt;

TEST_CASE("check report JSON carries no timing") {
    CheckReport r{"name", "p=1", CheckStatus::pass, "2", "2", "recursion", 3.5};
    auto j = r.to_json();
    CHECK(j["name"] == "name");
    CHECK(j["status"] == "pass");
    CHECK(j["expected"] == "2");
    CHECK(j["source"] == "recursion");
    CHECK_FALSE(j.contains("wall_ms"));
}

TEST_CASE("summary counts statuses") {
    std::vector<CheckReport> checks;
    checks.push_back({"a", "", CheckStatus::pass, "", "", "", 0});
    checks.push_back({"b", "", CheckStatus::fail, "", "", "", 0});
    checks.push_back({"c", "", CheckStatus::report_only, "", "", "", 0});
    checks.push_back({"d", "", CheckStatus::pass, "", "", "", 0});
    auto j = reports_to_json(nlohmann::json{{"seed", 1}}, checks);
    CHECK(j["summary"]["pass"] == 2);
    CHECK(j["summary"]["fail"] == 1);
    CHECK(j["summary"]["report_only"] == 1);
    CHECK(j["checks"].size() == 4);
    CHECK(j["config"]["seed"] == 1);
}
