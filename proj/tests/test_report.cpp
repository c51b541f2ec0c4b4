#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pmzv/suites.hpp"

using namespace pmzv;

TEST_CASE("empty report") {
    CHECK(report_json({}).dump() == "{}");
    CHECK(report_text({}) == "no checks run\n");
}

TEST_CASE("passing and mixed reports") {
    Report ok{"demo", {{"one", true, 9, ""}}, 1.5};
    json j = report_json({ok});
    CHECK(j["status"] == "pass");
    CHECK(j["suites"][0]["checks"][0]["cert"] == 9);
    CHECK_FALSE(j.contains("first_failure"));
    CHECK(j.dump().find("1.5") == std::string::npos);  // timings stay out of the JSON

    Report bad{"demo", {{"one", true, -1, ""}, {"two", false, 3, "x"}, {"three", false, -1, ""}}, 0};
    CHECK_FALSE(bad.pass());
    CHECK(bad.first_failure() == "demo/two");
    json k = report_json({ok, bad});
    CHECK(k["status"] == "fail");
    CHECK(k["first_failure"] == "demo/two");
    CHECK_FALSE(k["suites"][1]["checks"][0].contains("cert"));
    CHECK(report_text({bad}).find("FAIL two [cert 3]  x") != std::string::npos);
}

TEST_CASE("suites are deterministic for a fixed seed") {
    SuiteConfig c;
    c.count = 4;
    CHECK(report_json({suite_group(c)}).dump() == report_json({suite_group(c)}).dump());
    CHECK(run_suite("fitting", c).pass());
    CHECK_THROWS(run_suite("nosuch", c));
}
