#include "mdim/suites.hpp"
#include "test_support.hpp"

#include <sstream>

using namespace mdim;

TEST_CASE("every listed suite is registered")
{
    for (auto name : {"qn", "knkm", "cycles", "complete-cycle", "path-cycle", "trees", "sandwich", "sxs", "projections",
                      "big-clique", "graph-cycle", "comb", "gnk", "mastermind", "weighing"})
        CHECK(std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end());
    CHECK_ERROR_CODE(run_suite("nope"), ErrorCode::invalid_params);
}

TEST_CASE("small suite runs pass and are reproducible")
{
    struct Case {
        const char* name;
        int max_size;
    };
    for (auto c : {Case{"qn", 4}, Case{"knkm", 4}, Case{"trees", 7}, Case{"sandwich", 5}, Case{"sxs", 5},
                   Case{"projections", 4}, Case{"graph-cycle", 4}, Case{"gnk", 0}, Case{"mastermind", 60},
                   Case{"weighing", 3}, Case{"psi-bounds", 5}, Case{"product-two", 4}}) {
        CAPTURE(c.name);
        SuiteOptions options;
        options.max_size = c.max_size;
        options.seed = 7;
        auto first = run_suite(c.name, options);
        CHECK(first.ok());
        CHECK(first.count(CheckStatus::skipped) == 0);
        CHECK_FALSE(first.lines.empty());
        auto second = run_suite(c.name, options);
        CHECK(report_json(first) == report_json(second));
    }
}

TEST_CASE("report formats")
{
    SuiteOptions options;
    options.max_size = 3;
    auto report = run_suite("weighing", options);
    std::ostringstream text;
    write_report_text(text, report);
    CHECK(text.str().find("weighing n=2 ") != std::string::npos);
    CHECK(text.str().find("# suite weighing: 4 pass, 0 fail, 0 skipped") != std::string::npos);
    auto json = report_json(report);
    CHECK(json.rfind("{\"suite\":\"weighing\",\"max_size\":3,\"seed\":1,\"lines\":[", 0) == 0);
    CHECK(json.find("\"pass\":4,\"fail\":0,\"skipped\":0}") != std::string::npos);
}
