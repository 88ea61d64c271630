#include "doctest.h"

#include "intdef/config.hpp"
#include "intdef/expand.hpp"

#include <fstream>
#include <sstream>

using namespace intdef;

TEST_SUITE("config") {

TEST_CASE("serialize(parse(text)) is idempotent") {
    std::string text =
        "# sample\n"
        "scenario = sg-kink\n"
        "scenario.alpha = 1.5\n"
        "orders = 3\n"
        "grid.h = 0.01\n"
        "times.steps = 10\n"
        "lambda = 0.7, 1.3+0.2i\n"
        "defect.sign = -1\n"
        "output.formats = csv, json\n";
    RunConfig c = parseConfig(text);
    std::string once = serializeConfig(c);
    CHECK(serializeConfig(parseConfig(once)) == once);
    CHECK(c.ordersOr(0) == 3);
    REQUIRE(c.lambdas);
    CHECK((*c.lambdas)[1] == cplx{1.3, 0.2});
}

TEST_CASE("config errors") {
    CHECK_THROWS_AS(parseConfig("bogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(parseConfig("orders = x\n"), ConfigError);
    CHECK_THROWS_AS(parseConfig("no equals sign\n"), ConfigError);
    CHECK_THROWS_AS(scenarioFromConfig(parseConfig("scenario = nope\n")), ConfigError);
    CHECK_THROWS_AS(parseDefectClass("IV"), UnknownClass);
}

TEST_CASE("complex literals") {
    CHECK(parseComplex("2i") == cplx{0, 2});
    CHECK(parseComplex("-i") == cplx{0, -1});
    CHECK(parseComplex("1.5-0.25i") == cplx{1.5, -0.25});
    CHECK(parseComplex("3") == cplx{3, 0});
    CHECK(parseComplex(formatComplex(cplx{0.1, -7})) == cplx{0.1, -7});
}

TEST_CASE("expand dump matches the golden file") {
    for (auto [model, file, N] : {std::tuple{"nls-focusing", "expand_nls_focusing.txt", 3},
                                  std::tuple{"kdv-plus", "expand_kdv_plus.txt", 3},
                                  std::tuple{"dnls", "expand_dnls.txt", 4}}) {
        CAPTURE(model);
        std::ifstream in(std::string(INTDEF_TEST_DATA) + "/golden/" + file);
        REQUIRE(in);
        std::stringstream ss;
        ss << in.rdbuf();
        CHECK(expandText(modelById(model), N, 1) == ss.str());
    }
    CHECK(expandText(modelById("dnls"), 0, 1).empty());
}

}
