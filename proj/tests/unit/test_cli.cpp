#include <catch2/catch_amalgamated.hpp>

#include "superq/cli.hpp"

#include <fstream>

using namespace superq;
using namespace superq::cli;

namespace {
Json load(const std::string& name) {
    std::ifstream in(std::string(SUPERQ_GOLDEN_DIR) + "/" + name);
    REQUIRE(in);
    return Json::parse(in);
}

Config golden_config(const Json& g) {
    Config c;
    c.seed = g.at("oracle_seed").get<std::uint64_t>();
    return c;
}
}  // namespace

TEST_CASE("golden: V (x) V dual at m = 2") {
    auto g = load("v_vdual_m2.json");
    auto r = cmd_tensor(golden_config(g), "1,0/0", "0,0/-1", "all");
    CHECK(r.exit_code == 0);
    CHECK(r.json == g);
    // the unit splits off
    bool unit = false;
    for (const auto& s : g["oracle_full"]) unit = unit || s["summand"]["label"] == "irr@-1,block=0";
    CHECK(unit);
}

TEST_CASE("golden: bottom (x) roof of equal length at m = 3") {
    auto g = load("bottom_roof_m3.json");
    auto r = cmd_tensor(golden_config(g), "bottom@-1:3,block=0,2", "roof@-1:3,block=0,2", "all");
    CHECK(r.exit_code == 0);
    CHECK(r.json == g);
    for (const auto& s : g["methods"]["direct"]["summands"]) CHECK(s["summand"]["kind"] == "irr");
}

TEST_CASE("diagram command") {
    Config c;
    c.m = 2;
    auto r = cmd_diagram(c, "0,0/0");
    CHECK(r.json["diagram"] == Json::parse(R"([[-1,"v"],[0,"x"]])"));
    r = cmd_diagram(c, "1,1/-1");
    CHECK(r.json["diagram"] == Json::parse(R"([[0,"v"],[1,"x"]])"));
    CHECK(r.json["schema"] == 1);
    CHECK_THROWS_AS(cmd_diagram(c, "1,x/0"), UsageError);
    CHECK_THROWS_AS(cmd_diagram(c, "1,0,0/0"), UsageError);
}

TEST_CASE("tensor command edge cases") {
    Config c;
    auto r = cmd_tensor(c, "irr@-1,block=0", "irr@-1,block=0", "all");
    CHECK(r.exit_code == 0);
    CHECK(r.json["methods"]["direct"]["summands"].size() == 1);
    CHECK(r.json["methods"]["direct"]["summands"][0]["summand"]["label"] == "irr@-1,block=0");
    CHECK_THROWS_AS(cmd_tensor(c, "irr@-1,block=0", "irr@-1,block=0,2", "direct"), UsageError);
    CHECK_THROWS_AS(cmd_tensor(c, "irr@-1,block=0", "irr@-1,block=0", "magic"), UsageError);
    // sl(2|1): Z^3(1) (x) Z^3(1) = Z^5(2), three ways
    c.group = Group::sl;
    r = cmd_tensor(c, "roof@-3:0,block=-1", "roof@-3:0,block=-1", "all");
    CHECK(r.exit_code == 0);
    CHECK(r.json["methods"]["oracle"]["sl21"][0]["name"]["name"] == "Z^5(2)");
}

TEST_CASE("parity normalization makes superdimensions positive") {
    Config c;
    c.normalize_parity = true;
    auto r = cmd_tensor(c, "irr@1,block=0", "irr@-1,block=0", "direct");
    for (const auto& s : r.json["methods"]["direct"]["summands"]) {
        auto x = parse_label(s["summand"]["label"].get<std::string>());
        CHECK(superdimension(x) > 0);
    }
}

TEST_CASE("check command rejects unknown suites") {
    CHECK_THROWS_AS(cmd_check(Config{}, "nope", ""), UsageError);
    auto r = cmd_check(Config{}, "sl21-rules", "");
    CHECK(r.exit_code == 0);
    CHECK(r.json["passed"] == true);
}
