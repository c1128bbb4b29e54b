#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "paulikit/io.hpp"
#include "paulikit/measurement.hpp"

using namespace paulikit;
using nlohmann::json;

TEST_CASE("format_double renders significant digits") {
    CHECK(io::format_double(0.5, 17) == "0.5");
    CHECK(io::format_double(0.1, 17) == "0.10000000000000001");
    CHECK(io::format_double(1.0 / 3.0, 6) == "0.333333");
    // 17 significant digits always reparse to the identical double.
    for (const double v : {2.5e-101, 1.0 / 7.0, 6.02214076e23, -0.3333333333333333}) {
        CHECK(std::stod(io::format_double(v, 17)) == v);
    }
}

TEST_CASE("dump_json is canonical and round-trip stable") {
    json j;
    j["b"] = 0.1;
    j["a"] = json::array({1, true, nullptr, "x\"y"});
    j["c"] = json{{"nested", -0.0}};
    const std::string s = io::dump_json(j);
    // Keys in lexicographic order, floats at 17 significant digits, and both
    // zeros collapsed to "0" so re-parsing cannot change the bytes.
    CHECK(s == R"({"a":[1,true,null,"x\"y"],"b":0.10000000000000001,"c":{"nested":0}})");
    // parse . dump is the identity on canonical output.
    CHECK(io::dump_json(json::parse(s)) == s);
    // The 17-digit rendering reparses to the identical double.
    CHECK(json::parse(io::dump_json(json(0.1))).get<double>() == 0.1);
    CHECK(json::parse(io::dump_json(json(1.0 / 3.0))).get<double>() == 1.0 / 3.0);
}

TEST_CASE("parse_vec3 accepts decimal component lists") {
    CHECK(io::parse_vec3("1,2,3") == Vec3{1.0, 2.0, 3.0});
    CHECK(io::parse_vec3(" 1 , 2e-1 , -3.5 ") == Vec3{1.0, 0.2, -3.5});
    CHECK(io::parse_vec3("0.6,0.8,0") == Vec3{0.6, 0.8, 0.0});

    CHECK_THROWS_WITH_AS((void)io::parse_vec3("1,2"), doctest::Contains("three components"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)io::parse_vec3("1,2,3,4"), doctest::Contains("three components"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)io::parse_vec3("a,2,3"), doctest::Contains("x component"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)io::parse_vec3("1,,3"), doctest::Contains("y component"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)io::parse_vec3("1,2,3 junk"), doctest::Contains("z component"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)io::parse_vec3("1,2,inf"), doctest::Contains("finite"),
                         std::invalid_argument);
}

TEST_CASE("parse_direction is strict unless normalizing") {
    CHECK_THROWS_AS((void)io::parse_direction("2,0,0", false), std::invalid_argument);
    CHECK(io::parse_direction("2,0,0", true) == BlochDirection::from_unit(1.0, 0.0, 0.0));
    CHECK(io::parse_direction("0.6,0.8,0", false) == BlochDirection::from_unit(0.6, 0.8, 0.0));
}

TEST_CASE("read_directions skips comments and reports line numbers") {
    std::istringstream in("# header\n1,0,0\n\n  \t\n0,0,1\n# done\n");
    const auto dirs = io::read_directions(in, false);
    REQUIRE(dirs.size() == 2);
    CHECK(dirs[0] == BlochDirection::from_unit(1.0, 0.0, 0.0));
    CHECK(dirs[1] == BlochDirection::from_unit(0.0, 0.0, 1.0));

    std::istringstream crlf("1,0,0\r\n0,1,0\r\n");
    CHECK(io::read_directions(crlf, false).size() == 2);

    std::istringstream bad("1,0,0\n# c\n\nnot a vector\n");
    CHECK_THROWS_WITH_AS((void)io::read_directions(bad, false), doctest::Contains("line 4"),
                         std::invalid_argument);

    CHECK_THROWS_WITH_AS((void)io::read_directions_file("/nonexistent/vectors.txt", false),
                         doctest::Contains("cannot open"), std::invalid_argument);
}

TEST_CASE("report documents carry the documented shapes") {
    const BlochDirection e1 = BlochDirection::from_unit(1.0, 0.0, 0.0);
    const BlochDirection e3 = BlochDirection::from_unit(0.0, 0.0, 1.0);

    const json pair = io::pair_report_json(check_pair_exhaustive(e1, e3));
    CHECK(pair["schema"] == 1);
    CHECK(pair["command"] == "check-pair");
    CHECK(pair["alpha"] == json::array({1.0, 0.0, 0.0}));
    CHECK(pair["verdict"] == true);
    CHECK(pair["entries"].size() == 16);
    CHECK(pair["entries"][0]["s1"] == json::array());
    CHECK(pair["entries"][15]["s2"] == json::array({-1, 1}));
    CHECK(pair["entries"][15]["target"] == 1.0);

    const json good = io::set_report_json(check_set(std::vector<BlochDirection>{e1, e3}));
    CHECK(good["command"] == "check-set");
    CHECK(good["first_failure"].is_null());
    CHECK(good["pairs"].size() == 1);
    const json bad = io::set_report_json(check_set(std::vector<BlochDirection>{e1, e3, e1}));
    CHECK(bad["verdict"] == false);
    CHECK(bad["first_failure"]["i"] == 0);
    CHECK(bad["first_failure"]["j"] == 2);

    const json pv = io::pvm_json(e3);
    CHECK(pv["command"] == "pvm");
    CHECK(pv["e_plus"][0][0] == json::array({1.0, 0.0}));
    CHECK(pv["e_plus"][1][1] == json::array({0.0, 0.0}));
    for (const auto& [key, value] : pv["residuals"].items()) {
        INFO(key);
        CHECK(value.get<double>() <= 1e-12);
    }

    const json tr = io::triple_json(5, orthonormal_triple(std::nullopt, 5));
    CHECK(tr["command"] == "triple");
    CHECK(tr["seed"] == 5);
    CHECK(tr["directions"].size() == 3);
    CHECK(tr["gram_residual"].get<double>() <= 1e-12);

    const json sim = io::simulate_json(e1, e3, 7, simulate(e1, e3, 1000, 7));
    CHECK(sim["command"] == "simulate");
    CHECK(sim["shots"] == 1000);
    CHECK(sim["counts"].size() == 4);
    std::uint64_t total = 0;
    for (const char* cell : {"--", "-+", "+-", "++"}) {
        total += sim["counts"][cell].get<std::uint64_t>();
    }
    CHECK(total == 1000);
    CHECK(sim["exact"]["conditional"]["++"].get<double>() == doctest::Approx(0.5));
    CHECK(sim["empirical"]["marginal"].size() == 2);
}

TEST_CASE("sweep csv has a header and 17-digit rows") {
    const auto rows = sweep_rows(4);
    const std::string csv = io::sweep_csv(rows);
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "theta,inner_product,max_deviation");
    REQUIRE(std::getline(in, line));
    CHECK(line == "0,1,0.25");
    int rows_seen = 1;
    while (std::getline(in, line)) ++rows_seen;
    CHECK(rows_seen == 5);
}
