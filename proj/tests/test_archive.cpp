#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "helpers.hpp"
#include "possver/archive.hpp"
#include "possver/errors.hpp"
#include "possver/synthgen.hpp"
#include "possver/table.hpp"

using namespace possver;

TEST_CASE("archive round trip preserves values") {
    std::vector<VerificationPair> pairs{testutil::scenario_a(), testutil::scenario_b(),
                                        testutil::scenario_c()};
    std::stringstream buffer;
    write_archive(pairs, buffer);

    const auto back = read_archive(buffer, testutil::spc());
    REQUIRE(back.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(back[i].id == pairs[i].id);
        CHECK(back[i].observed == pairs[i].observed);
        for (std::size_t c = 0; c < 6; ++c)
            CHECK(std::fabs(back[i].forecast.pi()[c] - pairs[i].forecast.pi()[c]) < 1e-9);
    }
}

TEST_CASE("archive accepts labels or indices for obs") {
    std::stringstream in(R"({"id":"x","pi":[0.1,0,0,0,0.9,0],"obs":"MDT"}
{"id":"y","pi":[0.1,0,0,0,0.9,0],"obs":4}
)");
    const auto pairs = read_archive(in, testutil::spc());
    CHECK(pairs[0].observed == 4);
    CHECK(pairs[1].observed == 4);
}

TEST_CASE("archive rejects bad records with line numbers") {
    {
        std::stringstream in("{\"pi\":[0.1,0.2,0.3,0.4,0.5],\"obs\":0}\n");
        CHECK_THROWS_WITH_AS(read_archive(in, testutil::spc()),
                             "line 1: 'pi' has 5 values for K=6", ParseError);
    }
    {
        std::stringstream in(
            "{\"pi\":[0.1,0.2,0.3,0.4,0.5,0.6],\"obs\":0}\n"
            "not json at all\n");
        try {
            read_archive(in, testutil::spc());
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
        }
    }
    {
        std::stringstream in("{\"pi\":[0,0,0,0,0,0],\"obs\":0}\n");
        try {
            read_archive(in, testutil::spc());
            FAIL("expected RecordValidationError");
        } catch (const RecordValidationError& e) {
            CHECK(e.line == 1);
        }
    }
    {
        std::stringstream in("{\"pi\":[0.5,0,0,0,0,0],\"obs\":\"EXTREME\"}\n");
        CHECK_THROWS_AS(read_archive(in, testutil::spc()), RecordValidationError);
    }
    {
        std::stringstream empty("");
        CHECK_THROWS_AS(read_archive(empty, testutil::spc()), EmptySample);
    }
    CHECK_THROWS_AS(read_archive(std::filesystem::path{"/no/such/file"}, testutil::spc()),
                    IoError);
}

TEST_CASE("generated archives always parse back (format closure)") {
    SynthConfig config;
    config.n = 60;
    config.seed = 99;
    const auto sample = generate(config, testutil::spc());
    std::vector<VerificationPair> pairs;
    for (const auto& rec : sample.records) pairs.push_back(rec.pair);

    std::stringstream buffer;
    write_archive(pairs, buffer);
    const auto back = read_archive(buffer, testutil::spc());
    REQUIRE(back.size() == pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        CHECK(back[i].forecast.pi() == pairs[i].forecast.pi());  // exact round-trip
        CHECK(back[i].observed == pairs[i].observed);
    }
}

TEST_CASE("blank lines are skipped") {
    std::stringstream in("\n{\"id\":\"a\",\"pi\":[0.5,0,0,0,0,0],\"obs\":0}\n   \n");
    CHECK(read_archive(in, testutil::spc()).size() == 1);
}

TEST_CASE("table CSV: header, fixed decimals, empty cells for undefined") {
    Table t;
    t.columns = {"id", "value", "missing", "flag"};
    t.add_row({std::string("a"), 0.123456789, std::monostate{}, true});
    t.add_row({std::string("b"), -1.5, 2.0, false});

    std::stringstream out;
    write_table(t, OutputFormat::Csv, out);
    CHECK(out.str() ==
          "id,value,missing,flag\n"
          "a,0.123457,,true\n"
          "b,-1.500000,2.000000,false\n");
}

TEST_CASE("table JSON: nulls for undefined, values round-trip") {
    Table t;
    t.columns = {"name", "score"};
    t.add_row({std::string("x"), 0.2086206896551724});
    t.add_row({std::string("y"), std::monostate{}});

    std::stringstream out;
    write_table(t, OutputFormat::Json, out);

    const auto parsed = nlohmann::json::parse(out.str());
    REQUIRE(parsed.is_array());
    CHECK(parsed[0]["score"].get<double>() == doctest::Approx(0.2086206896551724).epsilon(1e-12));
    CHECK(parsed[1]["score"].is_null());
}

TEST_CASE("table schema width is enforced") {
    Table t;
    t.columns = {"a", "b"};
    CHECK_THROWS_AS(t.add_row({1.0}), ValidationError);
}

TEST_CASE("format names") {
    CHECK(parse_format("json") == OutputFormat::Json);
    CHECK(parse_format("csv") == OutputFormat::Csv);
    CHECK_THROWS_AS(parse_format("xml"), ValidationError);
}

TEST_CASE("universe file parsing") {
    const auto dir = std::filesystem::temp_directory_path() / "possver_test_universe";
    std::filesystem::create_directories(dir);
    const auto path = dir / "u.json";
    {
        std::ofstream out(path);
        out << R"({"categories":["LOW","MED","HI"],"climatology":[0.7,0.2,0.1]})";
    }
    const auto u = read_universe(path);
    CHECK(u->size() == 3);
    CHECK(u->index_of("MED") == 1);
    CHECK((*u->climatology())[2] == doctest::Approx(0.1));

    {
        std::ofstream out(path);
        out << R"({"categories":["ONLY"]})";
    }
    CHECK_THROWS_AS(read_universe(path), InvalidConfig);
    std::filesystem::remove_all(dir);
}
