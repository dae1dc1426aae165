#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "fractal_qm/table.hpp"

using namespace fractal_qm;

TEST_CASE("number formatting", "[table]") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(-13.605693122994) == "-13.605693123");
    CHECK(format_number(1e-20) == "1e-20");
    CHECK(format_number(0.1) == "0.1");
}

TEST_CASE("csv layout", "[table]") {
    Table t{{"x", "y"}, {}};
    t.add_row({0.0, -0.0});
    t.add_row({0.5, 2.0});
    std::ostringstream out;
    write_csv(out, t);
    CHECK(out.str() == "x,y\n0,0\n0.5,2\n");
    CHECK_THROWS_AS(t.add_row({1.0}), ParameterError);
    CHECK(t.column_index("y") == 1);
    CHECK_THROWS_AS((void)t.column_index("z"), ParameterError);
}

TEST_CASE("csv round trip preserves the written digits", "[table][property]") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
    std::uniform_int_distribution<int> exponent(-30, 30);
    for (int trial = 0; trial < 50; ++trial) {
        Table t{{"a", "b", "c"}, {}};
        for (int r = 0; r < 20; ++r)
            t.add_row({mantissa(rng) * std::pow(10.0, exponent(rng)), mantissa(rng), static_cast<double>(r)});
        std::ostringstream first;
        write_csv(first, t);
        std::istringstream in(first.str());
        const Table back = read_csv(in);
        REQUIRE(back.columns == t.columns);
        REQUIRE(back.rows.size() == t.rows.size());
        for (std::size_t r = 0; r < t.rows.size(); ++r)
            for (std::size_t c = 0; c < 3; ++c)
                CHECK(std::abs(back.rows[r][c] - t.rows[r][c]) <= 1e-11 * std::abs(t.rows[r][c]));
        std::ostringstream second;
        write_csv(second, back);
        CHECK(second.str() == first.str());
    }
}

TEST_CASE("malformed csv is rejected", "[table][errors]") {
    for (const char* text : {"", "x,y\n1,2,3\n", "x,y\n1,abc\n", "x\n1.5q\n", "x,y\n1\n"}) {
        std::istringstream in(text);
        INFO(text);
        CHECK_THROWS_AS(read_csv(in), ComputationError);
    }
    std::istringstream ok("x,y\n1,2\n\n3,4\n");
    CHECK(read_csv(ok).rows.size() == 2);
}

TEST_CASE("json mirrors the csv rows", "[table][json]") {
    Table t{{"n", "E"}, {}};
    t.add_row({1.0, -0.5});
    t.add_row({2.0, 0.123456789012345});
    std::ostringstream out;
    write_json(out, t);
    const auto doc = nlohmann::json::parse(out.str());
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    CHECK(doc[0]["n"].is_number_integer());
    CHECK(doc[0]["n"] == 1);
    CHECK(doc[0]["E"].get<double>() == -0.5);
    CHECK(doc[1]["E"].get<double>() == std::stod(format_number(0.123456789012345)));
    const auto first_key = doc[0].begin().key();
    CHECK((first_key == "E" || first_key == "n"));
    CHECK(out.str().find("\"n\"") < out.str().find("\"E\""));
}
