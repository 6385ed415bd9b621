// Copyright (c) lorentz-polar contributors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "lorentz/decompose.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/io.hpp"
#include "lorentz/sampler.hpp"

using namespace lorentz;

TEST_CASE("format_double round-trips doubles through decimal", "[io]") {
    std::mt19937_64 rng(401);
    std::uniform_real_distribution<double> uniform(-10.0, 10.0);
    for (int i = 0; i < 2000; ++i) {
        const double value = uniform(rng);
        CHECK(std::strtod(io::format_double(value).c_str(), nullptr) == value);
    }
    for (const double value : {0.1, 1.0 / 3.0, 1e-300, 1e300, -0.0, 0.6, 1.25}) {
        CHECK(std::strtod(io::format_double(value).c_str(), nullptr) == value);
    }
}

TEST_CASE("matrix write-read identity in both formats", "[io]") {
    LorentzSampler sampler(403);
    for (const io::Format format : {io::Format::text, io::Format::json}) {
        std::ostringstream out;
        std::vector<Mat4> original;
        for (int i = 0; i < 5; ++i) {
            original.push_back(sampler.lorentz().matrix());
            out << io::format_matrix(original.back(), format);
        }
        std::istringstream in(out.str());
        const std::vector<Mat4> parsed = io::read_matrices(in);
        REQUIRE(parsed.size() == original.size());
        for (std::size_t i = 0; i < parsed.size(); ++i)
            CHECK(test_helpers::bitwise_equal(parsed[i], original[i]));
    }
}

TEST_CASE("matrix input accepts the documented shapes", "[io]") {
    SECTION("object with matrix field") {
        std::istringstream in(R"({"matrix": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})");
        CHECK(test_helpers::bitwise_equal(io::read_matrix(in), Mat4::identity()));
    }
    SECTION("bare 4x4 array") {
        std::istringstream in("[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]");
        CHECK(test_helpers::bitwise_equal(io::read_matrix(in), Mat4::identity()));
    }
    SECTION("sixteen whitespace-separated numbers") {
        std::istringstream in("1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
        CHECK(test_helpers::bitwise_equal(io::read_matrix(in), Mat4::identity()));
    }
    SECTION("several JSON objects in one stream") {
        std::istringstream in(
            "{\"matrix\": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}\n"
            "{\"matrix\": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}\n");
        CHECK(io::read_matrices(in).size() == 2);
    }
}

TEST_CASE("matrix parse errors", "[io]") {
    auto expect_parse_error = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(io::read_matrices(in), ParseError);
    };
    expect_parse_error("");
    expect_parse_error("hello world");
    expect_parse_error("1 2 3 4 5");                        // not a multiple of 16
    expect_parse_error("1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 sixteen");
    expect_parse_error(R"({"matrix": [[1,2],[3,4]]})");      // wrong shape
    expect_parse_error(R"({"matrix": [[1,0,0,"x"],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})");
    expect_parse_error(R"({"rows": []})");                   // missing field
    expect_parse_error(R"({"matrix": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]])");  // truncated
}

TEST_CASE("factor records round trip", "[io]") {
    const auto rz = RotationMatrix::from_matrix(Mat3{{0, -1, 0, 1, 0, 0, 0, 0, 1}});
    const CartanFactors f{rz, BoostParameters{Vec3{0.6, 0, 0}}, FactorOrder::RotationBoost};
    const std::string report = io::format_factor_report(f, 0.0, io::Format::json);

    std::istringstream in(report);
    const std::vector<io::FactorRecord> records = io::read_factor_records(in);
    REQUIRE(records.size() == 1);
    CHECK_FALSE(records[0].rotation.axis_angle);
    CHECK(max_abs_diff(records[0].rotation.matrix, rz.matrix()) == 0.0);
    CHECK(records[0].velocity.x == 0.6);
    REQUIRE(records[0].order.has_value());
    CHECK(*records[0].order == FactorOrder::RotationBoost);
}

TEST_CASE("factor record rotation shapes", "[io]") {
    SECTION("axis-angle object") {
        std::istringstream in(
            R"({"rotation": {"axis": [0, 0, 1], "angle": 1.5707963267948966}, "velocity": [0.6, 0, 0]})");
        const auto records = io::read_factor_records(in);
        REQUIRE(records.size() == 1);
        CHECK(records[0].rotation.axis_angle);
        CHECK(records[0].rotation.angle == 1.5707963267948966);
    }
    SECTION("flat axis-angle array") {
        std::istringstream in(R"({"rotation": [0, 0, 1, 0.5], "velocity": [0, 0, 0]})");
        const auto records = io::read_factor_records(in);
        REQUIRE(records.size() == 1);
        CHECK(records[0].rotation.axis_angle);
    }
    SECTION("text input is rejected with guidance") {
        std::istringstream in("1 0 0 0 1 0 0 0 1");
        CHECK_THROWS_AS(io::read_factor_records(in), ParseError);
    }
    SECTION("missing velocity") {
        std::istringstream in(R"({"rotation": [0, 0, 1, 0.5]})");
        CHECK_THROWS_AS(io::read_factor_records(in), ParseError);
    }
}

TEST_CASE("rotation_from_numbers detects shape by count", "[io]") {
    const auto axis_angle = io::rotation_from_numbers({0, 0, 1, 0.25});
    CHECK(axis_angle.axis_angle);
    const auto raw = io::rotation_from_numbers({1, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK_FALSE(raw.axis_angle);
    CHECK_THROWS_AS(io::rotation_from_numbers(std::vector<double>{1, 2, 3}), ParseError);
    CHECK_THROWS_AS(io::parse_number_list("1 2 x"), ParseError);
}

TEST_CASE("order tags", "[io]") {
    CHECK(io::parse_order_tag("rb") == FactorOrder::RotationBoost);
    CHECK(io::parse_order_tag("br") == FactorOrder::BoostRotation);
    CHECK(io::parse_order_tag("rotation-boost") == FactorOrder::RotationBoost);
    CHECK_THROWS_AS(io::parse_order_tag("sideways"), ParseError);
}

TEST_CASE("verification report formats", "[io]") {
    VerificationReport report;
    report.rotation_factor_residual = 1e-13;
    report.boost_factor_residual = 2e-13;
    report.group_residual = 3e-16;
    report.reassembly_residual = 4e-14;
    report.verdict = true;

    const std::string json_line = io::format_verification_report(3, report, io::Format::json);
    CHECK(json_line.find("\"index\": 3") != std::string::npos);
    CHECK(json_line.find("\"verdict\": true") != std::string::npos);

    const std::string text_line = io::format_verification_report(3, report, io::Format::text);
    CHECK(text_line.find("verdict=pass") != std::string::npos);
}
