// Copyright 2026 The pdqubo authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "pdqubo/qubo_io.hpp"

#include <cstdio>
#include <fstream>

#include "catch2/catch_amalgamated.hpp"
#include "pdqubo/errors.hpp"
#include "pdqubo/rational.hpp"
#include "test_util.hpp"

using namespace pdqubo;

TEST_CASE("decimal rationals") {
    SECTION("parsing is exact") {
        CHECK(rational_from_decimal("0.1") == Rational(1, 10));
        CHECK(rational_from_decimal("2.25") == Rational(9, 4));
        CHECK(rational_from_decimal("-3") == Rational(-3));
        CHECK(rational_from_decimal("1e3") == Rational(1000));
        CHECK(rational_from_decimal("1.5e-2") == Rational(3, 200));
        CHECK(rational_from_decimal("+0.750") == Rational(3, 4));
    }
    SECTION("bad literals fail to parse") {
        CHECK_THROWS_AS(rational_from_decimal("abc"), ParseError);
        CHECK_THROWS_AS(rational_from_decimal("1.2.3"), ParseError);
        CHECK_THROWS_AS(rational_from_decimal(""), ParseError);
        CHECK_THROWS_AS(rational_from_decimal("1/3"), ParseError);
        CHECK_THROWS_AS(rational_from_decimal("1e"), ParseError);
        CHECK_THROWS_AS(rational_from_decimal("."), ParseError);
    }
    SECTION("formatting terminating rationals is exact and minimal") {
        CHECK(decimal_string(Rational(1, 10)) == "0.1");
        CHECK(decimal_string(Rational(9, 4)) == "2.25");
        CHECK(decimal_string(Rational(-3)) == "-3");
        CHECK(decimal_string(Rational(0)) == "0");
        CHECK(decimal_string(Rational(1, 8)) == "0.125");
        CHECK(decimal_string(Rational(3, 200)) == "0.015");
        CHECK(decimal_string(Rational(1000)) == "1000");
    }
    SECTION("format and parse round-trip") {
        auto rng = testutil::engine(61);
        for (int trial = 0; trial < 200; ++trial) {
            const Rational value = testutil::random_coefficient(rng);
            CHECK(rational_from_decimal(decimal_string(value)) == value);
        }
    }
    SECTION("doubles convert exactly") {
        const Rational r = rational_from_double(0.1);
        // Denominator is a power of two: every finite double is dyadic.
        BigInt den = denominator(r);
        while (den % 2 == 0) den /= 2;
        CHECK(den == 1);
        CHECK(to_double(r) == 0.1);
        CHECK_THROWS_AS(rational_from_double(std::numeric_limits<double>::infinity()),
                        DomainError);
    }
    SECTION("shortest round-trip doubles") {
        CHECK(double_string(0.1) == "0.1");
        CHECK(double_string(2.25) == "2.25");
        CHECK(to_double(rational_from_decimal(double_string(1.0 / 3.0))) == 1.0 / 3.0);
    }
}

TEST_CASE("qubo text format") {
    SECTION("writer layout") {
        QuboModel model(3);
        model.add_linear(0, Rational(-13, 4));
        model.add_quadratic(0, 1, Rational(7, 2));
        model.add_quadratic(1, 2, -1);
        model.set_offset(Rational(21, 4));
        CHECK(write_qubo_text(model) ==
              "qubo 3\noffset 5.25\n0 0 -3.25\n0 1 3.5\n1 2 -1\n");
    }
    SECTION("zero offset is omitted") {
        QuboModel model(1);
        model.add_linear(0, 1);
        CHECK(write_qubo_text(model) == "qubo 1\n0 0 1\n");
    }
    SECTION("parse inverts write") {
        auto rng = testutil::engine(62);
        for (int trial = 0; trial < 30; ++trial) {
            const QuboModel model = testutil::random_qubo(rng, 1 + rng::uniform_index(rng, 8));
            CHECK(parse_qubo_text(write_qubo_text(model)) == model);
        }
    }
    SECTION("write inverts parse byte-stably") {
        const std::string text = "qubo 4\noffset -0.5\n0 0 1.25\n0 3 -2\n2 3 0.875\n";
        CHECK(write_qubo_text(parse_qubo_text(text)) == text);
    }
    SECTION("comments, blank lines, and duplicate terms") {
        const QuboModel model = parse_qubo_text(
                "# header comment\n\nqubo 2\n0 0 1\n# interlude\n0 0 2\n0 1 -1\n0 1 1\n");
        CHECK(model.linear(0) == Rational(3));
        CHECK(model.quadratic_terms().empty());
    }
    SECTION("diagonal terms are linear") {
        const QuboModel model = parse_qubo_text("qubo 2\n1 1 4\n");
        CHECK(model.linear(1) == Rational(4));
    }
    SECTION("errors carry the source name and line number") {
        const auto check_message = [](const char* text, const char* needle) {
            try {
                parse_qubo_text(text, "problem.qubo");
                FAIL("expected a parse error");
            } catch (const ParseError& err) {
                CHECK(std::string(err.what()).find(needle) != std::string::npos);
            }
        };
        check_message("0 0 1\n", "problem.qubo:1");
        check_message("qubo 2\n1 0 1\n", "i <= j");
        check_message("qubo 2\n0 5 1\n", "out of range");
        check_message("qubo 2\n0 0 xyz\n", "problem.qubo:2");
        check_message("qubo 2\noffset 1\noffset 2\n", "duplicate offset");
        check_message("", "missing 'qubo");
    }
}

TEST_CASE("edge map sidecar") {
    PersistenceDiagram X, Y;
    X.points.push_back({0, 2});
    X.points.push_back({1, 3});
    Y.points.push_back({rational_from_decimal("0"), rational_from_decimal("2.5")});
    const WassersteinGraph graph = build_wasserstein_graph(X, Y, 2, 2);
    CHECK(write_edge_map(graph) ==
          "0 E1 x0 y0 0.25\n"
          "1 E1 x1 y0 1.25\n"
          "2 E2 x0 dx0 1\n"
          "3 E2 x1 dx1 1\n"
          "4 E3 y0 dy0 1.5625\n");
}

TEST_CASE("atomic file writes") {
    const std::string path = "io_test_scratch.txt";
    write_file_atomic(path, "first\n");
    write_file_atomic(path, "second\n");
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == "second\n");
    std::ifstream temp(path + ".tmp");
    CHECK_FALSE(temp.good());
    std::remove(path.c_str());
}
