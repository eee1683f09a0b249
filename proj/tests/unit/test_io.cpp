#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "qsolv/algebra.hpp"
#include "qsolv/errors.hpp"
#include "qsolv/io.hpp"

using namespace qsolv;

TEST_CASE("every preset round-trips through the definition format") {
    for (const auto& name : preset_names()) {
        CAPTURE(name);
        Presentation p = preset(name);
        CHECK(presentation_from_json(presentation_to_json(p)) == p);
    }
}

TEST_CASE("pivot results with non-Laurent tails round-trip") {
    // hatted Weyl presentations carry 1/(q - 1) style coefficients
    Presentation w = quantum_weyl();
    Element odd = Element::monomial({0, 0}, RF(1) / (RF::q_pow(1) - RF(1)));
    w.tails[{0, 1}] = odd;
    std::string text = presentation_to_json(w);
    CHECK(text.find("\"num\"") != std::string::npos);
    CHECK(presentation_from_json(text) == w);
}

TEST_CASE("definition file on disk") {
    auto path = std::filesystem::temp_directory_path() / "qsolv_io_test.json";
    save_presentation(quantum_matrices(2), path.string());
    CHECK(load_presentation(path.string()) == quantum_matrices(2));
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_presentation("/nonexistent/qsolv.json"), ParseError);
}

TEST_CASE("hand-written definition file") {
    const char* text = R"({
        "names": ["x", "y"],
        "distinguished": [1],
        "S": [[0, 1], [-1, 0]],
        "tails": {}
    })";
    Presentation p = presentation_from_json(text);
    CHECK(p.M() == 2);
    CHECK(p.is_distinguished(0));
    CHECK(!p.is_distinguished(1));
    CHECK(validate(p).ok());

    const char* weyl = R"({"names": ["a", "b"], "S": [[0, 1], [-1, 0]],
                           "tails": {"1,2": [[[[0, 1, 1]], [0, 0]]]}})";
    Presentation w = presentation_from_json(weyl);
    Presentation expect = quantum_weyl();
    expect.names = {"a", "b"};
    CHECK(w == expect);
}

TEST_CASE("malformed definition files") {
    CHECK_THROWS_AS(presentation_from_json("{"), ParseError);
    CHECK_THROWS_AS(presentation_from_json(R"({"names": ["x"], "S": [[0, 1]]})"), ParseError);
    CHECK_THROWS_AS(presentation_from_json(R"({"names": ["x","y"], "S": [[0,1],[-1,0]], "tails": {"2,1": []}})"),
                    ParseError);
    CHECK_THROWS_AS(presentation_from_json(R"({"names": ["x","y"], "S": [[0,1],[-1,0]], "distinguished": [3]})"),
                    ParseError);
    CHECK_THROWS_AS(
        presentation_from_json(R"({"names": ["x","y"], "S": [[0,1],[-1,0]], "tails": {"1,2": [[[[0,1,0]],[0,0]]]}})"),
        ParseError);
}

TEST_CASE("cyclotomic literals") {
    const int l = 3;
    auto e = Cyclotomic::epsilon(l);
    CHECK(parse_cyclotomic("3", l) == Cyclotomic(l, Rational(3)));
    CHECK(parse_cyclotomic("-1/2", l) == Cyclotomic(l, Rational(-1, 2)));
    CHECK(parse_cyclotomic("2*e - 1/3", l) == Cyclotomic(l, Rational(2)) * e - Cyclotomic(l, Rational(1, 3)));
    CHECK(parse_cyclotomic("e^2 + e + 1", l).is_zero());
    CHECK(parse_cyclotomic("e^-1", l) == e.inverse());
    CHECK(parse_cyclotomic(e.to_string(), l) == e);
    CHECK_THROWS_AS(parse_cyclotomic("2 e", l), ParseError);
    CHECK_THROWS_AS(parse_cyclotomic("", l), ParseError);
    CHECK_THROWS_AS(parse_cyclotomic("1/0", l), ParseError);
}

TEST_CASE("character files") {
    const int l = 5;
    auto chi = parse_character(R"({"values": ["1", 0, [0, 1], "e^4"]})", l);
    REQUIRE(chi.size() == 4);
    CHECK(chi[0].is_one());
    CHECK(chi[1].is_zero());
    CHECK(chi[2] == Cyclotomic::epsilon(l));
    CHECK(chi[3] == Cyclotomic::epsilon(l, 4));
    CHECK(parse_character("[1, 2]", l).size() == 2);
    CHECK_THROWS_AS(parse_character(R"({"vals": []})", l), ParseError);
    CHECK_THROWS_AS(parse_character("[[1,2,3,4,5]]", l), ParseError);
}
