// Script language: lexing, expressions, declarations, commands, spans.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "legreuel/parser.hpp"

using namespace legreuel;

TEST_CASE("expressions round trip through printing") {
    auto R = make_ring({"x", "y", "z"}, MonomialOrder::local(3));
    for (const char* s : {"x", "-x", "0", "7", "-3/2", "x^2*y - z",
                          "(x + y)*(x - y)", "1/2*x^3 - 2/3*y + 4",
                          "x*y*z - x*y - y*z + 1", "x^17 - y^16*z"}) {
        Polynomial p = parse_polynomial(s, R);
        CHECK(parse_polynomial(p.to_string(), R) == p);
    }
    // printing is canonical: equal polynomials print identically
    CHECK(parse_polynomial("x + y", R).to_string() ==
          parse_polynomial("y + x", R).to_string());
    CHECK(parse_polynomial("(x + y)^2", R).to_string() ==
          parse_polynomial("x^2 + 2*x*y + y^2", R).to_string());
}

TEST_CASE("the cube of the slice function expands to twenty terms") {
    auto R = make_ring({"x", "y", "z", "t"}, MonomialOrder::local(4));
    Polynomial p = parse_polynomial("(x + y + z + t)^3", R);
    CHECK(p.terms().size() == 20);
    CHECK(p.total_degree() == 3);
    CHECK(p.evaluate({Rational(1), Rational(1), Rational(1), Rational(1)}) ==
          Rational(64));
}

TEST_CASE("script declarations bind names in order") {
    Script s = parse_script("ring (x, y) local;\n"
                            "poly f = x^2 - y^3;\n"
                            "poly g = f + y^3;  # refers back to f\n"
                            "ideal I = f, x*y;\n"
                            "matrix M [2][2] = x, y, -y, f;\n"
                            "vdim(I);\n");
    REQUIRE(s.ring != nullptr);
    CHECK(s.ring->nvars() == 2);
    CHECK(s.ring->order().is_local());
    CHECK(s.poly("g").to_string() == "x^2");
    CHECK(s.ideal("I").size() == 2);
    CHECK(s.matrix("M").at(1, 1) == s.poly("f"));
    REQUIRE(s.commands.size() == 1);
    CHECK(s.commands[0].name == "vdim");
    REQUIRE(s.commands[0].args.size() == 1);
    CHECK(s.commands[0].args[0].name == "I");
}

TEST_CASE("command arguments carry name, value, or integer") {
    Script s = parse_script("ring (x, y) global;\n"
                            "poly f = x + y;\n"
                            "ideal I = x;\n"
                            "probe(I, f, x^2 - 1, 3, -2);\n");
    const Command& c = s.commands[0];
    REQUIRE(c.args.size() == 5);
    CHECK(c.args[0].name == "I");
    CHECK_FALSE(c.args[0].value.has_value());
    CHECK(c.args[1].name == "f");
    CHECK(c.args[1].value == s.poly("f"));
    CHECK_FALSE(c.args[2].name.has_value());
    CHECK(c.args[2].value == parse_polynomial("x^2 - 1", s.ring));
    CHECK(c.args[3].integer == 3);
    CHECK(c.args[4].integer == -2);
    // a bare ring variable is an expression, not an object reference
    Script s2 = parse_script("ring (x, y) global;\nprobe(x);\n");
    CHECK_FALSE(s2.commands[0].args[0].name.has_value());
    CHECK(s2.commands[0].args[0].value == parse_polynomial("x", s2.ring));
}

TEST_CASE("errors carry source positions") {
    auto kind_at = [](const std::string& src, int line, int col) {
        try {
            parse_script(src);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::parse_error);
            REQUIRE(e.span().has_value());
            CHECK(e.span()->line == line);
            CHECK(e.span()->col == col);
            return true;
        }
        return false;
    };
    CHECK(kind_at("ring (x, y) local;\npoly f = x + ;\n", 2, 14));
    CHECK(kind_at("ring (x) local;\npoly f = q;\n", 2, 10));
    CHECK(kind_at("poly f = x;\n", 1, 1)); // no ring yet
    CHECK(kind_at("ring (x) local;\nring (y) local;\n", 2, 1));
    CHECK(kind_at("ring (x) local;\npoly x = x;\n", 2, 6)); // collides with variable
    CHECK(kind_at("ring (x) local;\npoly f = x;\npoly f = x;\n", 3, 6));
    CHECK(kind_at("ring (x) local;\npoly f = 1/0;\n", 2, 12));
    CHECK(kind_at("ring (x) local;\nmatrix M [2][2] = x, x, x;\n", 2, 26));
    CHECK(kind_at("ring (x) local;\npoly f = x?;\n", 2, 11));
}

TEST_CASE("malformed scripts always raise parse errors, never crash") {
    // token soup built from the grammar's own alphabet
    const char* bits[] = {"ring", "poly", "ideal", "matrix", "(", ")", "[", "]",
                          "x", "y", "=", ",", ";", "+", "-", "*", "^", "/",
                          "3", "17", "local", "global", "f", "#", "\n"};
    uint64_t state = 99;
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return (size_t)(state >> 33);
    };
    int parsed = 0, rejected = 0;
    for (int round = 0; round < 400; ++round) {
        std::string src = "ring (x, y) local;\n";
        int len = 1 + (int)(next() % 12);
        for (int i = 0; i < len; ++i) {
            src += bits[next() % (sizeof(bits) / sizeof(bits[0]))];
            src += " ";
        }
        try {
            parse_script(src);
            ++parsed;
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::parse_error);
            ++rejected;
        }
    }
    CHECK(parsed + rejected == 400);
    CHECK(rejected > 0);
}

TEST_CASE("generator strings are sorted and stable") {
    auto R = make_ring({"x", "y", "z"}, MonomialOrder::local(3));
    Ideal I(R, {parse_polynomial("y - z", R), parse_polynomial("x - z", R)});
    auto a = sorted_generator_strings(I);
    REQUIRE(a.size() == 2);
    CHECK(a[0] == "x - z");
    CHECK(a[1] == "y - z");
    Ideal J(R, {parse_polynomial("x - z", R), parse_polynomial("y - z", R)});
    CHECK(sorted_generator_strings(J) == a);
}

TEST_CASE("standalone polynomial parsing validates its input") {
    auto R = make_ring({"x"}, MonomialOrder::global(1));
    CHECK_THROWS_AS(parse_polynomial("", R), Error);
    CHECK_THROWS_AS(parse_polynomial("x +", R), Error);
    CHECK_THROWS_AS(parse_polynomial("x y", R), Error); // juxtaposition is not product
    CHECK_THROWS_AS(parse_polynomial("x/x", R), Error); // division only in literals
    CHECK_THROWS_AS(parse_polynomial("x^1000", R), Error);
    CHECK(parse_polynomial("x^0", R) == parse_polynomial("1", R));
    CHECK(parse_polynomial("-x^2", R) == -parse_polynomial("x^2", R));
    CHECK(parse_polynomial("2^3", R) == parse_polynomial("8", R));
}
