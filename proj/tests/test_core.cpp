// Kernel layers: rationals, monomials, orders, polynomials, matrices.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "legreuel/matrix.hpp"
#include "legreuel/parser.hpp"
#include "legreuel/polynomial.hpp"

using namespace legreuel;

namespace {

RingPtr local3() { return make_ring({"x", "y", "z"}, MonomialOrder::local(3)); }
RingPtr global3() { return make_ring({"x", "y", "z"}, MonomialOrder::global(3)); }

Polynomial P(const RingPtr& R, const std::string& s) { return parse_polynomial(s, R); }

Monomial mono(int n, std::vector<int32_t> e) {
    Monomial m(n);
    for (int i = 0; i < (int)e.size(); ++i) m.set(i, e[i]);
    return m;
}

} // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - a == Rational(0));
    CHECK((a * b).to_string() == "1/18");
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6).to_string() == "-2/3");
    CHECK(Rational(7, 1).is_integer());
    CHECK(Rational(-3, 5).sign() == -1);
    CHECK(Rational(5, 7).inverse() == Rational(7, 5));
    CHECK(Rational::from_string("-22/4") == Rational(-11, 2));
    // exactness over a chain of operations that floats would lose
    Rational s(0);
    for (int i = 1; i <= 50; ++i) s += Rational(1, i) - Rational(1, i + 1);
    CHECK(s == Rational(50, 51));
}

TEST_CASE("monomial algebra") {
    Monomial a = mono(3, {3, 2, 0});
    Monomial b = mono(3, {1, 4, 2});
    CHECK((a * b) == mono(3, {4, 6, 2}));
    CHECK((a * b).degree() == 12);
    CHECK(lcm(a, b) == mono(3, {3, 4, 2}));
    CHECK(gcd(a, b) == mono(3, {1, 2, 0}));
    CHECK_FALSE(a.divides(b));
    CHECK(gcd(a, b).divides(a));
    CHECK(gcd(a, b).quotient_into(a) == mono(3, {2, 0, 0}));
    CHECK(coprime(mono(3, {2, 0, 0}), mono(3, {0, 1, 3})));
    CHECK_FALSE(coprime(a, b));
    CHECK(mono(3, {0, 0, 0}).is_one());
}

TEST_CASE("global order is a well order, local order inverts degree") {
    MonomialOrder g = MonomialOrder::global(2);
    MonomialOrder l = MonomialOrder::local(2);
    Monomial one = mono(2, {0, 0}), x = mono(2, {1, 0}), y = mono(2, {0, 1});
    Monomial x2 = mono(2, {2, 0}), xy = mono(2, {1, 1});

    CHECK(g.greater(x, one));
    CHECK(g.greater(x2, x));
    CHECK(g.greater(x, y)); // degrevlex tie break
    CHECK(l.greater(one, x)); // 1 is the largest monomial locally
    CHECK(l.greater(x, x2));
    CHECK(l.greater(x, y)); // same tie break within a degree
    // both orders are compatible with multiplication
    CHECK(g.greater(x2, xy) == g.greater(x, y));
    CHECK(l.greater(x2, xy) == l.greater(x, y));
    CHECK(g.is_global());
    CHECK_FALSE(g.is_local());
    CHECK(l.is_local());
}

TEST_CASE("leading data follows the order") {
    auto Rl = local3();
    auto Rg = global3();
    // lowest degree leads locally, highest leads globally
    CHECK(P(Rl, "x^2 + y^3 + x").leading_monomial() == mono(3, {1, 0, 0}));
    CHECK(P(Rg, "x^2 + y^3 + x").leading_monomial() == mono(3, {0, 3, 0}));
    CHECK(P(Rl, "x - x^2").ecart() == 1);
    CHECK(P(Rg, "x - x^2").ecart() == 0);
    CHECK(P(Rl, "3 + x").leading_coeff() == Rational(3));
    CHECK(P(Rl, "x*y*z").total_degree() == 3);
}

TEST_CASE("polynomial ring operations") {
    auto R = local3();
    Polynomial f = P(R, "x^2 - y"), g = P(R, "x + y*z");
    CHECK((f + g) - g == f);
    CHECK((f * g).to_string() == P(R, "x^3 + x^2*y*z - x*y - y^2*z").to_string());
    CHECK(f * Polynomial::zero(R) == Polynomial::zero(R));
    CHECK(f.pow(3) == f * f * f);
    CHECK(f.pow(0) == Polynomial::constant(R, Rational(1)));

    // derivative is linear and satisfies the product rule
    Polynomial d = derivative(f * g, 0);
    CHECK(d == derivative(f, 0) * g + f * derivative(g, 0));
    CHECK(derivative(P(R, "5"), 1).is_zero());
    CHECK(derivative(P(R, "x^3*y"), 0) == P(R, "3*x^2*y"));

    CHECK(P(R, "2*x + 4*y").primitive() == P(R, "x + 2*y"));
    CHECK(P(R, "3*x + 6*y^2").monic() == P(R, "x + 2*y^2"));
    CHECK(P(R, "x + y + 1").vanishes_at_origin() == false);
    CHECK(P(R, "x + y").vanishes_at_origin());
    CHECK(P(R, "7").is_constant());
    CHECK(P(R, "x*z + z^2").support_vars() == std::vector<bool>{true, false, true});
}

TEST_CASE("evaluation and transport between rings") {
    auto R = local3();
    Polynomial f = P(R, "x^2*y - z + 3");
    CHECK(f.evaluate({Rational(2), Rational(1, 2), Rational(1)}) == Rational(4));

    auto S = make_ring({"a", "x", "y", "z"}, MonomialOrder::local(4));
    std::vector<int> up{1, 2, 3};
    Polynomial lifted = transport(f, S, up);
    CHECK(lifted.to_string() == parse_polynomial("x^2*y - z + 3", S).to_string());
    std::vector<int> down{-1, 0, 1, 2};
    CHECK(transport(lifted, R, down) == f);
}

TEST_CASE("determinants expand exactly") {
    auto R = make_ring({"a", "b", "c", "d"}, MonomialOrder::global(4));
    PolyMatrix m(R, 2, 2);
    m.at(0, 0) = P(R, "a");
    m.at(0, 1) = P(R, "b");
    m.at(1, 0) = P(R, "c");
    m.at(1, 1) = P(R, "d");
    CHECK(det(m) == P(R, "a*d - b*c"));

    // row swap flips the sign
    PolyMatrix s(R, 2, 2);
    s.at(0, 0) = m.at(1, 0);
    s.at(0, 1) = m.at(1, 1);
    s.at(1, 0) = m.at(0, 0);
    s.at(1, 1) = m.at(0, 1);
    CHECK(det(s) == det(m).scaled(Rational(-1)));

    PolyMatrix v(R, 3, 3);
    for (int i = 0; i < 3; ++i) {
        Polynomial base = P(R, i == 0 ? "a" : (i == 1 ? "b" : "c"));
        v.at(i, 0) = Polynomial::constant(R, Rational(1));
        v.at(i, 1) = base;
        v.at(i, 2) = base * base;
    }
    // Vandermonde in a, b, c
    CHECK(det(v) == P(R, "(b-a)*(c-a)*(c-b)"));
}

TEST_CASE("minors of the xyz jacobian") {
    auto R = local3();
    std::vector<Polynomial> fs{P(R, "x*y*z"), P(R, "x+y+z")};
    PolyMatrix J = jacobian(R, fs);
    CHECK(J.rows() == 2);
    CHECK(J.cols() == 3);
    CHECK(J.at(0, 0) == P(R, "y*z"));
    CHECK(J.at(1, 2) == P(R, "1"));
    std::vector<Polynomial> ms = minors(J, 2);
    REQUIRE(ms.size() == 3);
    // column pairs in lexicographic order
    CHECK(ms[0] == P(R, "y*z - x*z"));
    CHECK(ms[1] == P(R, "y*z - x*y"));
    CHECK(ms[2] == P(R, "x*z - x*y"));
    // 1-minors are the entries, full-size minor is the determinant
    CHECK(minors(J, 1).size() == 6);
}

TEST_CASE("pfaffian conventions") {
    auto R = local3();
    PolyMatrix m(R, 3, 3);
    Polynomial a = P(R, "x"), b = P(R, "y"), c = P(R, "z");
    m.at(0, 1) = a;
    m.at(1, 0) = a.scaled(Rational(-1));
    m.at(0, 2) = b;
    m.at(2, 0) = b.scaled(Rational(-1));
    m.at(1, 2) = c;
    m.at(2, 1) = c.scaled(Rational(-1));
    std::vector<Polynomial> pf = pfaffians(m);
    REQUIRE(pf.size() == 3);
    // deleting row and column i leaves the 2x2 block on the other two indices
    CHECK(pf[0] == c);
    CHECK(pf[1] == b);
    CHECK(pf[2] == a);

    // the empty matrix has Pfaffian 1, so a 1x1 zero block reports [1]
    PolyMatrix z1(R, 1, 1);
    std::vector<Polynomial> pf1 = pfaffians(z1);
    REQUIRE(pf1.size() == 1);
    CHECK(pf1[0] == P(R, "1"));

    // even size: det is the square of the Pfaffian
    auto R6 = make_ring({"p", "q", "r", "s", "t", "u"}, MonomialOrder::global(6));
    PolyMatrix m4(R6, 4, 4);
    const char* entries[6] = {"p", "q", "r", "s", "t", "u"};
    int k = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Polynomial e = parse_polynomial(entries[k++], R6);
            m4.at(i, j) = e;
            m4.at(j, i) = e.scaled(Rational(-1));
        }
    std::vector<Polynomial> pf4 = pfaffians(m4);
    REQUIRE(pf4.size() == 1);
    CHECK(pf4[0] * pf4[0] == det(m4));
    CHECK(pf4[0] == parse_polynomial("p*u - q*t + r*s", R6));
}

TEST_CASE("ring construction rejects malformed input") {
    CHECK_THROWS_AS(make_ring({"x", "x"}, MonomialOrder::local(2)), Error);
    CHECK_THROWS_AS(make_ring({}, MonomialOrder::local(0)), Error);
    auto R = local3();
    auto S = global3();
    // same names, different order: still different rings
    CHECK_THROWS_AS(P(R, "x") + P(S, "x"), Error);
    CHECK(R->var_index("y") == 1);
    CHECK(R->var_index("w") == -1);
}
