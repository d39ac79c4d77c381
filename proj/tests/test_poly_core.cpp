#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "msym/parse.hpp"
#include "msym/poly.hpp"
#include "msym/rational.hpp"

using namespace msym;

TEST_CASE("rational parsing and rendering") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational(" 1/2 ") == Rational(1, 2));
    CHECK(rational_to_string(Rational(3, 2)) == "3/2");
    CHECK(rational_to_string(Rational(-7)) == "-7");
    CHECK(rational_to_string(Rational(4, 2)) == "2");
    CHECK(is_integral(Rational(4, 2)));
    CHECK_FALSE(is_integral(Rational(1, 2)));
    CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("vector parsing") {
    CHECK(parse_int_vector("2,1") == std::vector<Int>{2, 1});
    CHECK(parse_int_vector("") == std::vector<Int>{});
    CHECK(parse_int_vector(" 0 , 3 ") == std::vector<Int>{0, 3});
    CHECK_THROWS_AS(parse_int_vector("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_vector("-1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_vector("1/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_vector("1,2,"), std::invalid_argument);
    const auto r = parse_rational_vector("5,4/2,1/3");
    REQUIRE(r.size() == 3);
    CHECK(r[1] == Rational(2));
    CHECK(r[2] == Rational(1, 3));
}

TEST_CASE("variable ordering and factories") {
    CHECK(y_var(1) < x_var(1, 1));
    CHECK(x_var(2, 3) < t_var(1));
    CHECK(x_var(1, 2) < x_var(2, 1));
    CHECK(x_var(1, 1) < x_var(1, 2));
    CHECK_THROWS_AS(y_var(0), std::domain_error);
    CHECK_THROWS_AS(x_var(1, 0), std::domain_error);
    CHECK_THROWS_AS(t_var(-1), std::domain_error);
}

TEST_CASE("addition merges like terms and prunes zeros") {
    CHECK(y(1) + (-y(1)) == Polynomial::zero());
    const Polynomial p = y(1) * y(2) + Polynomial::constant(Rational(1, 2));
    CHECK(p + Polynomial::zero() == p);
    CHECK((y(1) + y(2)) + y(2) == y(1) + y(2) * Rational(2));
}

TEST_CASE("multiplication distributes and adds exponents") {
    CHECK((y(1) + y(2)) * (y(1) - y(2)) == y(1) * y(1) - y(2) * y(2));
    const Polynomial p = y(1) * y(3) + Polynomial::constant(2);
    CHECK(Polynomial::one() * p == p);
    CHECK(y(1) * y(1) == Polynomial::variable(y_var(1), 2));
}

TEST_CASE("ring axioms on pseudo-random polynomials") {
    std::mt19937_64 rng(42);
    auto rand_poly = [&] {
        Polynomial p;
        const int terms = static_cast<int>(rng() % 4);
        for (int t = 0; t < terms; ++t) {
            Polynomial m = Polynomial::constant(make_rational(
                static_cast<Int>(rng() % 7) - 3, 1 + static_cast<Int>(rng() % 3)));
            const int deg = static_cast<int>(rng() % 3);
            for (int k = 0; k < deg; ++k) m = m * y(1 + static_cast<Int>(rng() % 3));
            p = p + m;
        }
        return p;
    };
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial a = rand_poly(), b = rand_poly(), c = rand_poly();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Polynomial::zero() == a);
        CHECK(a * Polynomial::one() == a);
        CHECK(a - a == Polynomial::zero());
    }
}

TEST_CASE("substitute renames y to the point's x coordinates") {
    CHECK(substitute(y(1) * y(3), 2, 3) == x(2, 1) * x(2, 3));
    CHECK(substitute(y(2), 1, 2) == x(1, 2));
    CHECK(substitute(y(1) + Polynomial::one(), 3, 1) == x(3, 1) + Polynomial::one());
}

TEST_CASE("substitute rejects out-of-range variables") {
    CHECK_THROWS_AS(substitute(y(3), 1, 2), std::domain_error);
    CHECK_THROWS_AS(substitute(x(1, 1), 1, 2), std::domain_error);
    CHECK_THROWS_AS(substitute(y(1), 0, 2), std::domain_error);
}

TEST_CASE("substitute is a ring homomorphism") {
    const Polynomial f = y(1) * y(2) + Polynomial::constant(Rational(1, 3));
    const Polynomial g = y(2) * y(2) - y(1);
    CHECK(substitute(f * g, 2, 2) == substitute(f, 2, 2) * substitute(g, 2, 2));
    CHECK(substitute(f + g, 2, 2) == substitute(f, 2, 2) + substitute(g, 2, 2));
}

TEST_CASE("coefficient_of_t reads off exact T-exponents") {
    const Polynomial P1 = Polynomial::one() + x(1, 1) * t(1);
    CHECK(coefficient_of_t(P1, {1}) == x(1, 1));
    CHECK(coefficient_of_t(P1, {2}) == Polynomial::zero());
    const Polynomial P2 =
        (Polynomial::one() + x(1, 1) * t(1)) * (Polynomial::one() + x(2, 1) * t(1));
    CHECK(coefficient_of_t(P2, {1}) == x(1, 1) + x(2, 1));
    CHECK(coefficient_of_t(P2, {0}) == Polynomial::one());
    CHECK(coefficient_of_t(P2, {2}) == x(1, 1) * x(2, 1));
}

TEST_CASE("t-expansion of a polynomial reconstructs it") {
    const Polynomial P = (Polynomial::one() + x(1, 1) * t(1) + x(1, 2) * t(2)) *
                         (Polynomial::one() + x(2, 1) * t(1) + x(2, 2) * t(2));
    Polynomial rebuilt;
    for (Int a = 0; a <= 2; ++a)
        for (Int b = 0; b <= 2; ++b) {
            Polynomial marker = Polynomial::one();
            for (Int k = 0; k < a; ++k) marker = marker * t(1);
            for (Int k = 0; k < b; ++k) marker = marker * t(2);
            rebuilt = rebuilt + coefficient_of_t(P, {a, b}) * marker;
        }
    CHECK(rebuilt == P);
}

TEST_CASE("mul_t_capped agrees with plain product on surviving coefficients") {
    const Polynomial a = Polynomial::one() + x(1, 1) * t(1) + x(1, 2) * t(2);
    const Polynomial b = Polynomial::one() + x(2, 1) * t(1) + x(2, 2) * t(2);
    const std::vector<Int> cap{1, 1};
    const Polynomial full = a * b;
    const Polynomial capped = mul_t_capped(a, b, cap);
    for (Int s = 0; s <= 1; ++s)
        for (Int r = 0; r <= 1; ++r)
            CHECK(coefficient_of_t(capped, {s, r}) == coefficient_of_t(full, {s, r}));
    // Over-cap terms are genuinely absent.
    CHECK(coefficient_of_t(capped, {2, 0}) == Polynomial::zero());
}

TEST_CASE("permute_points relabels x rows") {
    const Polynomial f = x(1, 1) * x(2, 2) + x(3, 1);
    const Polynomial g = permute_points(f, {2, 3, 1});
    CHECK(g == x(2, 1) * x(3, 2) + x(1, 1));
    CHECK_THROWS_AS(permute_points(x(4, 1), {2, 3, 1}), std::domain_error);
}

TEST_CASE("to_string is canonical and readable") {
    CHECK(Polynomial::zero().to_string() == "0");
    CHECK((y(1) * y(1) * Rational(-2) + Polynomial::one()).to_string() ==
          "1 - 2*y1^2");
    CHECK((x(1, 2) * t(1)).to_string() == "x{1,2}*t1");
}

TEST_CASE("polynomial JSON is deterministic") {
    const Polynomial p = y(1) * Rational(1, 2) + t(2) * x(2, 1);
    const std::string j = polynomial_to_json(p);
    CHECK(j == polynomial_to_json(p));
    CHECK(j.find("\"1/2\"") != std::string::npos);
    CHECK(j.find("[\"Y\",1,1]") != std::string::npos);
    CHECK(j.find("[\"X\",2,1,1]") != std::string::npos);
    CHECK(j.find("[\"T\",2,1]") != std::string::npos);
}

TEST_CASE("expression parser handles precedence, powers and rationals") {
    CHECK(parse_polynomial("y1") == y(1));
    CHECK(parse_polynomial("y1 + 2*y2^2") == y(1) + y(2) * y(2) * Rational(2));
    CHECK(parse_polynomial("(y1+y2)*(y1-y2)") == y(1) * y(1) - y(2) * y(2));
    CHECK(parse_polynomial("1/2 * y3") == y(3) * Rational(1, 2));
    CHECK(parse_polynomial("6/4") == Polynomial::constant(Rational(3, 2)));
    CHECK(parse_polynomial("-y1 + y1") == Polynomial::zero());
    CHECK(parse_polynomial("y1^0") == Polynomial::one());
    CHECK(parse_polynomial(" 7 ") == Polynomial::constant(7));
}

TEST_CASE("expression parser rejects malformed input") {
    CHECK_THROWS_AS(parse_polynomial(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("y0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("y1 +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("(y1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("x1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("1/0"), std::invalid_argument);
}

TEST_CASE("polynomial list parsing splits on semicolons") {
    const auto entries = parse_polynomial_list("y1; y1*y2 + 2 ;y2");
    REQUIRE(entries.size() == 3);
    CHECK(entries[0] == y(1));
    CHECK(entries[1] == y(1) * y(2) + Polynomial::constant(2));
    CHECK(entries[2] == y(2));
    CHECK(max_y_index(entries) == 2);
    CHECK(max_y_index({Polynomial::one()}) == 0);
    CHECK_THROWS_AS(parse_polynomial_list("y1;;y2"), std::invalid_argument);
}
