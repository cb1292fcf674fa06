#include <random>

#include "doctest.h"
#include "picard/multipoly.hpp"

using namespace picard;

namespace {

IntPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-3, 3), var(0, 4), deg(0, 2), terms(0, 4);
    IntPoly p(Integer(1));
    const int n = terms(rng);
    for (int i = 0; i < n; ++i) {
        IntPoly m = int_const(coef(rng));
        for (int k = 0; k < 2; ++k) m = m * int_var(static_cast<Var>(var(rng))).pow(static_cast<unsigned>(deg(rng)));
        p += m;
    }
    return p;
}

}  // namespace

TEST_CASE("commutative ring axioms on 1000 random triples") {
    std::mt19937_64 rng(0);
    for (int i = 0; i < 1000; ++i) {
        const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == IntPoly(Integer(1)));
    }
}

TEST_CASE("canonical form drops zero terms") {
    const auto x = int_var(Var::x);
    CHECK((x - x).is_zero_poly());
    CHECK((x + int_const(1)).pow(2) == x * x + int_const(2) * x + int_const(1));
    CHECK((x + int_const(1)).pow(2).to_string() == "x^2 + 2*x + 1");
}

TEST_CASE("u v reduces to 1") {
    const auto u = int_var(Var::u), v = int_var(Var::v);
    CHECK(canonical(u * v) == int_const(1));
    CHECK(canonical(u.pow(3) * v.pow(5)) == v.pow(2));
    CHECK(*unit_inverse(int_const(-1) * u.pow(2)) == int_const(-1) * v.pow(2));
    CHECK_FALSE(unit_inverse(u + v).has_value());
    CHECK_FALSE(unit_inverse(int_const(2)).has_value());
}

TEST_CASE("simultaneous substitution") {
    const auto x = int_var(Var::x), y = int_var(Var::y);
    const auto p = x * x + y;
    CHECK(p.substitute({{Var::x, y}, {Var::y, x}}) == y * y + x);
    CHECK(p.substitute({{Var::x, x + int_const(1)}}) == x * x + int_const(2) * x + int_const(1) + y);
}

TEST_CASE("reduction mod p is a ring map") {
    std::mt19937_64 rng(3);
    const auto& f = FiniteField::get(3);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_poly(rng), b = random_poly(rng);
        CHECK(reduce_mod(a * b, f) == reduce_mod(a, f) * reduce_mod(b, f));
        CHECK(reduce_mod(a + b, f) == reduce_mod(a, f) + reduce_mod(b, f));
    }
}

TEST_CASE("univariate division") {
    const auto& f = FiniteField::get(2);
    const auto m = field_var(Var::mu, f);
    const auto one = field_const(FieldElement(f, 1));
    const auto d = m.pow(3) + one;
    CHECK(*(d.pow(3)).divide_univariate(d, Var::mu) == d.pow(2));
    CHECK_FALSE((d + m).divide_univariate(d, Var::mu).has_value());
}

TEST_CASE("mixing rings throws") {
    const auto a = field_var(Var::x, FiniteField::get(2));
    const auto b = field_var(Var::x, FiniteField::get(3));
    CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("integer overflow throws") {
    CHECK_THROWS_AS(Integer(INT64_MAX) + Integer(1), std::overflow_error);
    CHECK_THROWS_AS(exact_divide(Integer(7), Integer(2)), std::domain_error);
}
