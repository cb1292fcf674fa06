#include <random>

#include "doctest.h"
#include "picard/transform.hpp"

using namespace picard;

namespace {

Transform<FieldElement> random_transform(const FiniteField& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(0, f.order() - 1), nz(1, f.order() - 1);
    return {FieldElement::from_code(f, nz(rng)), FieldElement::from_code(f, d(rng)), FieldElement::from_code(f, d(rng)),
            FieldElement::from_code(f, d(rng))};
}

WeierstrassCurve<FieldElement> random_curve(const FiniteField& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(0, f.order() - 1);
    auto e = [&] { return FieldElement::from_code(f, d(rng)); };
    return {e(), e(), e(), e(), e()};
}

}  // namespace

TEST_CASE("derived coefficient formulas") {
    const auto& f = transform_formulas();
    CHECK(f.a1.to_string() == "a1*u - 2*s");
    CHECK(f.differential_factor == int_var(Var::v));
    CHECK(f.denominator_scale == int_var(Var::v).pow(3));
}

TEST_CASE("Delta transforms by u^12 symbolically") {
    const auto d2 = discriminant(apply_transform(generic_curve(), generic_transform()));
    CHECK(canonical(int_var(Var::u).pow(12) * discriminant(generic_curve())) == d2);
}

TEST_CASE("decomposition identity") {
    const auto one = int_const(1), zero = int_const(0);
    const auto r = int_var(Var::r), s = int_var(Var::s), t = int_var(Var::t);
    const Transform<IntPoly> jr{one, r, zero, zero}, js{one, zero, s, zero}, jt{one, zero, zero, t - r * s};
    CHECK(compose(compose(jr, js), jt) == Transform<IntPoly>{one, r, s, t});
}

TEST_CASE("group axioms on seeded samples") {
    std::mt19937_64 rng(0);
    const auto& f7 = FiniteField::get(7);
    for (int i = 0; i < 1000; ++i) {
        const auto a = random_transform(f7, rng), b = random_transform(f7, rng), c = random_transform(f7, rng);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
    const auto& f13 = FiniteField::get(13);
    const auto e = identity_transform(FieldElement(f13, 0));
    for (int i = 0; i < 100; ++i) {
        const auto g = random_transform(f13, rng);
        CHECK(compose(g, invert(g)) == e);
        CHECK(compose(invert(g), g) == e);
        CHECK(compose(g, e) == g);
    }
}

TEST_CASE("apply_transform is a right action") {
    std::mt19937_64 rng(1);
    const auto& f = FiniteField::get(7);
    for (int i = 0; i < 200; ++i) {
        const auto c = random_curve(f, rng);
        const auto g1 = random_transform(f, rng), g2 = random_transform(f, rng);
        CHECK(apply_transform(apply_transform(c, g1), g2) == apply_transform(c, compose(g1, g2)));
        CHECK(apply_transform(c, identity_transform(FieldElement(f, 0))) == c);
    }
}

TEST_CASE("pure translation and scaling") {
    const auto& f = FiniteField::get(13);
    const FieldElement z(f, 0), one(f, 1), two(f, 2);
    const WeierstrassCurve<FieldElement> c{z, z, z, one, z};
    const auto scaled = apply_transform(c, Transform<FieldElement>{two, z, z, z});
    CHECK(scaled.a4 == two.pow(4));
    CHECK(differential_factor(Transform<FieldElement>{two, z, z, z}) == two.inverse());
}

TEST_CASE("kernel generation reaches q^3") {
    for (int q : {2, 3, 7}) {
        const auto r = kernel_generation_check(FiniteField::of_order(q));
        CHECK(r.reached == static_cast<std::size_t>(q * q * q));
        CHECK(r.passed());
    }
}

TEST_CASE("character triviality") {
    for (int e = -48; e <= 48; ++e) {
        const auto d = character_trivializable(Character{e});
        CHECK(d.trivializable == (e % 12 == 0));
        if (d.trivializable) {
            CHECK(*d.m * 12 == e);
            CHECK(*d.witness_delta_exponent == -*d.m);
        }
    }
    const auto g = generic_transform();
    const UnitOnU<IntPoly> delta_inv{int_const(1), -1};
    CHECK(act_on_unit(g, delta_inv).beta == character_value(Character{12}.inverse(), g));
}

TEST_CASE("non-unit u is rejected") {
    const auto& f = FiniteField::get(5);
    const FieldElement z(f, 0);
    CHECK_THROWS_AS(invert(Transform<FieldElement>{z, z, z, z}), std::domain_error);
}
