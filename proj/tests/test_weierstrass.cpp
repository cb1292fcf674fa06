#include <random>

#include "doctest.h"
#include "picard/weierstrass.hpp"

using namespace picard;

namespace {

WeierstrassCurve<Integer> z_curve(std::int64_t a1, std::int64_t a2, std::int64_t a3, std::int64_t a4, std::int64_t a6) {
    return {a1, a2, a3, a4, a6};
}

}  // namespace

TEST_CASE("y^2 = x^3 + x has Delta = -64 and j = 1728") {
    const auto c = z_curve(0, 0, 0, 1, 0);
    CHECK(discriminant(c) == Integer(-64));
    CHECK(j_invariant(c) == Fraction<Integer>(1728, 1));
    CHECK(c4(c) == Integer(-48));
}

TEST_CASE("y^2 + y = x^3 has Delta = -27 and j = 0") {
    const auto c = z_curve(0, 0, 1, 0, 0);
    CHECK(discriminant(c) == Integer(-27));
    CHECK(j_invariant(c) == Fraction<Integer>(0, 1));
}

TEST_CASE("b-invariant relation 4 b8 = b2 b6 - b4^2") {
    const auto b = b_invariants(generic_curve());
    CHECK(int_const(4) * b.b8 == b.b2 * b.b6 - b.b4 * b.b4);
}

TEST_CASE("c4 in small characteristic") {
    const auto c2 = generic_curve(FiniteField::get(2));
    CHECK(c4(c2) == c2.a1.pow(4));
    const auto c3 = generic_curve(FiniteField::get(3));
    CHECK(c4(c3) == (c3.a1 * c3.a1 + c3.a2).pow(2));
    CHECK_FALSE(c4(c3) == (c3.a1 + c3.a2).pow(2));
}

TEST_CASE("reduction mod p commutes with the discriminant") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> d(-30, 30);
    for (int i = 0; i < 300; ++i) {
        const auto c = z_curve(d(rng), d(rng), d(rng), d(rng), d(rng));
        for (int p : {2, 3, 5, 7, 13}) {
            const auto& f = FiniteField::get(p);
            CHECK(discriminant(reduce_mod(c, f)) == FieldElement(f, discriminant(c).value()));
            CHECK(c4(reduce_mod(c, f)) == FieldElement(f, c4(c).value()));
        }
    }
}

TEST_CASE("classification") {
    CHECK(classify(z_curve(0, 0, 0, 1, 0)) == CurveClass::Smooth);
    const auto node = z_curve(0, 1, 0, 0, 0);
    CHECK(classify(node) == CurveClass::Nodal);
    CHECK(tangent_cone_discriminant(node, Integer(0), Integer(0)) == Integer(4));
    CHECK(classify(z_curve(0, 0, 0, 0, 0)) == CurveClass::Cuspidal);
    CHECK_THROWS_AS(tangent_cone_discriminant(node, Integer(1), Integer(0)), std::domain_error);
    CHECK(to_string(CurveClass::Nodal) == "nodal");

    const auto& f5 = FiniteField::get(5);
    const WeierstrassCurve<FieldElement> cusp{FieldElement(f5, 0), FieldElement(f5, 0), FieldElement(f5, 0),
                                              FieldElement(f5, 0), FieldElement(f5, 0)};
    CHECK(classify(cusp) == CurveClass::Cuspidal);
}

TEST_CASE("j of a singular curve throws") {
    CHECK_THROWS_AS(j_invariant(z_curve(0, 0, 0, 0, 0)), std::domain_error);
}

TEST_CASE("j over a finite field") {
    const auto& f = FiniteField::get(13);
    const WeierstrassCurve<FieldElement> c{FieldElement(f, 0), FieldElement(f, 0), FieldElement(f, 0),
                                           FieldElement(f, 1), FieldElement(f, 0)};
    CHECK(j_value(c) == FieldElement(f, 1728));
}
