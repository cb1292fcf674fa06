#include "doctest.h"
#include "picard/autgroups.hpp"

using namespace picard;

namespace {

WeierstrassCurve<FieldElement> curve(const FiniteField& f, int a1, int a2, int a3, int a4, int a6) {
    return {FieldElement(f, a1), FieldElement(f, a2), FieldElement(f, a3), FieldElement(f, a4), FieldElement(f, a6)};
}

}  // namespace

TEST_CASE("y^2 = x^3 + x over F13 has cyclic automorphism group of order 4") {
    const auto a = enumerate_automorphisms(curve(FiniteField::get(13), 0, 0, 0, 1, 0));
    CHECK(a.order() == 4);
    CHECK(a.group.is_cyclic());
    const auto ch = mu4_character(a);
    CHECK(ch.exponent == 1);
    CHECK(ch.zeta.code() == 5);
    for (const auto& g : a.elements) CHECK(apply_transform(a.curve, g) == a.curve);
}

TEST_CASE("y^2 + y = x^3 over F7 has cyclic automorphism group of order 6") {
    const auto a = enumerate_automorphisms(curve(FiniteField::get(7), 0, 0, 1, 0, 0));
    CHECK(a.order() == 6);
    const auto d = mu6_character(a);
    CHECK(d.character.exponent == 1);
    CHECK(a.group.element_order(d.order_two) == 2);
    CHECK(a.group.element_order(d.order_three) == 3);
}

TEST_CASE("a generic curve only has -1") {
    const auto a = enumerate_automorphisms(curve(FiniteField::get(13), 0, 0, 0, 1, 1));
    CHECK(a.order() == 2);
}

TEST_CASE("singular curves are rejected") {
    CHECK_THROWS_AS(enumerate_automorphisms(curve(FiniteField::get(7), 0, 0, 0, 0, 0)), std::domain_error);
}

TEST_CASE("characters of lambda") {
    const auto one = chi_pair(1);
    CHECK(one.chi4 == 1);
    CHECK(one.chi6 == 1);
    CHECK(one.z12 == 1);
    for (int i = 0; i < 24; ++i) {
        const auto p = chi_pair(i);
        CHECK(p.chi4 % 2 == p.chi6 % 2);
        CHECK(p.z12 == i % 12);
    }
    CHECK(chi_pair(12).z12 == 0);
    CHECK(crt_4_6(1, 3) == 9);
    CHECK_FALSE(crt_4_6(1, 2).has_value());
    CHECK_THROWS_AS(chi_pair(1, {1, 2}), std::logic_error);
}

TEST_CASE("point maps") {
    const auto& f = FiniteField::get(7);
    const FieldElement u(f, 3), r(f, 1), s(f, 2), t(f, 5);
    const auto m = point_map({u, r, s, t});
    CHECK(m.x_scale == u * u);
    CHECK(m.y_scale == u * u * u);
    CHECK(m.y_x == s * u * u);
}
