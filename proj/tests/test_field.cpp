#include "doctest.h"
#include "picard/field.hpp"

using namespace picard;

namespace {

const int kOrders[] = {2, 3, 4, 5, 7, 9, 13, 25, 49, 169};

}  // namespace

TEST_CASE("field axioms hold exhaustively") {
    for (int q : kOrders) {
        const auto& f = FiniteField::of_order(q);
        CAPTURE(f.name());
        const auto els = FieldElement::elements(f);
        REQUIRE(static_cast<int>(els.size()) == q);
        const FieldElement zero(f, 0), one(f, 1);
        for (const auto& a : els) {
            CHECK(a + zero == a);
            CHECK(a * one == a);
            CHECK(a + (-a) == zero);
            if (!a.is_zero()) CHECK(a * a.inverse() == one);
            for (const auto& b : els) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                if (q <= 49) {
                    for (const auto& c : els) {
                        if ((a.code() + b.code() + c.code()) % 3 != 0 && q > 9) continue;
                        CHECK((a + b) + c == a + (b + c));
                        CHECK((a * b) * c == a * (b * c));
                        CHECK(a * (b + c) == a * b + a * c);
                    }
                }
            }
        }
    }
}

TEST_CASE("defining relations of the extension generators") {
    const auto& f4 = FiniteField::get(2, 2);
    const auto w = FieldElement::generator(f4);
    CHECK(w * w == w + FieldElement(f4, 1));
    CHECK(w.pow(3) == FieldElement(f4, 1));
    CHECK(w.frobenius() == w * w);
    CHECK(to_string(w * w) == "1+w");

    const auto& f9 = FiniteField::get(3, 2);
    const auto i = FieldElement::generator(f9);
    CHECK(i * i == FieldElement(f9, -1));
    CHECK(i.multiplicative_order() == 4);

    const auto& f169 = FiniteField::get(13, 2);
    const auto g = FieldElement::generator(f169);
    CHECK(g * g == FieldElement(f169, 2));
}

TEST_CASE("multiplicative groups are cyclic of order q - 1") {
    for (int q : kOrders) {
        const auto& f = FiniteField::of_order(q);
        auto gen = primitive_root_of_unity(f, q - 1);
        REQUIRE(gen.has_value());
        CHECK(gen->multiplicative_order() == q - 1);
    }
}

TEST_CASE("roots of unity used by the automorphism characters") {
    CHECK(primitive_root_of_unity(FiniteField::get(13), 4)->code() == 5);
    CHECK(primitive_root_of_unity(FiniteField::get(7), 6)->code() == 3);
    CHECK_FALSE(primitive_root_of_unity(FiniteField::get(7), 4).has_value());
}

TEST_CASE("embedding of the prime field and errors") {
    const auto& f3 = FiniteField::get(3);
    const auto& f9 = FiniteField::get(3, 2);
    CHECK(FieldElement(f3, 2).embed(f9) == FieldElement(f9, 2));
    CHECK_THROWS_AS(FieldElement(f3, 1) + FieldElement(f9, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldElement(f3, 0).inverse(), std::domain_error);
    CHECK_THROWS_AS(FiniteField::get(11), std::invalid_argument);
    CHECK_THROWS(FieldElement::generator(f3));
}

TEST_CASE("frobenius is a field automorphism") {
    for (int q : {4, 9, 25, 49, 169}) {
        const auto& f = FiniteField::of_order(q);
        for (const auto& a : FieldElement::elements(f)) {
            CHECK(a.frobenius() == a.pow(f.characteristic()));
            CHECK(a.frobenius().frobenius() == a);
        }
    }
}
