#include <random>

#include "doctest.h"
#include "picard/linalg.hpp"

using namespace picard;

TEST_CASE("reduced echelon form is canonical") {
    const auto& f = FiniteField::get(3);
    EchelonBasis a(f, 3), b(f, 3);
    a.insert({1, 1, 0});
    a.insert({0, 1, 1});
    b.insert({1, 0, 2});
    b.insert({2, 2, 0});
    CHECK(a == b);
    CHECK(a.rank() == 2);
    CHECK(a.pivots() == std::vector<int>{0, 1});
    CHECK_FALSE(a.insert({1, 0, 2}));
    CHECK(a.contains({2, 2, 0}));
}

TEST_CASE("nullspace is orthogonal to the rows and has complementary dimension") {
    std::mt19937_64 rng(5);
    for (int q : {2, 3, 4, 9, 13}) {
        const auto& f = FiniteField::of_order(q);
        std::uniform_int_distribution<int> d(0, q - 1);
        for (int trial = 0; trial < 30; ++trial) {
            const int w = 1 + trial % 9;
            EchelonBasis rows(f, w);
            for (int r = 0; r < trial % 6; ++r) {
                CodeVector v(static_cast<std::size_t>(w));
                for (auto& c : v) c = static_cast<std::uint8_t>(d(rng));
                rows.insert(v);
            }
            const auto null = rows.nullspace();
            CHECK(static_cast<int>(null.size()) == w - rows.rank());
            for (const auto& x : null) {
                for (const auto& r : rows.rows()) {
                    std::uint8_t dot = 0;
                    for (int i = 0; i < w; ++i) dot = f.add(dot, f.mul(r[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i)]));
                    CHECK(dot == 0);
                }
            }
        }
    }
}

TEST_CASE("width mismatch throws") {
    EchelonBasis a(FiniteField::get(2), 3);
    CHECK_THROWS_AS(a.insert({1, 0}), std::invalid_argument);
}
