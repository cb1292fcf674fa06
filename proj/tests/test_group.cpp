#include "doctest.h"
#include "picard/group.hpp"

using namespace picard;

TEST_CASE("cyclic groups") {
    const auto g = FiniteGroup::cyclic(6);
    CHECK(g.order() == 6);
    CHECK(g.verify_associativity());
    CHECK(g.is_cyclic());
    CHECK(g.element_order(2) == 3);
    CHECK(g.power(1, -1) == 5);
    CHECK(g.center().size() == 6);
}

TEST_CASE("GL2(F3) and SL2(F3) by closure") {
    const auto gl = matrix_group({{1, 0, 2, 1}, {0, 2, 1, 0}, {1, 0, 0, 2}});
    CHECK(gl.group.order() == 48);
    CHECK(gl.group.verify_associativity());
    CHECK(gl.group.center().size() == 2);
    const auto sl = matrix_group({{1, 0, 2, 1}, {0, 2, 1, 0}});
    CHECK(sl.group.order() == 24);
    for (const auto& m : sl.elements) CHECK(mat_determinant(m) == 1);
    CHECK_FALSE(sl.group.is_cyclic());
}

TEST_CASE("closure records generator words") {
    const auto c = matrix_group({{1, 1, 0, 1}});
    REQUIRE(c.group.order() == 3);
    CHECK(c.parent[0] == -1);
    for (std::size_t i = 1; i < c.elements.size(); ++i) {
        CHECK(mat_multiply(c.elements[static_cast<std::size_t>(c.parent[i])], Mat2F3{1, 1, 0, 1}) == c.elements[i]);
    }
}

TEST_CASE("relabelling preserves the group") {
    const auto sl = matrix_group({{1, 0, 2, 1}, {0, 2, 1, 0}});
    std::vector<int> perm(24);
    for (int i = 0; i < 24; ++i) perm[static_cast<std::size_t>(i)] = 23 - i;
    const auto p = sl.group.permuted(perm);
    CHECK(p.verify_associativity());
    CHECK(p.matrices()[0] == sl.elements[23]);
    CHECK(p.center().size() == 2);
}

TEST_CASE("invalid tables are rejected") {
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroup({{0, 2}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroup({}), std::invalid_argument);
}
