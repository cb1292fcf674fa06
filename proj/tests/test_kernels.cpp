#include "doctest.h"
#include "picard/autgroups.hpp"
#include "picard/families.hpp"
#include "picard/kernels.hpp"

using namespace picard;

TEST_CASE("serial and parallel stabilizer scans agree") {
    for (auto [q, a3, a4] : {std::tuple{13, 0, 1}, std::tuple{7, 1, 0}, std::tuple{9, 0, 1}, std::tuple{4, 1, 0}}) {
        const auto& f = FiniteField::of_order(q);
        const WeierstrassCurve<FieldElement> c{FieldElement(f, 0), FieldElement(f, 0), FieldElement(f, a3),
                                               FieldElement(f, a4), FieldElement(f, 0)};
        CHECK(scan_stabilizer(c, ExecutionPolicy::Serial) == scan_stabilizer(c, ExecutionPolicy::Parallel));
    }
}

TEST_CASE("y^2 + y = x^3 over F4 has 24 automorphisms") {
    const auto& f = FiniteField::get(2, 2);
    const WeierstrassCurve<FieldElement> c{FieldElement(f, 0), FieldElement(f, 0), FieldElement(f, 1),
                                           FieldElement(f, 0), FieldElement(f, 0)};
    const auto a = enumerate_automorphisms(c);
    CHECK(a.order() == 24);
    CHECK_FALSE(a.group.is_cyclic());
}

TEST_CASE("serial and parallel pair checks agree") {
    const auto a = sl2f3_series_action(12);
    CHECK(a.right_action_failures(ExecutionPolicy::Serial) == a.right_action_failures(ExecutionPolicy::Parallel));
    const auto odd = failing_pairs(9, [](int x, int y) { return (x + y) % 2 == 0; }, ExecutionPolicy::Parallel);
    CHECK(odd == failing_pairs(9, [](int x, int y) { return (x + y) % 2 == 0; }, ExecutionPolicy::Serial));
    CHECK(odd.size() == 40);
    CHECK(odd.front() == std::pair{0, 1});
}

TEST_CASE("filter_indices is ordered under both policies") {
    auto div7 = [](std::int64_t i) { return i % 7 == 3; };
    const auto s = filter_indices(10000, div7, ExecutionPolicy::Serial);
    CHECK(s == filter_indices(10000, div7, ExecutionPolicy::Parallel));
    CHECK(s.size() == 1429);
    CHECK(std::is_sorted(s.begin(), s.end()));
}
