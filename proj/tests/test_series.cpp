#include <random>

#include "doctest.h"
#include "picard/series.hpp"

using namespace picard;

namespace {

TruncatedSeries random_series(const FiniteField& f, int n, std::mt19937_64& rng, int min_valuation = 0) {
    std::uniform_int_distribution<int> d(0, f.order() - 1);
    std::vector<FieldElement> cs;
    for (int i = 0; i < n; ++i) cs.push_back(i < min_valuation ? FieldElement(f, 0) : FieldElement::from_code(f, d(rng)));
    return TruncatedSeries(f, n, cs);
}

}  // namespace

TEST_CASE("geometric series inverts 1 - mu") {
    const auto& f = FiniteField::get(3);
    const auto one = TruncatedSeries::constant(FieldElement(f, 1), 8);
    const auto mu = TruncatedSeries::mu(f, 8);
    const auto inv = series_invert(one - mu);
    for (int i = 0; i < 8; ++i) CHECK(inv[i] == FieldElement(f, 1));
    CHECK_THROWS_AS(series_invert(mu), std::domain_error);
}

TEST_CASE("valuation and truncation") {
    const auto& f = FiniteField::get(2);
    CHECK(TruncatedSeries(f, 5).valuation() == 5);
    CHECK(TruncatedSeries::monomial(FieldElement(f, 1), 3, 5).valuation() == 3);
    CHECK(TruncatedSeries::monomial(FieldElement(f, 1), 7, 5).is_zero());
    CHECK(TruncatedSeries::mu(f, 1).is_zero());
    CHECK_THROWS_AS(TruncatedSeries(f, 0), std::invalid_argument);
}

TEST_CASE("substitution needs positive valuation") {
    const auto& f = FiniteField::get(5);
    const auto g = TruncatedSeries::constant(FieldElement(f, 1), 4);
    CHECK_THROWS_AS(series_substitute(TruncatedSeries::mu(f, 4), g), std::domain_error);
    CHECK_THROWS_AS(series_substitute(TruncatedSeries::mu(f, 4), TruncatedSeries::mu(f, 5)), std::invalid_argument);
}

TEST_CASE("mu/(1-mu) composed with itself three times is mu over F3") {
    const auto& f = FiniteField::get(3);
    const int n = 24;
    const auto one = TruncatedSeries::constant(FieldElement(f, 1), n);
    const auto mu = TruncatedSeries::mu(f, n);
    const auto beta = mu * series_invert(one - mu);
    CHECK(series_substitute(series_substitute(beta, beta), beta) == mu);
}

TEST_CASE("ring and composition properties on random series") {
    std::mt19937_64 rng(7);
    for (int q : {2, 3, 4, 9, 13}) {
        const auto& f = FiniteField::of_order(q);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 1 + trial % 12;
            const auto a = random_series(f, n, rng), b = random_series(f, n, rng), c = random_series(f, n, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (a.is_unit()) CHECK(a * series_invert(a) == TruncatedSeries::constant(FieldElement(f, 1), n));
            const auto g = random_series(f, n, rng, 1), h = random_series(f, n, rng, 1);
            // Substitution is a ring homomorphism and composition is associative.
            CHECK(series_substitute(a * b, g) == series_substitute(a, g) * series_substitute(b, g));
            CHECK(series_substitute(a + b, g) == series_substitute(a, g) + series_substitute(b, g));
            CHECK(series_substitute(series_substitute(a, g), h) == series_substitute(a, series_substitute(g, h)));
            if (n >= 2 && !g[1].is_zero()) {
                const auto r = series_reversion(g);
                CHECK(series_substitute(g, r) == TruncatedSeries::mu(f, n));
                CHECK(series_substitute(r, g) == TruncatedSeries::mu(f, n));
            }
        }
    }
}

TEST_CASE("frobenius of coefficients") {
    const auto& f4 = FiniteField::get(2, 2);
    const auto w = FieldElement::generator(f4);
    const auto s = TruncatedSeries(f4, 3, {w, FieldElement(f4, 1), w * w});
    const auto t = s.frobenius();
    CHECK(t[0] == w * w);
    CHECK(t[1] == FieldElement(f4, 1));
    CHECK(t[2] == w);
}
