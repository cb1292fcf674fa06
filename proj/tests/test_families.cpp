#include "doctest.h"
#include "picard/families.hpp"

using namespace picard;

TEST_CASE("Legendre discriminant and j identity") {
    const auto r = legendre_j_check();
    CHECK(r.discriminant_unit_multiple);
    CHECK(r.j_identity);
    CHECK(r.degrees_match);
    CHECK(r.j_zero_at_minus_one);
    CHECK(r.singular_at_zero);
    CHECK(r.f9_spot_checks);
    CHECK(r.f9_points == 7);
    const auto c = legendre_curve();
    CHECK(c.a4 == field_var(Var::lam, FiniteField::get(3)));
}

TEST_CASE("S3 action over F3") {
    const auto a = s3_action(24);
    CHECK(a.order() == 6);
    CHECK(a.right_action_failures().empty());
    CHECK(a.substitutions_valid());
    CHECK(s3_relations(24).passed());
    const auto j = legendre_j_series(24);
    for (int s = 0; s < a.order(); ++s) CHECK(a.act(j, s) == j);
    CHECK_THROWS_AS(s3_action(5), std::invalid_argument);
}

TEST_CASE("S3 alpha acts by mu -> -mu") {
    const auto a = s3_action(6);
    const auto mu = TruncatedSeries::mu(FiniteField::get(3), 6);
    CHECK(a.act(mu, a.generators[0]) == -mu);
}

TEST_CASE("Hesse cubic to Weierstrass form") {
    const auto m = hesse_curve_to_weierstrass();
    const auto& f = FiniteField::get(2);
    const auto mu = field_var(Var::mu, f);
    const auto one = field_const(FieldElement(f, 1));
    const auto d = mu.pow(3) + one;
    CHECK(m.flex.is_flex());
    CHECK(m.curve.a1 == mu);
    CHECK(m.curve.a2 == mu * mu);
    CHECK(m.curve.a3 == d);
    CHECK(m.curve.a4 == mu * d);
    CHECK(m.curve.a6 == d * d);
    CHECK(m.j_identity);
    CHECK(m.discriminant_power == 3);
    CHECK(c4(m.curve) == mu.pow(4));
}

TEST_CASE("the Hessian is useless in characteristic 2") {
    CHECK(hessian_determinant(hesse_cubic(FiniteField::get(2))).is_zero_poly());
}

TEST_CASE("tangent contact distinguishes flexes") {
    const auto& f4 = FiniteField::get(2, 2);
    const auto cubic = hesse_cubic(f4);
    auto k = [&](int c) { return field_const(FieldElement(f4, c)); };
    const auto t = hesse_torsion_points_check();
    CHECK(t.passed());
    CHECK(t.hessian_identically_zero);
    // A non-flex: y^2 z = x^3 + x z^2 at (0:0:1) has a simple tangent.
    const auto x = field_var(Var::x, FiniteField::get(3)), y = field_var(Var::y, FiniteField::get(3)),
               z = field_var(Var::z, FiniteField::get(3));
    const auto e = y * y * z - x * x * x - x * z * z;
    const auto k3 = [&](int c) { return field_const(FieldElement(FiniteField::get(3), c)); };
    const auto r = flex_check(e, {k3(0), k3(0), k3(1)});
    CHECK(r.on_curve);
    CHECK(r.smooth);
    CHECK_FALSE(r.tangent_contact);
    CHECK(flex_check(e, {k3(0), k3(1), k3(0)}).is_flex());
    CHECK_FALSE(flex_check(cubic, {k(1), k(0), k(0)}).on_curve);
}

TEST_CASE("GL2(F3) acts on (mu, omega)") {
    const auto r = gl2f3_action_check();
    CHECK(r.group_order == 48);
    CHECK(r.failing_pairs.empty());
    CHECK(r.omega_fixing == 24);
    CHECK(r.determinant_one == 24);
    CHECK(r.fixing_equals_sl2);
    CHECK(r.diagonal_conjugates);
    CHECK(r.passed());
}

TEST_CASE("SL2(F3) series action over F4") {
    const auto a = sl2f3_series_action(24);
    CHECK(a.order() == 24);
    CHECK(a.substitutions_valid());
    const auto mu = TruncatedSeries::mu(*a.field, 24);
    const int beta = a.generators[1];
    CHECK(a.substitution[static_cast<std::size_t>(a.group.multiply(beta, beta))] == mu);
    const auto j = hesse_j_series(24);
    for (int s = 0; s < a.order(); ++s) CHECK(a.act(j, s) == j);
    const auto w = FieldElement::generator(*a.field);
    CHECK(a.act(mu, a.generators[0]) == mu.scaled(w));
    CHECK_THROWS_AS(sl2f3_series_action(11), std::invalid_argument);
}

TEST_CASE("Mobius expansions") {
    const auto& f4 = FiniteField::get(2, 2);
    const FieldElement one(f4, 1), zero(f4, 0);
    const Mobius beta{one, zero, one, one};
    CHECK(projectively_equal(mobius_multiply(beta, beta), {one, zero, zero, one}));
    const auto s = mobius_series(beta, 8);
    for (int i = 1; i < 8; ++i) CHECK(s[i] == one);
    CHECK_THROWS_AS(mobius_series({one, one, zero, one}, 8), std::domain_error);
}

TEST_CASE("trivial actions") {
    const auto z = z2_trivial_action(3);
    CHECK(z.order() == 2);
    CHECK(z.right_action_failures().empty());
    CHECK(z.substitutions_valid());
    CHECK(z2_trivial_action(1).substitutions_valid());
}
