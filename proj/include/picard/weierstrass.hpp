#pragma once

#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>

#include "picard/field.hpp"
#include "picard/fraction.hpp"
#include "picard/integer.hpp"
#include "picard/multipoly.hpp"

namespace picard {

/// What the generic curve code needs from a coefficient ring.
template <class R>
concept CoefficientRing = requires(const R& a, const R& b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { constant_like(a, 1) } -> std::convertible_to<R>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { canonical(a) } -> std::convertible_to<R>;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, all coefficients in one ring.
template <CoefficientRing R>
struct WeierstrassCurve {
    R a1, a2, a3, a4, a6;

    friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;
};

template <CoefficientRing R>
struct BInvariants {
    R b2, b4, b6, b8;
};

enum class CurveClass { Smooth, Nodal, Cuspidal };

inline std::string_view to_string(CurveClass c) {
    switch (c) {
        case CurveClass::Smooth: return "smooth";
        case CurveClass::Nodal: return "nodal";
        case CurveClass::Cuspidal: return "cuspidal";
    }
    return "?";
}

namespace detail {
template <class R>
R k(const R& like, std::int64_t n) {
    return constant_like(like, n);
}
}  // namespace detail

template <CoefficientRing R>
BInvariants<R> b_invariants(const WeierstrassCurve<R>& c) {
    using detail::k;
    const R& a1 = c.a1;
    const R& a2 = c.a2;
    const R& a3 = c.a3;
    const R& a4 = c.a4;
    const R& a6 = c.a6;
    return {
        canonical(a1 * a1 + k(a1, 4) * a2),
        canonical(a1 * a3 + k(a1, 2) * a4),
        canonical(a3 * a3 + k(a1, 4) * a6),
        canonical(-(a1 * a3 * a4) - a4 * a4 + a1 * a1 * a6 + a2 * a3 * a3 + k(a1, 4) * a2 * a6),
    };
}

template <CoefficientRing R>
R discriminant_from(const BInvariants<R>& b) {
    using detail::k;
    const R& b2 = b.b2;
    return canonical(-(b2 * b2 * b.b8) - k(b2, 8) * b.b4 * b.b4 * b.b4 - k(b2, 27) * b.b6 * b.b6 +
                     k(b2, 9) * b2 * b.b4 * b.b6);
}

template <CoefficientRing R>
R discriminant(const WeierstrassCurve<R>& c) {
    return discriminant_from(b_invariants(c));
}

template <CoefficientRing R>
R c4(const WeierstrassCurve<R>& c) {
    const auto b = b_invariants(c);
    return canonical(b.b2 * b.b2 - constant_like(b.b2, 24) * b.b4);
}

/// j = c4^3 / Delta as an unreduced fraction. Throws std::domain_error when
/// Delta vanishes (not an elliptic curve).
template <CoefficientRing R>
Fraction<R> j_invariant(const WeierstrassCurve<R>& c) {
    const R delta = discriminant(c);
    if (is_zero(delta)) throw std::domain_error("j_invariant: discriminant vanishes");
    const R c4_value = picard::c4(c);
    return Fraction<R>(canonical(c4_value * c4_value * c4_value), delta);
}

/// Value of j in the field itself.
inline FieldElement j_value(const WeierstrassCurve<FieldElement>& c) {
    const auto j = j_invariant(c);
    return j.numerator / j.denominator;
}

/// Smooth / nodal / cuspidal. Defined over fields: FieldElement, and Integer
/// read as a curve over the rationals.
template <CoefficientRing R>
    requires std::same_as<R, FieldElement> || std::same_as<R, Integer>
CurveClass classify(const WeierstrassCurve<R>& c) {
    if (!is_zero(discriminant(c))) return CurveClass::Smooth;
    return is_zero(picard::c4(c)) ? CurveClass::Cuspidal : CurveClass::Nodal;
}

/// The defining polynomial F = y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6
/// in the variables x, y.
template <class C>
MultiPoly<C> curve_equation(const WeierstrassCurve<MultiPoly<C>>& c) {
    const C& one = c.a1.one();
    const auto x = MultiPoly<C>::variable(Var::x, one);
    const auto y = MultiPoly<C>::variable(Var::y, one);
    return y * y + c.a1 * x * y + c.a3 * y - x * x * x - c.a2 * x * x - c.a4 * x - c.a6;
}

/// Tangent-cone test at a singular point (x0, y0): returns the discriminant
/// B^2 - 4AC of the quadratic part A y^2 + B xy + C x^2 of the equation
/// expanded around the point, or throws std::domain_error when the point is
/// not singular. A nonzero value means two distinct tangent directions.
template <CoefficientRing R>
R tangent_cone_discriminant(const WeierstrassCurve<R>& c, const R& x0, const R& y0) {
    using detail::k;
    // F = y^2 + a1 x y + a3 y - x^3 - a2 x^2 - a4 x - a6 and its partials.
    const R f = y0 * y0 + c.a1 * x0 * y0 + c.a3 * y0 - x0 * x0 * x0 - c.a2 * x0 * x0 - c.a4 * x0 - c.a6;
    const R fx = c.a1 * y0 - k(x0, 3) * x0 * x0 - k(x0, 2) * c.a2 * x0 - c.a4;
    const R fy = k(y0, 2) * y0 + c.a1 * x0 + c.a3;
    if (!is_zero(canonical(f)) || !is_zero(canonical(fx)) || !is_zero(canonical(fy))) {
        throw std::domain_error("tangent_cone_discriminant: point is not singular");
    }
    // Quadratic part of F(x0 + X, y0 + Y): Y^2 + a1 XY - (3 x0 + a2) X^2.
    const R a = constant_like(x0, 1);
    const R b = c.a1;
    const R cc = -(k(x0, 3) * x0 + c.a2);
    return canonical(b * b - k(x0, 4) * a * cc);
}

/// The curve with every variable a1..a6 generic, over Z.
inline WeierstrassCurve<IntPoly> generic_curve() {
    return {int_var(Var::a1), int_var(Var::a2), int_var(Var::a3), int_var(Var::a4), int_var(Var::a6)};
}

/// The generic curve with coefficients reduced into a finite field.
inline WeierstrassCurve<FieldPoly> generic_curve(const FiniteField& f) {
    return {field_var(Var::a1, f), field_var(Var::a2, f), field_var(Var::a3, f), field_var(Var::a4, f),
            field_var(Var::a6, f)};
}

template <CoefficientRing R>
std::string to_string(const WeierstrassCurve<R>& c) {
    using picard::to_string;
    return "[" + to_string(c.a1) + ", " + to_string(c.a2) + ", " + to_string(c.a3) + ", " + to_string(c.a4) + ", " +
           to_string(c.a6) + "]";
}

/// Integer curve with every coefficient reduced mod p.
inline WeierstrassCurve<FieldElement> reduce_mod(const WeierstrassCurve<Integer>& c, const FiniteField& f) {
    auto r = [&](const Integer& n) { return FieldElement(f, n.value()); };
    return {r(c.a1), r(c.a2), r(c.a3), r(c.a4), r(c.a6)};
}

}  // namespace picard
