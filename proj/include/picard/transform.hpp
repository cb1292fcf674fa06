#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "picard/field.hpp"
#include "picard/multipoly.hpp"
#include "picard/weierstrass.hpp"

namespace picard {

/// Element (u, r, s, t) of the coordinate-change group G, acting by
///   x' = u^2 x + r,   y' = u^3 y + s u^2 x + t.
template <CoefficientRing R>
struct Transform {
    R u, r, s, t;

    friend bool operator==(const Transform&, const Transform&) = default;
};

template <CoefficientRing R>
Transform<R> identity_transform(const R& like) {
    return {constant_like(like, 1), constant_like(like, 0), constant_like(like, 0), constant_like(like, 0)};
}

/// Symbolic transform (u, r, s, t) over Z with u invertible through v.
inline Transform<IntPoly> generic_transform() {
    return {int_var(Var::u), int_var(Var::r), int_var(Var::s), int_var(Var::t)};
}

/// Coefficient formulas of the coordinate change, derived once by
/// substituting x = v^2 (x' - r), y = v^3 (y' - s (x' - r) - t) into the
/// generic Weierstrass equation, scaling by u^6 and reducing by u*v = 1.
struct TransformFormulas {
    /// New a1..a6 as polynomials in a1..a6, u, v, r, s, t.
    IntPoly a1, a2, a3, a4, a6;
    /// The lambda with (2y + a1 x + a3)|substituted = lambda * (2y' + a1' x' + a3').
    IntPoly denominator_scale;
    /// dx/dx' read off the x-substitution.
    IntPoly dx_scale;
    /// pi' = factor * pi, where pi = dx/(2y + a1 x + a3).
    IntPoly differential_factor;
};

/// Computed on first use; thread-safe.
const TransformFormulas& transform_formulas();

/// Group law with g2 as the primed (left) factor:
///   (u',r',s',t') . (u,r,s,t) = (u u', u^2 r' + r, u s' + s, u^3 t' + u^2 r' s + t).
template <CoefficientRing R>
Transform<R> compose(const Transform<R>& g2, const Transform<R>& g1) {
    const R u2 = canonical(g1.u * g1.u);
    return {canonical(g1.u * g2.u), canonical(u2 * g2.r + g1.r), canonical(g1.u * g2.s + g1.s),
            canonical(u2 * g1.u * g2.t + u2 * g2.r * g1.s + g1.t)};
}

template <CoefficientRing R>
R require_unit_inverse(const R& u) {
    auto inv = unit_inverse(u);
    if (!inv) throw std::domain_error("transform: u is not a unit");
    return *inv;
}

/// Two-sided inverse, solved coordinate by coordinate from compose(g, h) = e.
template <CoefficientRing R>
Transform<R> invert(const Transform<R>& g) {
    const R w = require_unit_inverse(g.u);
    const R w2 = canonical(w * w);
    const R r = canonical(-(w2 * g.r));
    const R s = canonical(-(w * g.s));
    const R t = canonical(-(w2 * w * g.t) - w2 * g.r * s);
    return {w, r, s, t};
}

namespace detail {
template <CoefficientRing R>
std::map<Var, R> transform_bindings(const WeierstrassCurve<R>& c, const Transform<R>& g) {
    return {{Var::a1, c.a1}, {Var::a2, c.a2}, {Var::a3, c.a3}, {Var::a4, c.a4}, {Var::a6, c.a6},
            {Var::u, g.u},   {Var::v, require_unit_inverse(g.u)},  {Var::r, g.r},   {Var::s, g.s},
            {Var::t, g.t}};
}
}  // namespace detail

/// The curve written in the primed coordinates of g. Applying g1 and then g2
/// equals applying compose(g1, g2): the action is a right action.
template <CoefficientRing R>
WeierstrassCurve<R> apply_transform(const WeierstrassCurve<R>& c, const Transform<R>& g) {
    const auto& f = transform_formulas();
    const auto values = detail::transform_bindings(c, g);
    const R& like = c.a1;
    return {evaluate(f.a1, values, like), evaluate(f.a2, values, like), evaluate(f.a3, values, like),
            evaluate(f.a4, values, like), evaluate(f.a6, values, like)};
}

/// The factor by which g rescales the invariant differential (u^{-1}).
template <CoefficientRing R>
R differential_factor(const Transform<R>& g) {
    const std::map<Var, R> values{{Var::u, g.u}, {Var::v, require_unit_inverse(g.u)}};
    return evaluate(transform_formulas().differential_factor, values, g.u);
}

/// R-power with negative exponents through unit_inverse.
template <CoefficientRing R>
R signed_power(const R& x, std::int64_t e) {
    R base = e < 0 ? require_unit_inverse(x) : x;
    R acc = constant_like(x, 1);
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) acc = canonical(acc * base);
    return acc;
}

/// The character chi0^exponent : (u, r, s, t) -> u^exponent.
struct Character {
    int exponent = 0;

    friend Character operator*(Character a, Character b) { return {a.exponent + b.exponent}; }
    Character inverse() const { return {-exponent}; }
    friend bool operator==(Character, Character) = default;
};

template <CoefficientRing R>
R character_value(Character chi, const Transform<R>& g) {
    return signed_power(g.u, chi.exponent);
}

/// The unit beta * Delta^m on the space of Weierstrass curves.
template <CoefficientRing R>
struct UnitOnU {
    R beta;
    int m = 0;

    friend bool operator==(const UnitOnU& a, const UnitOnU& b) {
        return a.m == b.m && canonical(a.beta) == canonical(b.beta);
    }
};

/// g * (beta Delta^m) = beta u^{12m} Delta^m.
template <CoefficientRing R>
UnitOnU<R> act_on_unit(const Transform<R>& g, const UnitOnU<R>& w) {
    return {canonical(w.beta * signed_power(g.u, 12 * static_cast<std::int64_t>(w.m))), w.m};
}

/// chi = chi0^e is trivializable iff e = 12m; the unit Delta^{-m} then
/// transforms by chi^{-1}.
struct TrivializationDecision {
    bool trivializable = false;
    std::optional<int> m;
    /// Exponent of Delta in the trivializing unit (-m).
    std::optional<int> witness_delta_exponent;
};

TrivializationDecision character_trivializable(Character chi);

struct KernelGenerationReport {
    int field_order = 0;
    std::size_t expected = 0;   ///< q^3
    std::size_t reached = 0;    ///< size of the closure of j_r, j_s, j_t
    bool closure_in_kernel = false;
    bool decomposition_holds = false;  ///< (1,r,0,0)(1,0,s,0)(1,0,0,t-rs) = (1,r,s,t) for all r,s,t
    bool passed() const { return reached == expected && closure_in_kernel && decomposition_holds; }
};

/// Closes {(1,x,0,0), (1,0,x,0), (1,0,0,x) : x in F} under compose and
/// compares with the kernel {(1,r,s,t)} of chi0.
KernelGenerationReport kernel_generation_check(const FiniteField& field);

/// Dense index of a transform over a finite field: ((u q + r) q + s) q + t.
std::int64_t transform_code(const Transform<FieldElement>& g);

template <CoefficientRing R>
std::string to_string(const Transform<R>& g) {
    using picard::to_string;
    return "(" + to_string(g.u) + ", " + to_string(g.r) + ", " + to_string(g.s) + ", " + to_string(g.t) + ")";
}

}  // namespace picard
