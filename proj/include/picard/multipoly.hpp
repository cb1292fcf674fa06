#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "picard/field.hpp"
#include "picard/integer.hpp"

namespace picard {

/// The fixed variable list. Its order is the lexicographic monomial order.
enum class Var : std::uint8_t { a1, a2, a3, a4, a6, u, v, r, s, t, lam, mu, x, y, z };

inline constexpr std::size_t kVarCount = 15;

inline constexpr std::array<std::string_view, kVarCount> kVarNames = {
    "a1", "a2", "a3", "a4", "a6", "u", "v", "r", "s", "t", "lam", "mu", "x", "y", "z"};

inline std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

inline std::optional<Var> var_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kVarCount; ++i) {
        if (kVarNames[i] == name) return static_cast<Var>(i);
    }
    return std::nullopt;
}

using Exponents = std::array<std::uint8_t, kVarCount>;

/// Sparse polynomial in the fixed variables with coefficients in C
/// (Integer or FieldElement).
///
/// Canonical form: no zero coefficients are stored and terms are kept in
/// descending lexicographic order of exponent vectors, so structural equality
/// is polynomial equality. The base ring travels with the polynomial as the
/// coefficient `one`; mixing polynomials over different fields throws.
template <class C>
class MultiPoly {
public:
    using Coefficient = C;
    using TermMap = std::map<Exponents, C, std::greater<>>;

    /// The zero polynomial over the ring whose unit is `one`.
    explicit MultiPoly(C one) : one_(std::move(one)) {}

    static MultiPoly constant(const C& c) {
        MultiPoly p(constant_like(c, 1));
        if (!is_zero(c)) p.terms_.emplace(Exponents{}, c);
        return p;
    }
    static MultiPoly variable(Var v, const C& one) { return monomial(one, v, 1); }
    static MultiPoly monomial(const C& coeff, Var v, unsigned exponent) {
        Exponents e{};
        e[static_cast<std::size_t>(v)] = checked_exponent(exponent);
        return monomial(coeff, e);
    }
    static MultiPoly monomial(const C& coeff, const Exponents& e) {
        MultiPoly p(constant_like(coeff, 1));
        if (!is_zero(coeff)) p.terms_.emplace(e, coeff);
        return p;
    }

    const C& one() const { return one_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero_poly() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{}); }
    C constant_term() const { return coefficient(Exponents{}); }

    C coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? constant_like(one_, 0) : it->second;
    }

    int degree_in(Var v) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max<int>(d, e[static_cast<std::size_t>(v)]);
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (auto k : e) s += k;
            d = std::max(d, s);
        }
        return d;
    }
    bool involves(Var v) const { return degree_in(v) > 0; }

    /// Coefficients with respect to one variable: result[k] is the cofactor of v^k.
    std::map<int, MultiPoly> collect(Var v) const {
        std::map<int, MultiPoly> out;
        const auto idx = static_cast<std::size_t>(v);
        for (const auto& [e, c] : terms_) {
            Exponents rest = e;
            const int k = rest[idx];
            rest[idx] = 0;
            auto [it, inserted] = out.try_emplace(k, MultiPoly(one_));
            it->second.add_term(rest, c);
        }
        return out;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        a.require_same_ring(b);
        MultiPoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        a.require_same_ring(b);
        MultiPoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
        return out;
    }
    MultiPoly operator-() const {
        MultiPoly out(one_);
        for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
        return out;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.require_same_ring(b);
        MultiPoly out(a.one_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e{};
                for (std::size_t i = 0; i < kVarCount; ++i) e[i] = checked_exponent(unsigned{ea[i]} + eb[i]);
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    /// Scalar multiple.
    MultiPoly scaled(const C& c) const {
        MultiPoly out(one_);
        if (is_zero(c)) return out;
        for (const auto& [e, k] : terms_) out.add_term(e, k * c);
        return out;
    }

    MultiPoly pow(unsigned n) const {
        MultiPoly acc = constant(one_);
        MultiPoly base = *this;
        while (n != 0) {
            if (n & 1U) acc *= base;
            n >>= 1U;
            if (n != 0) base *= base;
        }
        return acc;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        a.require_same_ring(b);
        return a.terms_ == b.terms_;
    }

    /// Applies the rewrite u*v -> 1 until no monomial contains both u and v.
    /// This is the normal form in the localization at u.
    MultiPoly reduce_unit_relation() const {
        constexpr auto iu = static_cast<std::size_t>(Var::u);
        constexpr auto iv = static_cast<std::size_t>(Var::v);
        MultiPoly out(one_);
        for (const auto& [e, c] : terms_) {
            Exponents f = e;
            const auto k = std::min(f[iu], f[iv]);
            f[iu] = static_cast<std::uint8_t>(f[iu] - k);
            f[iv] = static_cast<std::uint8_t>(f[iv] - k);
            out.add_term(f, c);
        }
        return out;
    }

    /// Simultaneous substitution of the bound variables; unbound variables
    /// are left fixed. Bindings must share this polynomial's base ring.
    MultiPoly substitute(const std::map<Var, MultiPoly>& bindings) const {
        for (const auto& [v, b] : bindings) require_same_ring(b);
        // Cache of binding powers, indexed by variable.
        std::array<std::vector<MultiPoly>, kVarCount> powers;
        auto power_of = [&](std::size_t vi, unsigned k) -> const MultiPoly& {
            auto& cache = powers[vi];
            if (cache.empty()) cache.push_back(constant(one_));
            const auto& base = bindings.at(static_cast<Var>(vi));
            while (cache.size() <= k) cache.push_back(cache.back() * base);
            return cache[k];
        };
        MultiPoly out(one_);
        for (const auto& [e, c] : terms_) {
            Exponents fixed{};
            MultiPoly term = constant(c);
            for (std::size_t i = 0; i < kVarCount; ++i) {
                if (e[i] == 0) continue;
                if (bindings.contains(static_cast<Var>(i))) {
                    term = term * power_of(i, e[i]);
                } else {
                    fixed[i] = e[i];
                }
            }
            if (fixed != Exponents{}) term = term * monomial(one_, fixed);
            out += term;
        }
        return out;
    }

    /// Maps every coefficient through `f`, landing in MultiPoly<D>.
    template <class D, class F>
    MultiPoly<D> map_coefficients(const D& target_one, F&& f) const {
        MultiPoly<D> out(target_one);
        for (const auto& [e, c] : terms_) out = out + MultiPoly<D>::monomial(f(c), e);
        return out;
    }

    /// Exact quotient by the univariate polynomial `divisor` in `var`, whose
    /// leading coefficient must be a unit constant. Returns nullopt when the
    /// division leaves a remainder. Both sides must only involve `var`.
    std::optional<MultiPoly> divide_univariate(const MultiPoly& divisor, Var var) const;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string coeff = picard_coefficient_string(c);
            const bool is_const = e == Exponents{};
            bool negative = !coeff.empty() && coeff.front() == '-';
            if (negative) coeff.erase(0, 1);
            if (!first) os << (negative ? " - " : " + ");
            else if (negative) os << "-";
            first = false;
            const bool bracket = coeff.find('+') != std::string::npos;
            if (is_const) {
                os << coeff;
                continue;
            }
            if (coeff != "1") os << (bracket ? "(" + coeff + ")" : coeff) << "*";
            bool first_var = true;
            for (std::size_t i = 0; i < kVarCount; ++i) {
                if (e[i] == 0) continue;
                if (!first_var) os << "*";
                first_var = false;
                os << kVarNames[i];
                if (e[i] > 1) os << "^" << int{e[i]};
            }
        }
        return os.str();
    }

private:
    template <class D>
    friend class MultiPoly;

    static std::uint8_t checked_exponent(unsigned e) {
        if (e > 255) throw std::overflow_error("MultiPoly exponent exceeds 255");
        return static_cast<std::uint8_t>(e);
    }

    static std::string picard_coefficient_string(const C& c) {
        using picard::to_string;
        return to_string(c);
    }

    void require_same_ring(const MultiPoly& o) const {
        if (!(one_ == o.one_)) throw std::invalid_argument("MultiPoly base ring mismatch");
    }

    void add_term(const Exponents& e, const C& c) {
        if (is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    C one_;
    TermMap terms_;
};

template <class C>
std::optional<MultiPoly<C>> MultiPoly<C>::divide_univariate(const MultiPoly& divisor, Var var) const {
    require_same_ring(divisor);
    auto num = collect(var);
    auto den = divisor.collect(var);
    if (divisor.is_zero_poly()) throw std::domain_error("division by zero polynomial");
    for (const auto* side : {&num, &den}) {
        for (const auto& [k, c] : *side) {
            if (!c.is_constant()) throw std::invalid_argument("divide_univariate: polynomial is not univariate");
        }
    }
    const int dd = den.rbegin()->first;
    auto lead_inv = unit_inverse(den.rbegin()->second.constant_term());
    if (!lead_inv) throw std::domain_error("divide_univariate: leading coefficient is not a unit");
    MultiPoly remainder = *this;
    MultiPoly quotient(one_);
    while (!remainder.is_zero_poly()) {
        const int rd = remainder.degree_in(var);
        if (rd < dd) return std::nullopt;
        const C lead = remainder.collect(var).rbegin()->second.constant_term();
        auto step = monomial(lead * *lead_inv, var, static_cast<unsigned>(rd - dd));
        quotient += step;
        remainder -= step * divisor;
    }
    return quotient;
}

template <class C>
std::ostream& operator<<(std::ostream& os, const MultiPoly<C>& p) {
    return os << p.to_string();
}

template <class C>
std::string to_string(const MultiPoly<C>& p) {
    return p.to_string();
}

template <class C>
MultiPoly<C> constant_like(const MultiPoly<C>& like, std::int64_t n) {
    return MultiPoly<C>::constant(constant_like(like.one(), n));
}

template <class C>
bool is_zero(const MultiPoly<C>& p) {
    return p.is_zero_poly();
}

/// Polynomials are compared in the localization at u, so the canonical form
/// applies the u*v -> 1 rewrite.
template <class C>
MultiPoly<C> canonical(const MultiPoly<C>& p) {
    return p.reduce_unit_relation();
}

/// Units recognised symbolically: c*u^k and c*v^k for a unit constant c
/// (including k = 0). The inverse of u^k is v^k.
template <class C>
std::optional<MultiPoly<C>> unit_inverse(const MultiPoly<C>& p) {
    if (p.term_count() != 1) return std::nullopt;
    const auto& [e, c] = *p.terms().begin();
    auto c_inv = unit_inverse(c);
    if (!c_inv) return std::nullopt;
    constexpr auto iu = static_cast<std::size_t>(Var::u);
    constexpr auto iv = static_cast<std::size_t>(Var::v);
    Exponents f{};
    for (std::size_t i = 0; i < kVarCount; ++i) {
        if (e[i] != 0 && i != iu && i != iv) return std::nullopt;
    }
    f[iu] = e[iv];
    f[iv] = e[iu];
    return MultiPoly<C>::monomial(*c_inv, f).reduce_unit_relation();
}

using IntPoly = MultiPoly<Integer>;
using FieldPoly = MultiPoly<FieldElement>;

inline IntPoly int_var(Var v) { return IntPoly::variable(v, Integer(1)); }
inline IntPoly int_const(std::int64_t n) { return IntPoly::constant(Integer(n)); }
inline FieldPoly field_var(Var v, const FiniteField& f) { return FieldPoly::variable(v, FieldElement(f, 1)); }
inline FieldPoly field_const(const FieldElement& c) { return FieldPoly::constant(c); }

/// Reduction of integer coefficients into F: the ring map Z[vars] -> F[vars].
inline FieldPoly reduce_mod(const IntPoly& p, const FiniteField& f) {
    return p.map_coefficients(FieldElement(f, 1), [&](const Integer& c) { return FieldElement(f, c.value()); });
}

/// Evaluates an integer polynomial in any ring R; every variable appearing in
/// `p` must be bound. Products pass through canonical(), so symbolic units
/// stay reduced.
template <class R>
R evaluate(const IntPoly& p, const std::map<Var, R>& values, const R& like) {
    std::array<std::vector<R>, kVarCount> powers;
    auto power_of = [&](std::size_t vi, unsigned k) -> const R& {
        auto& cache = powers[vi];
        if (cache.empty()) cache.push_back(constant_like(like, 1));
        auto it = values.find(static_cast<Var>(vi));
        if (it == values.end()) {
            throw std::invalid_argument("evaluate: unbound variable " + std::string(kVarNames[vi]));
        }
        while (cache.size() <= k) cache.push_back(canonical(cache.back() * it->second));
        return cache[k];
    };
    R acc = constant_like(like, 0);
    for (const auto& [e, c] : p.terms()) {
        R term = constant_like(like, c.value());
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (e[i] != 0) term = canonical(term * power_of(i, e[i]));
        }
        acc = acc + term;
    }
    return canonical(acc);
}

/// Evaluates a polynomial over a finite field at field values. Coefficients
/// are embedded into the value field (prime subfield into an extension).
inline FieldElement evaluate(const FieldPoly& p, const std::map<Var, FieldElement>& values,
                             const FiniteField& target) {
    FieldElement acc(target, 0);
    for (const auto& [e, c] : p.terms()) {
        FieldElement term = c.embed(target);
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (e[i] == 0) continue;
            auto it = values.find(static_cast<Var>(i));
            if (it == values.end()) throw std::invalid_argument("evaluate: unbound variable " + std::string(kVarNames[i]));
            term = term * it->second.pow(e[i]);
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace picard
