#pragma once

#include <stdexcept>
#include <string>

namespace picard {

/// numerator / denominator over a commutative ring R, without reduction.
/// Equality is by cross-multiplication, which is sound as long as
/// denominators are non-zero-divisors (true for all rings used here).
template <class R>
struct Fraction {
    R numerator;
    R denominator;

    Fraction(R num, R den) : numerator(std::move(num)), denominator(std::move(den)) {
        if (is_zero(denominator)) throw std::domain_error("Fraction with zero denominator");
    }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return canonical(a.numerator * b.denominator) == canonical(b.numerator * a.denominator);
    }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return {canonical(a.numerator * b.numerator), canonical(a.denominator * b.denominator)};
    }
    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return {canonical(a.numerator * b.denominator + b.numerator * a.denominator),
                canonical(a.denominator * b.denominator)};
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        return {canonical(a.numerator * b.denominator - b.numerator * a.denominator),
                canonical(a.denominator * b.denominator)};
    }
};

template <class R>
std::string to_string(const Fraction<R>& f) {
    return "(" + to_string(f.numerator) + ")/(" + to_string(f.denominator) + ")";
}

}  // namespace picard
