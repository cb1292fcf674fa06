#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "picard/field.hpp"

namespace picard {

/// c0 + c1*mu + ... + c_{N-1}*mu^{N-1} over a finite field, at precision N.
///
/// Every operation returns a series of the same precision; higher-order
/// terms are dropped without error.
class TruncatedSeries {
public:
    /// Zero series.
    TruncatedSeries(const FiniteField& field, int precision);
    /// Takes coefficients c0, c1, ...; the list is padded with zeros or
    /// truncated to `precision`.
    TruncatedSeries(const FiniteField& field, int precision, const std::vector<FieldElement>& coeffs);

    static TruncatedSeries constant(const FieldElement& c, int precision);
    /// The series mu (zero when precision is 1).
    static TruncatedSeries mu(const FiniteField& field, int precision);
    /// c * mu^k.
    static TruncatedSeries monomial(const FieldElement& c, int k, int precision);
    /// Integer coefficients reduced into the field.
    static TruncatedSeries from_ints(const FiniteField& field, int precision, const std::vector<long>& coeffs);

    const FiniteField& field() const { return *field_; }
    int precision() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<FieldElement>& coefficients() const { return coeffs_; }
    const FieldElement& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

    /// Least i with c_i != 0, or N for the zero series.
    int valuation() const;
    bool is_unit() const { return !coeffs_.front().is_zero(); }
    bool is_zero() const { return valuation() == precision(); }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scaled(const FieldElement& c) const;
    TruncatedSeries pow(unsigned n) const;
    /// Applies x -> x^p to every coefficient.
    TruncatedSeries frobenius() const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

private:
    void require_compatible(const TruncatedSeries& o) const;

    const FiniteField* field_;
    std::vector<FieldElement> coeffs_;
};

/// f * g; throws std::invalid_argument on mismatched field or precision.
TruncatedSeries series_multiply(const TruncatedSeries& f, const TruncatedSeries& g);

/// f(g(mu)) truncated at N. Requires valuation(g) >= 1 (std::domain_error
/// otherwise); with that, substitution is a ring homomorphism mod mu^N.
TruncatedSeries series_substitute(const TruncatedSeries& f, const TruncatedSeries& g);

/// Multiplicative inverse; std::domain_error unless c0 != 0.
TruncatedSeries series_invert(const TruncatedSeries& f);

/// Compositional inverse of g with valuation exactly 1: the h with
/// g(h(mu)) = h(g(mu)) = mu mod mu^N.
TruncatedSeries series_reversion(const TruncatedSeries& g);

std::string to_string(const TruncatedSeries& f);
std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f);

}  // namespace picard
