#include "picard/series.hpp"

#include <sstream>
#include <stdexcept>

namespace picard {

TruncatedSeries::TruncatedSeries(const FiniteField& field, int precision) : field_(&field) {
    if (precision < 1) throw std::invalid_argument("series precision must be positive");
    coeffs_.assign(static_cast<std::size_t>(precision), FieldElement(field, 0));
}

TruncatedSeries::TruncatedSeries(const FiniteField& field, int precision, const std::vector<FieldElement>& coeffs)
    : TruncatedSeries(field, precision) {
    for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) {
        if (&coeffs[i].field() != field_) throw std::invalid_argument("series coefficient from a different field");
        coeffs_[i] = coeffs[i];
    }
}

TruncatedSeries TruncatedSeries::constant(const FieldElement& c, int precision) {
    return TruncatedSeries(c.field(), precision, {c});
}

TruncatedSeries TruncatedSeries::mu(const FiniteField& field, int precision) {
    return monomial(FieldElement(field, 1), 1, precision);
}

TruncatedSeries TruncatedSeries::monomial(const FieldElement& c, int k, int precision) {
    TruncatedSeries out(c.field(), precision);
    if (k < 0) throw std::invalid_argument("negative monomial degree");
    if (k < precision) out.coeffs_[static_cast<std::size_t>(k)] = c;
    return out;
}

TruncatedSeries TruncatedSeries::from_ints(const FiniteField& field, int precision, const std::vector<long>& coeffs) {
    std::vector<FieldElement> cs;
    cs.reserve(coeffs.size());
    for (long c : coeffs) cs.emplace_back(field, c);
    return TruncatedSeries(field, precision, cs);
}

int TruncatedSeries::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return static_cast<int>(i);
    }
    return precision();
}

void TruncatedSeries::require_compatible(const TruncatedSeries& o) const {
    if (field_ != o.field_) throw std::invalid_argument("series over different fields");
    if (coeffs_.size() != o.coeffs_.size()) throw std::invalid_argument("series precision mismatch");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    require_compatible(o);
    TruncatedSeries out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    require_compatible(o);
    TruncatedSeries out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= o.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    require_compatible(o);
    const auto n = coeffs_.size();
    const FiniteField& f = *field_;
    // Raw codes keep the inner loop on table lookups.
    std::vector<std::uint8_t> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto a = static_cast<std::uint8_t>(coeffs_[i].code());
        if (a == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            const auto b = static_cast<std::uint8_t>(o.coeffs_[j].code());
            if (b != 0) acc[i + j] = f.add(acc[i + j], f.mul(a, b));
        }
    }
    TruncatedSeries out(f, precision());
    for (std::size_t i = 0; i < n; ++i) out.coeffs_[i] = FieldElement::from_code(f, acc[i]);
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const FieldElement& c) const {
    TruncatedSeries out = *this;
    for (auto& x : out.coeffs_) x *= c;
    return out;
}

TruncatedSeries TruncatedSeries::pow(unsigned n) const {
    TruncatedSeries acc = constant(FieldElement(*field_, 1), precision());
    TruncatedSeries base = *this;
    while (n != 0) {
        if (n & 1U) acc = acc * base;
        n >>= 1U;
        if (n != 0) base = base * base;
    }
    return acc;
}

TruncatedSeries TruncatedSeries::frobenius() const {
    TruncatedSeries out = *this;
    for (auto& c : out.coeffs_) c = c.frobenius();
    return out;
}

TruncatedSeries series_multiply(const TruncatedSeries& f, const TruncatedSeries& g) { return f * g; }

TruncatedSeries series_substitute(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (&f.field() != &g.field()) throw std::invalid_argument("series_substitute: field mismatch");
    if (f.precision() != g.precision()) throw std::invalid_argument("series_substitute: precision mismatch");
    if (g.valuation() < 1) throw std::domain_error("series_substitute: inner series must have valuation >= 1");
    // Horner: f(g) = c0 + g*(c1 + g*(c2 + ...)).
    const int n = f.precision();
    TruncatedSeries acc = TruncatedSeries::constant(f[n - 1], n);
    for (int i = n - 2; i >= 0; --i) acc = acc * g + TruncatedSeries::constant(f[i], n);
    return acc;
}

TruncatedSeries series_invert(const TruncatedSeries& f) {
    if (!f.is_unit()) throw std::domain_error("series_invert: series is not a unit");
    const int n = f.precision();
    const FieldElement c0_inv = f[0].inverse();
    std::vector<FieldElement> out(static_cast<std::size_t>(n), FieldElement(f.field(), 0));
    out[0] = c0_inv;
    // Solve sum_{j<=i} f_j * out_{i-j} = 0 for i >= 1.
    for (int i = 1; i < n; ++i) {
        FieldElement acc(f.field(), 0);
        for (int j = 1; j <= i; ++j) acc += f[j] * out[static_cast<std::size_t>(i - j)];
        out[static_cast<std::size_t>(i)] = -(acc * c0_inv);
    }
    return TruncatedSeries(f.field(), n, out);
}

TruncatedSeries series_reversion(const TruncatedSeries& g) {
    const int n = g.precision();
    if (n < 2 || g.valuation() != 1) throw std::domain_error("series_reversion: series must have valuation exactly 1");
    // Newton-free fixed point: build h degree by degree so that g(h) = mu.
    const FieldElement lead_inv = g[1].inverse();
    TruncatedSeries h = TruncatedSeries::monomial(lead_inv, 1, n);
    const TruncatedSeries target = TruncatedSeries::mu(g.field(), n);
    for (int k = 2; k < n; ++k) {
        const TruncatedSeries err = series_substitute(g, h) - target;
        // err has valuation >= k; correcting h by -err_k/g1 * mu^k fixes degree k.
        h = h - TruncatedSeries::monomial(err[k] * lead_inv, k, n);
    }
    return h;
}

std::string to_string(const TruncatedSeries& f) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < f.precision(); ++i) {
        if (f[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const std::string c = to_string(f[i]);
        const bool bracket = c.find('+') != std::string::npos;
        if (i == 0) {
            os << c;
            continue;
        }
        if (c != "1") os << (bracket ? "(" + c + ")" : c) << "*";
        os << "mu";
        if (i > 1) os << "^" << i;
    }
    if (first) os << "0";
    os << " + O(mu^" << f.precision() << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f) { return os << to_string(f); }

}  // namespace picard
