#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace picard {

/// The finite field F_{p^k} for p in {2,3,5,7,13} and k in {1,2}.
///
/// Elements are encoded as c0 + p*c1 where c0 + c1*g is the coordinate form
/// in the basis {1, g} and g is the root of the pinned defining polynomial:
///
///   F4:   g^2 + g + 1 = 0   (g is written w)
///   F9:   g^2 + 1 = 0       (g is written i)
///   F25:  g^2 - 2 = 0
///   F49:  g^2 + 1 = 0
///   F169: g^2 - 2 = 0
///
/// Arithmetic is table driven; tables are built once from coordinate
/// arithmetic and are immutable afterwards.
class FiniteField {
public:
    /// Throws std::invalid_argument for an unsupported (p, k).
    static const FiniteField& get(int p, int k = 1);
    /// Looks up by order q (2, 3, 4, 5, 7, 9, 13, 25, 49, 169).
    static const FiniteField& of_order(int q);

    int characteristic() const { return p_; }
    int degree() const { return k_; }
    int order() const { return q_; }
    /// "F4", "F13", ...
    const std::string& name() const { return name_; }
    /// Name of the extension generator ("w" for F4, "i" otherwise); empty for prime fields.
    const std::string& generator_name() const { return gen_name_; }
    /// g^2 = rel0 + rel1*g.
    int relation_constant() const { return rel0_; }
    int relation_linear() const { return rel1_; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + neg_[b]]; }
    /// Inverse of a nonzero code; inv(0) is unspecified.
    std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }
    std::uint8_t from_int(std::int64_t n) const;
    std::uint8_t frobenius(std::uint8_t a) const { return frob_[a]; }

private:
    FiniteField(int p, int k);

    int p_;
    int k_;
    int q_;
    int rel0_ = 0;
    int rel1_ = 0;
    std::string name_;
    std::string gen_name_;
    std::vector<std::uint8_t> add_, mul_, neg_, inv_, frob_;
};

/// An element of a FiniteField in canonical reduced form.
///
/// Mixing elements of different fields throws std::invalid_argument.
class FieldElement {
public:
    FieldElement(const FiniteField& field, std::int64_t n) : field_(&field), code_(field.from_int(n)) {}

    static FieldElement from_code(const FiniteField& field, int code);
    static FieldElement from_coords(const FiniteField& field, int c0, int c1 = 0);
    /// The adjoined root g of the defining polynomial; throws for prime fields.
    static FieldElement generator(const FiniteField& field);
    /// All q elements in code order.
    static std::vector<FieldElement> elements(const FiniteField& field);

    const FiniteField& field() const { return *field_; }
    int code() const { return code_; }
    int c0() const { return code_ % field_->characteristic(); }
    int c1() const { return code_ / field_->characteristic(); }
    bool is_zero() const { return code_ == 0; }
    bool is_one() const { return code_ == 1; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const { return FieldElement(*field_, field_->neg(code_), Raw{}); }
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    /// Throws std::domain_error on zero.
    FieldElement inverse() const;
    /// Negative exponents invert first.
    FieldElement pow(std::int64_t e) const;
    /// x -> x^p; on F4 this is the conjugation w -> w^2.
    FieldElement frobenius() const { return FieldElement(*field_, field_->frobenius(code_), Raw{}); }
    /// Multiplicative order; throws on zero.
    int multiplicative_order() const;
    /// Image in `target`; defined for identical fields and for prime-field
    /// elements mapped into an extension of the same characteristic.
    FieldElement embed(const FiniteField& target) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.code_ == b.code_;
    }
    /// Total order: by field order, then by code.
    friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
        if (a.field_ != b.field_) return a.field_->order() <=> b.field_->order();
        return a.code_ <=> b.code_;
    }

private:
    struct Raw {};
    FieldElement(const FiniteField& field, std::uint8_t code, Raw) : field_(&field), code_(code) {}
    void require_same_field(const FieldElement& o) const;

    const FiniteField* field_;
    std::uint8_t code_;
};

std::string to_string(const FieldElement& a);
std::ostream& operator<<(std::ostream& os, const FieldElement& a);

inline FieldElement constant_like(const FieldElement& like, std::int64_t n) { return FieldElement(like.field(), n); }
inline bool is_zero(const FieldElement& a) { return a.is_zero(); }
inline FieldElement canonical(const FieldElement& a) { return a; }
inline std::optional<FieldElement> unit_inverse(const FieldElement& a) {
    if (a.is_zero()) return std::nullopt;
    return a.inverse();
}

/// Smallest-code element of exact multiplicative order n, if one exists.
std::optional<FieldElement> primitive_root_of_unity(const FiniteField& field, int n);

}  // namespace picard
