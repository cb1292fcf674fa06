#include "picard/field.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace picard {

namespace {

struct Relation {
    int p;
    int rel0;
    int rel1;
    const char* gen;
};

// g^2 = rel0 + rel1*g
constexpr std::array<Relation, 5> kQuadraticRelations = {{
    {2, 1, 1, "w"},  // w^2 + w + 1 = 0
    {3, 2, 0, "i"},  // i^2 + 1 = 0
    {5, 2, 0, "i"},  // i^2 = 2
    {7, 6, 0, "i"},  // i^2 + 1 = 0
    {13, 2, 0, "i"}, // i^2 = 2
}};

bool supported_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7 || p == 13; }

int mod(std::int64_t n, int p) {
    auto r = static_cast<int>(n % p);
    return r < 0 ? r + p : r;
}

}  // namespace

const FiniteField& FiniteField::get(int p, int k) {
    if (!supported_prime(p) || (k != 1 && k != 2)) {
        throw std::invalid_argument("unsupported finite field F_" + std::to_string(p) + "^" + std::to_string(k));
    }
    static std::array<std::unique_ptr<FiniteField>, 28> cache;
    static std::mutex lock;
    std::scoped_lock guard(lock);
    auto& slot = cache[static_cast<std::size_t>(p * 2 + (k - 1))];
    if (!slot) slot.reset(new FiniteField(p, k));
    return *slot;
}

const FiniteField& FiniteField::of_order(int q) {
    for (int p : {2, 3, 5, 7, 13}) {
        if (q == p) return get(p, 1);
        if (q == p * p) return get(p, 2);
    }
    throw std::invalid_argument("unsupported field order " + std::to_string(q));
}

FiniteField::FiniteField(int p, int k) : p_(p), k_(k), q_(k == 1 ? p : p * p) {
    if (k == 2) {
        for (const auto& rel : kQuadraticRelations) {
            if (rel.p == p) {
                rel0_ = rel.rel0;
                rel1_ = rel.rel1;
                gen_name_ = rel.gen;
            }
        }
        // x^2 - rel1*x - rel0 must have no root in F_p.
        for (int x = 0; x < p; ++x) {
            if (mod(x * x - rel1_ * x - rel0_, p) == 0) {
                throw std::logic_error("defining polynomial of F_" + std::to_string(q_) + " is reducible");
            }
        }
    }
    name_ = "F" + std::to_string(q_);

    const auto n = static_cast<std::size_t>(q_);
    add_.resize(n * n);
    mul_.resize(n * n);
    neg_.resize(n);
    inv_.assign(n, 0);
    frob_.resize(n);

    for (int a = 0; a < q_; ++a) {
        const int a0 = a % p, a1 = a / p;
        neg_[a] = static_cast<std::uint8_t>(mod(-a0, p) + p * mod(-a1, p));
        for (int b = 0; b < q_; ++b) {
            const int b0 = b % p, b1 = b / p;
            const int s0 = mod(a0 + b0, p), s1 = mod(a1 + b1, p);
            const int m0 = mod(a0 * b0 + a1 * b1 * rel0_, p);
            const int m1 = mod(a0 * b1 + a1 * b0 + a1 * b1 * rel1_, p);
            add_[a * q_ + b] = static_cast<std::uint8_t>(s0 + p * s1);
            mul_[a * q_ + b] = static_cast<std::uint8_t>(m0 + p * m1);
        }
    }
    for (int a = 1; a < q_; ++a) {
        for (int b = 1; b < q_; ++b) {
            if (mul_[a * q_ + b] == 1) {
                inv_[a] = static_cast<std::uint8_t>(b);
                break;
            }
        }
        if (inv_[a] == 0) throw std::logic_error("no inverse in " + name_);
    }
    for (int a = 0; a < q_; ++a) {
        std::uint8_t acc = 1;
        for (int i = 0; i < p; ++i) acc = mul_[acc * q_ + a];
        frob_[a] = acc;
    }
}

std::uint8_t FiniteField::from_int(std::int64_t n) const { return static_cast<std::uint8_t>(mod(n, p_)); }

FieldElement FieldElement::from_code(const FiniteField& field, int code) {
    if (code < 0 || code >= field.order()) throw std::invalid_argument("field code out of range");
    return FieldElement(field, static_cast<std::uint8_t>(code), Raw{});
}

FieldElement FieldElement::from_coords(const FiniteField& field, int c0, int c1) {
    const int p = field.characteristic();
    if (field.degree() == 1 && mod(c1, p) != 0) {
        throw std::invalid_argument("prime field " + field.name() + " has no second coordinate");
    }
    return from_code(field, mod(c0, p) + p * mod(c1, p));
}

FieldElement FieldElement::generator(const FiniteField& field) {
    if (field.degree() != 2) throw std::invalid_argument(field.name() + " is a prime field");
    return from_coords(field, 0, 1);
}

std::vector<FieldElement> FieldElement::elements(const FiniteField& field) {
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(field.order()));
    for (int c = 0; c < field.order(); ++c) out.push_back(from_code(field, c));
    return out;
}

void FieldElement::require_same_field(const FieldElement& o) const {
    if (field_ != o.field_) {
        throw std::invalid_argument("field mismatch: " + field_->name() + " vs " + o.field_->name());
    }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(o);
    return FieldElement(*field_, field_->add(code_, o.code_), Raw{});
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(o);
    return FieldElement(*field_, field_->sub(code_, o.code_), Raw{});
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(o);
    return FieldElement(*field_, field_->mul(code_, o.code_), Raw{});
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::inverse() const {
    if (code_ == 0) throw std::domain_error("inverse of zero in " + field_->name());
    return FieldElement(*field_, field_->inv(code_), Raw{});
}

FieldElement FieldElement::pow(std::int64_t e) const {
    FieldElement base = e < 0 ? inverse() : *this;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    FieldElement acc(*field_, 1);
    while (n != 0) {
        if (n & 1U) acc *= base;
        base *= base;
        n >>= 1U;
    }
    return acc;
}

int FieldElement::multiplicative_order() const {
    if (code_ == 0) throw std::domain_error("zero has no multiplicative order");
    FieldElement acc = *this;
    int n = 1;
    while (!acc.is_one()) {
        acc *= *this;
        ++n;
    }
    return n;
}

FieldElement FieldElement::embed(const FiniteField& target) const {
    if (&target == field_) return *this;
    if (target.characteristic() == field_->characteristic() && field_->degree() == 1) {
        return FieldElement(target, code_);
    }
    throw std::invalid_argument("no embedding of " + field_->name() + " into " + target.name());
}

std::string to_string(const FieldElement& a) {
    const auto& f = a.field();
    if (f.degree() == 1) return std::to_string(a.c0());
    std::ostringstream os;
    const int c0 = a.c0(), c1 = a.c1();
    if (c1 == 0) {
        os << c0;
    } else {
        if (c0 != 0) os << c0 << "+";
        if (c1 != 1) os << c1 << "*";
        os << f.generator_name();
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << to_string(a); }

std::optional<FieldElement> primitive_root_of_unity(const FiniteField& field, int n) {
    for (int c = 1; c < field.order(); ++c) {
        auto z = FieldElement::from_code(field, c);
        if (z.multiplicative_order() == n) return z;
    }
    return std::nullopt;
}

}  // namespace picard
