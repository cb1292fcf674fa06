#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace picard {

/// Rational integer with overflow-checked arithmetic.
///
/// Symbolic identities in this project stay far below 2^63; an overflow is a
/// bug, so it throws instead of wrapping.
class Integer {
public:
    constexpr Integer() = default;
    constexpr Integer(std::int64_t value) : value_(value) {}  // NOLINT(implicit)

    constexpr std::int64_t value() const { return value_; }

    friend Integer operator+(Integer a, Integer b) {
        std::int64_t out = 0;
        if (__builtin_add_overflow(a.value_, b.value_, &out)) throw std::overflow_error("Integer addition overflow");
        return Integer(out);
    }
    friend Integer operator-(Integer a, Integer b) {
        std::int64_t out = 0;
        if (__builtin_sub_overflow(a.value_, b.value_, &out)) throw std::overflow_error("Integer subtraction overflow");
        return Integer(out);
    }
    friend Integer operator*(Integer a, Integer b) {
        std::int64_t out = 0;
        if (__builtin_mul_overflow(a.value_, b.value_, &out)) throw std::overflow_error("Integer multiplication overflow");
        return Integer(out);
    }
    Integer operator-() const { return Integer(0) - *this; }
    Integer& operator+=(Integer o) { return *this = *this + o; }
    Integer& operator-=(Integer o) { return *this = *this - o; }
    Integer& operator*=(Integer o) { return *this = *this * o; }

    friend constexpr bool operator==(Integer a, Integer b) = default;
    friend constexpr auto operator<=>(Integer a, Integer b) = default;

    friend std::ostream& operator<<(std::ostream& os, Integer a) { return os << a.value_; }

private:
    std::int64_t value_ = 0;
};

inline Integer constant_like(const Integer&, std::int64_t n) { return Integer(n); }
inline bool is_zero(const Integer& a) { return a.value() == 0; }
inline Integer canonical(const Integer& a) { return a; }

/// Only +1 and -1 are units of the integers.
inline std::optional<Integer> unit_inverse(const Integer& a) {
    if (a.value() == 1 || a.value() == -1) return a;
    return std::nullopt;
}

/// Exact quotient; throws if b does not divide a.
inline Integer exact_divide(Integer a, Integer b) {
    if (b.value() == 0 || a.value() % b.value() != 0) {
        throw std::domain_error("exact_divide: " + std::to_string(b.value()) + " does not divide " +
                                std::to_string(a.value()));
    }
    return Integer(a.value() / b.value());
}

inline std::string to_string(const Integer& a) { return std::to_string(a.value()); }

}  // namespace picard
