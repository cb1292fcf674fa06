#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "picard/field.hpp"

namespace picard {

/// Dense vector over a finite field as raw element codes.
using CodeVector = std::vector<std::uint8_t>;

/// Row space over F_q kept in reduced row echelon form: every stored row has
/// a leading 1 at its pivot and zeros at all other pivots. Rows are ordered
/// by pivot column, so the basis is canonical for the span.
class EchelonBasis {
public:
    EchelonBasis(const FiniteField& field, int width);

    const FiniteField& field() const { return *field_; }
    int width() const { return width_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Reduces `v` against the basis; zero iff v lies in the span.
    CodeVector reduce(CodeVector v) const;
    bool contains(const CodeVector& v) const;
    /// Adds v to the span; returns false when it was already there.
    bool insert(const CodeVector& v);

    /// Rows in pivot order.
    std::vector<CodeVector> rows() const;
    std::vector<int> pivots() const;
    /// Basis of {x : r . x = 0 for every row r}, itself in reduced echelon form.
    std::vector<CodeVector> nullspace() const;

    friend bool operator==(const EchelonBasis& a, const EchelonBasis& b) {
        return a.field_ == b.field_ && a.width_ == b.width_ && a.rows_ == b.rows_;
    }

private:
    const FiniteField* field_;
    int width_;
    std::map<int, CodeVector> rows_;
};

bool is_zero_vector(const CodeVector& v);

}  // namespace picard
