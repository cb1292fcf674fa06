#include "picard/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace picard {

namespace {

// v -= c * row, on codes.
void axpy(const FiniteField& f, CodeVector& v, std::uint8_t c, const CodeVector& row) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (row[i] != 0) v[i] = f.sub(v[i], f.mul(c, row[i]));
    }
}

}  // namespace

bool is_zero_vector(const CodeVector& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint8_t c) { return c == 0; });
}

EchelonBasis::EchelonBasis(const FiniteField& field, int width) : field_(&field), width_(width) {
    if (width < 0) throw std::invalid_argument("EchelonBasis: negative width");
}

CodeVector EchelonBasis::reduce(CodeVector v) const {
    if (static_cast<int>(v.size()) != width_) throw std::invalid_argument("EchelonBasis: width mismatch");
    // Subtracting a reduced row leaves every other pivot entry unchanged.
    for (const auto& [p, row] : rows_) {
        const std::uint8_t c = v[static_cast<std::size_t>(p)];
        if (c != 0) axpy(*field_, v, c, row);
    }
    return v;
}

bool EchelonBasis::contains(const CodeVector& v) const { return is_zero_vector(reduce(v)); }

bool EchelonBasis::insert(const CodeVector& v) {
    CodeVector r = reduce(v);
    auto lead = std::find_if(r.begin(), r.end(), [](std::uint8_t c) { return c != 0; });
    if (lead == r.end()) return false;
    const int pivot = static_cast<int>(lead - r.begin());
    const std::uint8_t inv = field_->inv(*lead);
    for (auto& c : r) c = field_->mul(c, inv);
    for (auto& [p, row] : rows_) {
        const std::uint8_t c = row[static_cast<std::size_t>(pivot)];
        if (c != 0) axpy(*field_, row, c, r);
    }
    rows_.emplace(pivot, std::move(r));
    return true;
}

std::vector<CodeVector> EchelonBasis::rows() const {
    std::vector<CodeVector> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_) out.push_back(row);
    return out;
}

std::vector<int> EchelonBasis::pivots() const {
    std::vector<int> out;
    for (const auto& [p, row] : rows_) out.push_back(p);
    return out;
}

std::vector<CodeVector> EchelonBasis::nullspace() const {
    EchelonBasis kernel(*field_, width_);
    for (int free = 0; free < width_; ++free) {
        if (rows_.count(free)) continue;
        CodeVector x(static_cast<std::size_t>(width_), 0);
        x[static_cast<std::size_t>(free)] = 1;
        for (const auto& [p, row] : rows_) x[static_cast<std::size_t>(p)] = field_->neg(row[static_cast<std::size_t>(free)]);
        kernel.insert(x);
    }
    return kernel.rows();
}

}  // namespace picard
