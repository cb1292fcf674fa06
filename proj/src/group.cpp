#include "picard/group.hpp"

#include <numeric>

namespace picard {

Mat2F3 mat_multiply(const Mat2F3& a, const Mat2F3& b) {
    return {(a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3, (a[2] * b[0] + a[3] * b[2]) % 3,
            (a[2] * b[1] + a[3] * b[3]) % 3};
}

int mat_determinant(const Mat2F3& a) { return (((a[0] * a[3] - a[1] * a[2]) % 3) + 3) % 3; }

std::string to_string(const Mat2F3& a) {
    auto sym = [](int v) { return v == 2 ? std::string("-1") : std::to_string(v); };
    return "[[" + sym(a[0]) + "," + sym(a[1]) + "],[" + sym(a[2]) + "," + sym(a[3]) + "]]";
}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
    const auto n = table_.size();
    if (n == 0) throw std::invalid_argument("FiniteGroup: empty table");
    for (const auto& row : table_) {
        if (row.size() != n) throw std::invalid_argument("FiniteGroup: table is not square");
        for (int v : row) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) throw std::invalid_argument("FiniteGroup: entry out of range");
        }
    }
    for (std::size_t e = 0; e < n && identity_ < 0; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            ok = table_[e][a] == static_cast<int>(a) && table_[a][e] == static_cast<int>(a);
        }
        if (ok) identity_ = static_cast<int>(e);
    }
    if (identity_ < 0) throw std::invalid_argument("FiniteGroup: no identity element");
    inverse_.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inverse_[a] = static_cast<int>(b);
                break;
            }
        }
        if (inverse_[a] < 0) throw std::invalid_argument("FiniteGroup: element without inverse");
    }
    if (names_.empty()) {
        for (std::size_t a = 0; a < n; ++a) names_.push_back("x" + std::to_string(a));
    }
    if (names_.size() != n) throw std::invalid_argument("FiniteGroup: name count mismatch");
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        names.push_back(a == 0 ? "e" : "g^" + std::to_string(a));
        for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    }
    return FiniteGroup(std::move(table), std::move(names));
}

int FiniteGroup::element_order(int a) const {
    int k = 1;
    for (int x = a; x != identity_; x = multiply(x, a)) ++k;
    return k;
}

int FiniteGroup::power(int a, int n) const {
    if (n < 0) return power(inverse(a), -n);
    int acc = identity_;
    for (int i = 0; i < n; ++i) acc = multiply(acc, a);
    return acc;
}

bool FiniteGroup::verify_associativity() const {
    const int n = order();
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const int ab = multiply(a, b);
            for (int c = 0; c < n; ++c) {
                if (multiply(ab, c) != multiply(a, multiply(b, c))) return false;
            }
        }
    }
    return true;
}

std::optional<int> FiniteGroup::find_generator() const {
    for (int a = 0; a < order(); ++a) {
        if (element_order(a) == order()) return a;
    }
    return std::nullopt;
}

std::vector<int> FiniteGroup::center() const {
    std::vector<int> out;
    for (int a = 0; a < order(); ++a) {
        bool central = true;
        for (int b = 0; b < order() && central; ++b) central = multiply(a, b) == multiply(b, a);
        if (central) out.push_back(a);
    }
    return out;
}

FiniteGroup FiniteGroup::permuted(const std::vector<int>& perm) const {
    const auto n = table_.size();
    if (perm.size() != n) throw std::invalid_argument("permuted: wrong permutation size");
    std::vector<int> back(n, -1);
    for (std::size_t i = 0; i < n; ++i) back[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    std::vector<Mat2F3> mats;
    for (std::size_t i = 0; i < n; ++i) {
        const auto oi = static_cast<std::size_t>(perm[i]);
        names[i] = names_[oi];
        if (!matrices_.empty()) mats.push_back(matrices_[oi]);
        for (std::size_t j = 0; j < n; ++j) {
            table[i][j] = back[static_cast<std::size_t>(table_[oi][static_cast<std::size_t>(perm[j])])];
        }
    }
    FiniteGroup out(std::move(table), std::move(names));
    out.matrices_ = std::move(mats);
    return out;
}

Closure<Mat2F3> matrix_group(const std::vector<Mat2F3>& generators) {
    auto closure = close_under(Mat2F3{1, 0, 0, 1}, generators, mat_multiply, [](const Mat2F3& m) { return m; }, 1000);
    closure.group.set_matrices(closure.elements);
    return closure;
}

}  // namespace picard
