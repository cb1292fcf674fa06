#pragma once

#include <array>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace picard {

/// 2x2 matrix over F3, row-major {a, b, c, d} for [[a, b], [c, d]], entries in 0..2.
using Mat2F3 = std::array<int, 4>;

Mat2F3 mat_multiply(const Mat2F3& a, const Mat2F3& b);
int mat_determinant(const Mat2F3& a);
std::string to_string(const Mat2F3& a);

/// A finite group given by its full multiplication table.
class FiniteGroup {
public:
    /// `table[a][b]` is the index of a*b. Throws std::invalid_argument unless
    /// the table has an identity and two-sided inverses (associativity is
    /// checked separately by verify_associativity).
    explicit FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> names = {});

    /// Cyclic group Z/n with element k named "g^k".
    static FiniteGroup cyclic(int n);

    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    int element_order(int a) const;
    int power(int a, int n) const;
    const std::string& name(int a) const { return names_[static_cast<std::size_t>(a)]; }

    bool verify_associativity() const;
    std::optional<int> find_generator() const;
    bool is_cyclic() const { return find_generator().has_value(); }
    /// Elements commuting with everything.
    std::vector<int> center() const;

    /// Matrix labels, when the group was built from matrices.
    const std::vector<Mat2F3>& matrices() const { return matrices_; }
    void set_matrices(std::vector<Mat2F3> m) { matrices_ = std::move(m); }

    /// The group with elements relabelled: new index i is old index perm[i].
    FiniteGroup permuted(const std::vector<int>& perm) const;

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    std::vector<std::string> names_;
    std::vector<Mat2F3> matrices_;
    int identity_ = -1;
};

/// Result of closing a generating set: the group, the concrete elements in
/// discovery order, and for each element how it was first reached
/// (element = parent * generator); the identity has parent -1.
template <class T>
struct Closure {
    FiniteGroup group;
    std::vector<T> elements;
    std::vector<int> parent;
    std::vector<int> via_generator;
};

/// Breadth-first closure of `generators` under `mul`, with `key` mapping an
/// element to an ordered comparable identity. Throws std::length_error once
/// more than `limit` elements appear.
template <class T, class Mul, class Key>
Closure<T> close_under(const T& identity, const std::vector<T>& generators, Mul mul, Key key, std::size_t limit) {
    using K = decltype(key(identity));
    std::map<K, int> index;
    std::vector<T> elements{identity};
    std::vector<int> parent{-1};
    std::vector<int> via{-1};
    std::vector<std::string> names{"e"};
    index.emplace(key(identity), 0);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int i = queue.front();
        queue.pop_front();
        for (std::size_t g = 0; g < generators.size(); ++g) {
            T next = mul(elements[static_cast<std::size_t>(i)], generators[g]);
            auto [it, inserted] = index.emplace(key(next), static_cast<int>(elements.size()));
            if (!inserted) continue;
            if (elements.size() >= limit) throw std::length_error("close_under: group exceeds size limit");
            const std::string gen_name = "g" + std::to_string(g);
            names.push_back(i == 0 ? gen_name : names[static_cast<std::size_t>(i)] + "*" + gen_name);
            elements.push_back(std::move(next));
            parent.push_back(i);
            via.push_back(static_cast<int>(g));
            queue.push_back(it->second);
        }
    }
    const std::size_t n = elements.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            auto it = index.find(key(mul(elements[a], elements[b])));
            if (it == index.end()) throw std::logic_error("close_under: product escaped the closure");
            table[a][b] = it->second;
        }
    }
    return {FiniteGroup(std::move(table), std::move(names)), std::move(elements), std::move(parent), std::move(via)};
}

/// Closure of 2x2 matrices over F3 under multiplication, with matrix labels attached.
Closure<Mat2F3> matrix_group(const std::vector<Mat2F3>& generators);

}  // namespace picard
