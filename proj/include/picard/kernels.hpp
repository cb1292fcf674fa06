#pragma once

// Exhaustive scans shared by the verification suites. Each kernel has a
// serial reference path and an OpenMP path; both return identical,
// deterministically ordered results.

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "picard/field.hpp"
#include "picard/transform.hpp"
#include "picard/weierstrass.hpp"

namespace picard {

enum class ExecutionPolicy { Serial, Parallel };

/// Every g = (u, r, s, t) in F^x x F^3 with apply_transform(c, g) == c,
/// sorted by transform_code.
std::vector<Transform<FieldElement>> scan_stabilizer(const WeierstrassCurve<FieldElement>& c,
                                                     ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// The pairs (a, b) in [0, n)^2 where `holds(a, b)` is false, in row-major
/// order. `holds` must be safe to call concurrently.
template <class Pred>
std::vector<std::pair<int, int>> failing_pairs(int n, Pred holds, ExecutionPolicy policy = ExecutionPolicy::Parallel) {
    std::vector<std::vector<std::pair<int, int>>> rows(static_cast<std::size_t>(n));
    if (policy == ExecutionPolicy::Serial) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (!holds(a, b)) rows[static_cast<std::size_t>(a)].emplace_back(a, b);
            }
        }
    } else {
#pragma omp parallel for schedule(dynamic)
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (!holds(a, b)) rows[static_cast<std::size_t>(a)].emplace_back(a, b);
            }
        }
    }
    std::vector<std::pair<int, int>> out;
    for (auto& row : rows) out.insert(out.end(), row.begin(), row.end());
    return out;
}

/// Indices in [0, count) accepted by `accept`, ascending.
template <class Pred>
std::vector<std::int64_t> filter_indices(std::int64_t count, Pred accept,
                                         ExecutionPolicy policy = ExecutionPolicy::Parallel) {
    std::vector<std::int64_t> out;
    if (policy == ExecutionPolicy::Serial) {
        for (std::int64_t i = 0; i < count; ++i) {
            if (accept(i)) out.push_back(i);
        }
        return out;
    }
#pragma omp parallel
    {
        std::vector<std::int64_t> local;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < count; ++i) {
            if (accept(i)) local.push_back(i);
        }
#pragma omp critical
        out.insert(out.end(), local.begin(), local.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace picard
