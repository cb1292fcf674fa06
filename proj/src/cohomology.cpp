#include "picard/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace picard {

namespace {

using Matrix = std::vector<CodeVector>;

// images[sigma][j] holds the coefficients of (mu^j)^sigma.
std::vector<Matrix> action_images(const SeriesAction& a) {
    if (a.semilinear()) throw std::invalid_argument("cohomology needs a linear action");
    const int n = a.precision;
    std::vector<Matrix> out(static_cast<std::size_t>(a.order()));
    for (int s = 0; s < a.order(); ++s) {
        auto& m = out[static_cast<std::size_t>(s)];
        for (int j = 0; j < n; ++j) {
            const auto image = a.act(TruncatedSeries::monomial(FieldElement(*a.field, 1), j, n), s);
            CodeVector col;
            for (const auto& c : image.coefficients()) col.push_back(static_cast<std::uint8_t>(c.code()));
            m.push_back(std::move(col));
        }
    }
    return out;
}

TruncatedSeries from_codes(const FiniteField& f, const CodeVector& v, std::size_t offset, int n) {
    std::vector<FieldElement> cs;
    for (int i = 0; i < n; ++i) cs.push_back(FieldElement::from_code(f, v[offset + static_cast<std::size_t>(i)]));
    return TruncatedSeries(f, n, cs);
}

CodeVector codes(const TruncatedSeries& s) {
    CodeVector out;
    for (const auto& c : s.coefficients()) out.push_back(static_cast<std::uint8_t>(c.code()));
    return out;
}

}  // namespace

Cocycle to_cocycle(const SeriesAction& a, const CodeVector& v) {
    const auto n = static_cast<std::size_t>(a.precision);
    Cocycle c;
    for (int s = 0; s < a.order(); ++s) c.values.push_back(from_codes(*a.field, v, static_cast<std::size_t>(s) * n, a.precision));
    return c;
}

CodeVector to_vector(const Cocycle& c) {
    CodeVector out;
    for (const auto& v : c.values) {
        const auto block = codes(v);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

bool verify_cocycle(const SeriesAction& a, const Cocycle& c, ExecutionPolicy policy) {
    if (static_cast<int>(c.values.size()) != a.order()) return false;
    const auto bad = failing_pairs(
        a.order(),
        [&](int s, int t) {
            const auto& xs = c.values[static_cast<std::size_t>(s)];
            const auto& xt = c.values[static_cast<std::size_t>(t)];
            return c.values[static_cast<std::size_t>(a.group.multiply(s, t))] == a.act(xs, t) + xt;
        },
        policy);
    return bad.empty();
}

EchelonBasis cocycle_space(const SeriesAction& a) {
    const auto images = action_images(a);
    const FiniteField& f = *a.field;
    const int n = a.precision;
    const int width = a.order() * n;
    EchelonBasis equations(f, width);
    // xi_{st}[i] - sum_j A_t[i][j] xi_s[j] - xi_t[i] = 0
    for (int s = 0; s < a.order(); ++s) {
        for (int t = 0; t < a.order(); ++t) {
            const int st = a.group.multiply(s, t);
            const auto& at = images[static_cast<std::size_t>(t)];
            for (int i = 0; i < n; ++i) {
                CodeVector row(static_cast<std::size_t>(width), 0);
                auto add = [&](int col, std::uint8_t c) {
                    auto& x = row[static_cast<std::size_t>(col)];
                    x = f.add(x, c);
                };
                add(st * n + i, 1);
                add(t * n + i, f.neg(1));
                for (int j = 0; j < n; ++j) {
                    const std::uint8_t c = at[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                    if (c != 0) add(s * n + j, f.neg(c));
                }
                equations.insert(row);
            }
        }
    }
    EchelonBasis z1(f, width);
    for (const auto& v : equations.nullspace()) z1.insert(v);
    return z1;
}

EchelonBasis coboundaries(const SeriesAction& a) {
    const auto images = action_images(a);
    const FiniteField& f = *a.field;
    const int n = a.precision;
    EchelonBasis b1(f, a.order() * n);
    for (int j = 0; j < n; ++j) {
        CodeVector v;
        for (int s = 0; s < a.order(); ++s) {
            CodeVector block = images[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)];
            block[static_cast<std::size_t>(j)] = f.sub(block[static_cast<std::size_t>(j)], 1);
            v.insert(v.end(), block.begin(), block.end());
        }
        b1.insert(v);
    }
    return b1;
}

int fixed_space_dimension(const SeriesAction& a) {
    const auto images = action_images(a);
    const FiniteField& f = *a.field;
    const int n = a.precision;
    EchelonBasis rows(f, n);
    for (const auto& m : images) {
        for (int i = 0; i < n; ++i) {
            CodeVector row(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            row[static_cast<std::size_t>(i)] = f.sub(row[static_cast<std::size_t>(i)], 1);
            rows.insert(row);
        }
    }
    return n - rows.rank();
}

CohomologyReport h1(const SeriesAction& a, ExecutionPolicy policy) {
    CohomologyReport report;
    report.group = a.name;
    report.order = a.order();
    report.precision = a.precision;
    const auto z1 = cocycle_space(a);
    const auto b1 = coboundaries(a);
    report.dim_z1 = z1.rank();
    report.dim_b1 = b1.rank();
    report.dim_fixed = fixed_space_dimension(a);
    report.rank_nullity = report.dim_b1 == a.precision - report.dim_fixed;

    report.cocycles_verified = true;
    for (const auto& v : z1.rows()) {
        auto c = to_cocycle(a, v);
        if (!verify_cocycle(a, c, policy)) report.cocycles_verified = false;
        report.z1_basis.push_back(std::move(c));
    }
    report.coboundaries_are_cocycles = true;
    for (const auto& v : b1.rows()) {
        if (!z1.contains(v)) report.coboundaries_are_cocycles = false;
    }
    EchelonBasis quotient = b1;
    for (const auto& v : z1.rows()) {
        if (quotient.insert(v)) report.representatives.push_back(to_cocycle(a, v));
    }
    report.dim_h1 = static_cast<int>(report.representatives.size());
    return report;
}

bool permutation_invariant(const SeriesAction& a, const std::vector<int>& perm) {
    const auto relabelled = a.permuted(perm);
    const auto n = static_cast<std::size_t>(a.precision);
    auto back = [&](const EchelonBasis& basis) {
        EchelonBasis out(*a.field, basis.width());
        for (const auto& v : basis.rows()) {
            CodeVector w(v.size());
            for (std::size_t i = 0; i < perm.size(); ++i) {
                std::copy_n(v.begin() + static_cast<std::ptrdiff_t>(i * n), n,
                            w.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(perm[i]) * n));
            }
            out.insert(w);
        }
        return out;
    };
    return back(cocycle_space(relabelled)) == cocycle_space(a) && back(coboundaries(relabelled)) == coboundaries(a);
}

// ---- eliminations -----------------------------------------------------

bool EliminationReport::methods_agree() const {
    std::size_t expected = 1;
    for (int i = 0; i < solution_dimension; ++i) expected *= static_cast<std::size_t>(field_order);
    return brute_force_solutions == expected;
}

bool EliminationReport::chain_holds() const {
    return !chain.empty() && std::all_of(chain.begin(), chain.end(), [](const auto& s) { return s.holds; });
}

namespace {

// Rows of the map (a_1, ..., a_{N-1}) -> coefficients of g^sigma - g.
Matrix difference_rows(const SeriesAction& a, int sigma) {
    const FiniteField& f = *a.field;
    const int n = a.precision;
    Matrix rows(static_cast<std::size_t>(n), CodeVector(static_cast<std::size_t>(n - 1), 0));
    for (int i = 1; i < n; ++i) {
        const auto mono = TruncatedSeries::monomial(FieldElement(f, 1), i, n);
        const auto diff = a.act(mono, sigma) - mono;
        for (int k = 0; k < n; ++k) {
            rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(diff[k].code());
        }
    }
    return rows;
}

EchelonBasis solution_space(const FiniteField& f, int width, const std::vector<const Matrix*>& systems) {
    EchelonBasis rows(f, width);
    for (const auto* m : systems) {
        for (const auto& r : *m) rows.insert(r);
    }
    EchelonBasis out(f, width);
    for (const auto& v : rows.nullspace()) out.insert(v);
    return out;
}

std::vector<int> monomial_support(const EchelonBasis& b) {
    std::vector<int> out;
    for (const auto& v : b.rows()) {
        if (std::count_if(v.begin(), v.end(), [](std::uint8_t c) { return c != 0; }) != 1) return {};
        out.push_back(static_cast<int>(std::find_if(v.begin(), v.end(), [](std::uint8_t c) { return c != 0; }) - v.begin()) + 1);
    }
    return out;
}

std::vector<EliminationStep> run_chain(const Matrix& beta_rows, std::vector<int> alive,
                                       const std::vector<std::pair<int, int>>& steps) {
    std::vector<EliminationStep> out;
    for (const auto& [k, var] : steps) {
        const auto& row = beta_rows[static_cast<std::size_t>(k)];
        std::vector<int> involved;
        for (int i : alive) {
            if (row[static_cast<std::size_t>(i - 1)] != 0) involved.push_back(i);
        }
        out.push_back({k, var, involved == std::vector<int>{var}});
        alive.erase(std::remove(alive.begin(), alive.end(), var), alive.end());
    }
    if (!alive.empty()) out.push_back({-1, alive.front(), false});
    return out;
}

bool is_invariant(const SeriesAction& a, const TruncatedSeries& g) {
    for (int gen : a.generators) {
        if (!(a.act(g, gen) == g)) return false;
    }
    return true;
}

TruncatedSeries candidate(const FiniteField& f, int n, const std::vector<int>& degrees, std::int64_t index) {
    std::vector<FieldElement> cs(static_cast<std::size_t>(n), FieldElement(f, 0));
    for (int d : degrees) {
        cs[static_cast<std::size_t>(d)] = FieldElement::from_code(f, static_cast<int>(index % f.order()));
        index /= f.order();
    }
    return TruncatedSeries(f, n, cs);
}

EliminationReport eliminate(const SeriesAction& a, const std::vector<std::pair<int, int>>& steps) {
    const FiniteField& f = *a.field;
    const int n = a.precision;
    EliminationReport report;
    report.precision = n;
    report.field_order = f.order();
    const auto alpha_rows = difference_rows(a, a.generators[0]);
    const auto beta_rows = difference_rows(a, a.generators[1]);
    const auto alpha_space = solution_space(f, n - 1, {&alpha_rows});
    report.alpha_dimension = alpha_space.rank();
    report.alpha_support = monomial_support(alpha_space);
    report.solution_dimension = solution_space(f, n - 1, {&alpha_rows, &beta_rows}).rank();
    report.chain = run_chain(beta_rows, report.alpha_support, steps);
    return report;
}

}  // namespace

EliminationReport elimination_check_char3(ExecutionPolicy policy) {
    const auto a = s3_action(6);
    auto report = eliminate(a, {{3, 2}, {5, 4}});
    std::vector<int> degrees{1, 2, 3, 4, 5};
    std::int64_t count = 1;
    for (std::size_t i = 0; i < degrees.size(); ++i) count *= a.field->order();
    const auto hits = filter_indices(count, [&](std::int64_t i) { return is_invariant(a, candidate(*a.field, 6, degrees, i)); },
                                     policy);
    report.brute_force_candidates = static_cast<std::size_t>(count);
    report.brute_force_solutions = hits.size();
    return report;
}

EliminationReport elimination_check_char2(ExecutionPolicy policy) {
    const auto a = sl2f3_series_action(12);
    auto report = eliminate(a, {{4, 3}, {8, 6}, {10, 9}});
    const FiniteField& f = *a.field;
    const int alpha = a.generators[0];

    // alpha is diagonal on monomials, so its constraint splits by coefficient.
    std::vector<int> degrees;
    for (int i = 1; i < 12; ++i) {
        int survivors = 0;
        for (const auto& c : FieldElement::elements(f)) {
            const auto g = TruncatedSeries::monomial(c, i, 12);
            const auto image = a.act(g, alpha);
            if (image.valuation() < 12 && image.valuation() != i) throw std::logic_error("alpha is not diagonal");
            if (image == g) ++survivors;
        }
        if (survivors == f.order()) {
            degrees.push_back(i);
        } else if (survivors != 1) {
            throw std::logic_error("alpha constraint is not a per-coefficient condition");
        }
    }
    std::int64_t count = 1;
    for (std::size_t i = 0; i < degrees.size(); ++i) count *= f.order();
    const auto hits = filter_indices(count, [&](std::int64_t i) { return is_invariant(a, candidate(f, 12, degrees, i)); },
                                     policy);
    report.brute_force_candidates = static_cast<std::size_t>(count);
    report.brute_force_solutions = hits.size();
    if (degrees != report.alpha_support) report.alpha_support.clear();
    return report;
}

XiBeta2Report xi_beta2_analysis(const SeriesAction& a, const std::vector<Cocycle>& basis) {
    XiBeta2Report report;
    report.basis_size = static_cast<int>(basis.size());
    const int beta = a.generators.at(1);
    const int beta2 = a.group.multiply(beta, beta);
    const auto center = a.group.center();
    report.beta_squared_central = std::find(center.begin(), center.end(), beta2) != center.end();
    report.beta_squared_trivial = a.substitution[static_cast<std::size_t>(beta2)] == TruncatedSeries::mu(*a.field, a.precision);
    report.min_valuation = a.precision;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto& xi = basis[k].values;
        const auto& x = xi[static_cast<std::size_t>(beta2)];
        bool invariant = true;
        for (int s = 0; s < a.order() && invariant; ++s) invariant = a.act(x, s) == x;
        const auto& xb = xi[static_cast<std::size_t>(beta)];
        const bool valuation = x == a.act(xb, beta) + xb && x.valuation() >= 2;
        report.invariant += invariant ? 1 : 0;
        report.valuation_ok += valuation ? 1 : 0;
        report.min_valuation = std::min(report.min_valuation, x.valuation());
        if (!invariant || !valuation) report.failing.push_back(static_cast<int>(k));
    }
    return report;
}

}  // namespace picard
