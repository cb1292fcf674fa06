#include "picard/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace picard {

namespace {

FieldPoly derivative(const FieldPoly& p, Var v) {
    FieldPoly out(p.one());
    const auto i = static_cast<std::size_t>(v);
    for (const auto& [e, c] : p.terms()) {
        if (e[i] == 0) continue;
        Exponents f = e;
        --f[i];
        out += FieldPoly::monomial(c * FieldElement(c.field(), e[i]), f);
    }
    return out;
}

FieldPoly at_point(const FieldPoly& f, const std::array<FieldPoly, 3>& p) {
    return f.substitute({{Var::x, p[0]}, {Var::y, p[1]}, {Var::z, p[2]}});
}

std::vector<int> series_key(const TruncatedSeries& s) {
    std::vector<int> key;
    key.reserve(static_cast<std::size_t>(s.precision()));
    for (const auto& c : s.coefficients()) key.push_back(c.code());
    return key;
}

int index_of_element(const std::vector<TruncatedSeries>& elements, const TruncatedSeries& s) {
    auto it = std::find(elements.begin(), elements.end(), s);
    if (it == elements.end()) throw std::logic_error("generator missing from its own closure");
    return static_cast<int>(it - elements.begin());
}

SeriesAction from_series_closure(std::string name, const FiniteField& f, int precision,
                                 const std::vector<TruncatedSeries>& generators) {
    auto closure = close_under(TruncatedSeries::mu(f, precision), generators, series_substitute, series_key, 4096);
    std::vector<int> gens;
    for (const auto& g : generators) gens.push_back(index_of_element(closure.elements, g));
    const auto n = closure.elements.size();
    return {std::move(name), &f, precision, std::move(closure.group), std::move(closure.elements),
            std::vector<bool>(n, false), std::move(gens)};
}

struct MobiusAction {
    Mobius m;
    bool conj;
};

MobiusAction then(const MobiusAction& sigma, const MobiusAction& tau) {
    const Mobius left = tau.conj ? mobius_conjugate(sigma.m) : sigma.m;
    return {mobius_multiply(left, tau.m), sigma.conj != tau.conj};
}

const FiniteField& f4() { return FiniteField::get(2, 2); }

Mobius mobius_alpha() {
    const auto& f = f4();
    return {FieldElement::generator(f), FieldElement(f, 0), FieldElement(f, 0), FieldElement(f, 1)};
}

Mobius mobius_beta() {
    const auto& f = f4();
    return {FieldElement(f, 1), FieldElement(f, 0), FieldElement(f, 1), FieldElement(f, -1)};
}

Mobius mobius_identity() {
    const auto& f = f4();
    return {FieldElement(f, 1), FieldElement(f, 0), FieldElement(f, 0), FieldElement(f, 1)};
}

constexpr Mat2F3 kAlpha{1, 0, 2, 1};
constexpr Mat2F3 kBeta{0, 2, 1, 0};
constexpr Mat2F3 kDiagonal{1, 0, 0, 2};

int matrix_index(const Closure<Mat2F3>& c, const Mat2F3& m) {
    auto it = std::find(c.elements.begin(), c.elements.end(), m);
    if (it == c.elements.end()) throw std::logic_error("matrix missing from its closure");
    return static_cast<int>(it - c.elements.begin());
}

}  // namespace

// ---- SeriesAction -----------------------------------------------------

bool SeriesAction::semilinear() const {
    return std::any_of(conjugates.begin(), conjugates.end(), [](bool b) { return b; });
}

TruncatedSeries SeriesAction::act(const TruncatedSeries& f, int sigma) const {
    const auto i = static_cast<std::size_t>(sigma);
    return series_substitute(conjugates[i] ? f.frobenius() : f, substitution[i]);
}

std::vector<std::pair<int, int>> SeriesAction::right_action_failures(ExecutionPolicy policy) const {
    return failing_pairs(
        order(),
        [&](int a, int b) {
            const auto ia = static_cast<std::size_t>(a), ib = static_cast<std::size_t>(b);
            const auto ab = static_cast<std::size_t>(group.multiply(a, b));
            const TruncatedSeries left = conjugates[ib] ? substitution[ia].frobenius() : substitution[ia];
            return series_substitute(left, substitution[ib]) == substitution[ab] &&
                   conjugates[ab] == (conjugates[ia] != conjugates[ib]);
        },
        policy);
}

bool SeriesAction::substitutions_valid() const {
    const auto mu = TruncatedSeries::mu(*field, precision);
    if (!(substitution[static_cast<std::size_t>(group.identity())] == mu)) return false;
    if (conjugates[static_cast<std::size_t>(group.identity())]) return false;
    if (precision < 2) return true;
    for (const auto& s : substitution) {
        if (s.valuation() != 1) return false;
        if (!(series_substitute(series_reversion(s), s) == mu)) return false;
    }
    return true;
}

SeriesAction SeriesAction::permuted(const std::vector<int>& perm) const {
    const auto n = substitution.size();
    if (perm.size() != n) throw std::invalid_argument("permuted: wrong permutation size");
    std::vector<int> back(n, -1);
    for (std::size_t i = 0; i < n; ++i) back[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    std::vector<TruncatedSeries> subs;
    std::vector<bool> conj;
    for (std::size_t i = 0; i < n; ++i) {
        subs.push_back(substitution[static_cast<std::size_t>(perm[i])]);
        conj.push_back(conjugates[static_cast<std::size_t>(perm[i])]);
    }
    std::vector<int> gens;
    for (int g : generators) gens.push_back(back[static_cast<std::size_t>(g)]);
    return {name, field, precision, group.permuted(perm), std::move(subs), std::move(conj), std::move(gens)};
}

// ---- Mobius -----------------------------------------------------------

Mobius mobius_multiply(const Mobius& m, const Mobius& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Mobius mobius_conjugate(const Mobius& m) {
    return {m.a.frobenius(), m.b.frobenius(), m.c.frobenius(), m.d.frobenius()};
}

bool projectively_equal(const Mobius& m, const Mobius& n) {
    const std::array<FieldElement, 4> v{m.a, m.b, m.c, m.d}, w{n.a, n.b, n.c, n.d};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (!(v[i] * w[j] == v[j] * w[i])) return false;
        }
    }
    return std::any_of(v.begin(), v.end(), [](const auto& x) { return !x.is_zero(); }) &&
           std::any_of(w.begin(), w.end(), [](const auto& x) { return !x.is_zero(); });
}

TruncatedSeries mobius_series(const Mobius& m, int precision) {
    if (!m.b.is_zero() || m.d.is_zero()) throw std::domain_error("mobius_series: map does not fix 0");
    const FiniteField& f = m.a.field();
    const auto den = TruncatedSeries(f, precision, {m.d, m.c});
    return TruncatedSeries::monomial(m.a, 1, precision) * series_invert(den);
}

std::string to_string(const Mobius& m) {
    return "(" + to_string(m.a) + " mu + " + to_string(m.b) + ")/(" + to_string(m.c) + " mu + " + to_string(m.d) + ")";
}

// ---- characteristic 3 -------------------------------------------------

WeierstrassCurve<FieldPoly> legendre_curve() {
    const auto& f = FiniteField::get(3);
    const auto lam = field_var(Var::lam, f);
    const auto zero = field_const(FieldElement(f, 0));
    const auto one = field_const(FieldElement(f, 1));
    return {zero, -(one + lam), zero, lam, zero};
}

LegendreReport legendre_j_check() {
    LegendreReport report;
    const auto& f = FiniteField::get(3);
    const auto c = legendre_curve();
    const auto delta = discriminant(c);
    const auto c4v = c4(c);
    const auto lam = field_var(Var::lam, f);
    const auto one = field_const(FieldElement(f, 1));

    const auto base = lam.pow(2) * (lam - one).pow(2);
    if (auto q = delta.divide_univariate(base, Var::lam)) {
        report.discriminant_unit_multiple = q->is_constant() && !q->is_zero_poly();
    }

    const auto mu = lam + one;
    const auto lhs = c4v.pow(3) * (mu.pow(2) - one).pow(2);
    const auto rhs = mu.pow(6) * delta;
    report.j_identity = lhs == rhs;
    report.degree = lhs.degree_in(Var::lam);
    report.degrees_match = lhs.degree_in(Var::lam) == rhs.degree_in(Var::lam);

    auto at = [&](const FieldPoly& p, const FieldElement& v) { return evaluate(p, {{Var::lam, v}}, v.field()); };
    const FieldElement minus_one(f, -1), zero_f(f, 0);
    report.j_zero_at_minus_one = at(c4v, minus_one).is_zero() && !at(delta, minus_one).is_zero();
    report.singular_at_zero = at(delta, zero_f).is_zero();

    const auto& f9 = FiniteField::get(3, 2);
    report.f9_spot_checks = true;
    for (const auto& l : FieldElement::elements(f9)) {
        const auto d = at(delta, l);
        if (d.is_zero()) continue;
        const auto m = l + FieldElement(f9, 1);
        const auto j = at(c4v, l).pow(3) / d;
        const auto expected = m.pow(6) / (m * m - FieldElement(f9, 1)).pow(2);
        if (!(j == expected)) report.f9_spot_checks = false;
        ++report.f9_points;
    }
    return report;
}

TruncatedSeries legendre_j_series(int precision) {
    const auto& f = FiniteField::get(3);
    const auto mu = TruncatedSeries::mu(f, precision);
    const auto one = TruncatedSeries::constant(FieldElement(f, 1), precision);
    return mu.pow(6) * series_invert((mu * mu - one).pow(2));
}

namespace {

TruncatedSeries s3_alpha(int n) { return -TruncatedSeries::mu(FiniteField::get(3), n); }

TruncatedSeries s3_beta(int n) {
    const auto& f = FiniteField::get(3);
    return mobius_series({FieldElement(f, 1), FieldElement(f, 0), FieldElement(f, -1), FieldElement(f, 1)}, n);
}

}  // namespace

S3Relations s3_relations(int precision) {
    const auto a = s3_alpha(precision), b = s3_beta(precision);
    const auto mu = TruncatedSeries::mu(FiniteField::get(3), precision);
    const auto ab = series_substitute(a, b);
    return {series_substitute(a, a) == mu, series_substitute(series_substitute(b, b), b) == mu,
            series_substitute(ab, ab) == mu};
}

SeriesAction s3_action(int precision) {
    if (precision < 6) throw std::invalid_argument("s3_action: precision must be at least 6");
    auto action = from_series_closure("s3", FiniteField::get(3), precision, {s3_alpha(precision), s3_beta(precision)});
    if (action.order() != 6) {
        throw std::logic_error("s3_action: generators produce a group of order " + std::to_string(action.order()));
    }
    if (!s3_relations(precision).passed()) throw std::logic_error("s3_action: a defining relation fails");
    return action;
}

// ---- characteristic 2 -------------------------------------------------

FieldPoly hesse_cubic(const FiniteField& field) {
    if (field.characteristic() != 2) throw std::invalid_argument("hesse_cubic: characteristic 2 only");
    const auto x = field_var(Var::x, field), y = field_var(Var::y, field), z = field_var(Var::z, field);
    const auto mu = field_var(Var::mu, field);
    return x.pow(3) + y.pow(3) + z.pow(3) + mu * x * y * z;
}

FieldPoly hessian_determinant(const FieldPoly& cubic) {
    const std::array<Var, 3> vars{Var::x, Var::y, Var::z};
    std::array<std::array<FieldPoly, 3>, 3> h{
        {{FieldPoly(cubic.one()), FieldPoly(cubic.one()), FieldPoly(cubic.one())},
         {FieldPoly(cubic.one()), FieldPoly(cubic.one()), FieldPoly(cubic.one())},
         {FieldPoly(cubic.one()), FieldPoly(cubic.one()), FieldPoly(cubic.one())}}};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) h[i][j] = derivative(derivative(cubic, vars[i]), vars[j]);
    }
    return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
           h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

FlexReport flex_check(const FieldPoly& cubic, const std::array<FieldPoly, 3>& p) {
    FlexReport report;
    report.on_curve = at_point(cubic, p).is_zero_poly();
    const std::array<FieldPoly, 3> n{at_point(derivative(cubic, Var::x), p), at_point(derivative(cubic, Var::y), p),
                                     at_point(derivative(cubic, Var::z), p)};
    report.smooth = std::any_of(n.begin(), n.end(), [](const auto& c) { return !c.is_zero_poly(); });
    report.hessian_vanishes = at_point(hessian_determinant(cubic), p).is_zero_poly();
    if (!report.on_curve || !report.smooth) return report;

    // Candidates e_i x n span the tangent line; take one not proportional to P.
    const FieldPoly zero(cubic.one());
    const std::array<std::array<FieldPoly, 3>, 3> candidates{
        {{zero, -n[2], n[1]}, {n[2], zero, -n[0]}, {-n[1], n[0], zero}}};
    for (const auto& q : candidates) {
        const bool proportional = (p[1] * q[2] - p[2] * q[1]).is_zero_poly() &&
                                  (p[2] * q[0] - p[0] * q[2]).is_zero_poly() &&
                                  (p[0] * q[1] - p[1] * q[0]).is_zero_poly();
        if (proportional) continue;
        const auto t = field_var(Var::t, cubic.one().field());
        const auto restricted = at_point(cubic, {p[0] + t * q[0], p[1] + t * q[1], p[2] + t * q[2]});
        const auto by_t = restricted.collect(Var::t);
        report.tangent_contact = true;
        for (int k = 0; k < 3; ++k) {
            if (by_t.count(k)) report.tangent_contact = false;
        }
        return report;
    }
    return report;
}

HesseModel hesse_curve_to_weierstrass() {
    const auto& f = FiniteField::get(2);
    const auto cubic = hesse_cubic(f);
    const auto x = field_var(Var::x, f), y = field_var(Var::y, f), z = field_var(Var::z, f);
    const auto mu = field_var(Var::mu, f);
    const auto one = field_const(FieldElement(f, 1));

    const auto flex = flex_check(cubic, {one, one, FieldPoly(one.one())});
    if (!flex.is_flex()) throw std::logic_error("hesse_curve_to_weierstrass: [1:1:0] is not a flex");

    // Inverse of X' = Z, Y' = X, Z' = X + Y + mu Z, then Z' = 1.
    const auto g = cubic.substitute({{Var::x, y}, {Var::y, z + y + mu * x}, {Var::z, x}}).substitute({{Var::z, one}});

    auto coeff = [&](int dx, int dy) {
        FieldPoly out(one.one());
        for (const auto& [e, c] : g.terms()) {
            if (e[static_cast<std::size_t>(Var::x)] == dx && e[static_cast<std::size_t>(Var::y)] == dy) {
                Exponents rest = e;
                rest[static_cast<std::size_t>(Var::x)] = 0;
                rest[static_cast<std::size_t>(Var::y)] = 0;
                out += FieldPoly::monomial(c, rest);
            }
        }
        return out;
    };
    for (const auto& [e, c] : g.terms()) {
        const int dx = e[static_cast<std::size_t>(Var::x)], dy = e[static_cast<std::size_t>(Var::y)];
        const bool allowed = (dy == 2 && dx == 0) || (dy == 1 && dx <= 1) || (dy == 0 && dx <= 3);
        if (!allowed) throw std::logic_error("hesse_curve_to_weierstrass: image is not in Weierstrass shape");
    }
    const auto lead = coeff(0, 2);
    if (!lead.is_constant() || lead.is_zero_poly()) throw std::logic_error("hesse_curve_to_weierstrass: bad y^2 term");
    const auto scale = field_const(lead.constant_term().inverse());
    const auto b = coeff(1, 1) * scale, c = coeff(0, 1) * scale;
    const auto d = -coeff(3, 0) * scale, e = -coeff(2, 0) * scale, h = -coeff(1, 0) * scale, k = -coeff(0, 0) * scale;
    if (d.is_zero_poly()) throw std::logic_error("hesse_curve_to_weierstrass: no x^3 term");

    HesseModel model{{b, e, c * d, h * d, k * d * d}, flex, false, std::nullopt};
    const auto d3 = mu.pow(3) - one;
    model.j_identity = j_invariant(model.curve) == Fraction<FieldPoly>(mu.pow(12), d3.pow(3));

    auto rest = discriminant(model.curve);
    int power = 0;
    while (!rest.is_constant()) {
        auto q = rest.divide_univariate(d3, Var::mu);
        if (!q) break;
        rest = *q;
        ++power;
    }
    if (rest.is_constant() && !rest.is_zero_poly()) model.discriminant_power = power;
    return model;
}

TorsionReport hesse_torsion_points_check() {
    const auto& f = f4();
    const auto cubic = hesse_cubic(f);
    auto k = [&](const FieldElement& v) { return field_const(v); };
    const FieldElement one(f, 1), zero(f, 0), omega = FieldElement::generator(f);
    TorsionReport report;
    report.first = flex_check(cubic, {k(one), k(zero), k(-one)});
    report.second = flex_check(cubic, {k(-one), k(omega), k(zero)});
    report.hessian_identically_zero = hessian_determinant(cubic).is_zero_poly();
    return report;
}

Gl2ActionReport gl2f3_action_check(ExecutionPolicy policy) {
    const auto closure = matrix_group({kAlpha, kBeta, kDiagonal});
    const std::vector<MobiusAction> gens{{mobius_alpha(), false}, {mobius_beta(), false}, {mobius_identity(), true}};
    const auto n = closure.elements.size();
    std::vector<MobiusAction> t;
    t.reserve(n);
    t.push_back({mobius_identity(), false});
    for (std::size_t i = 1; i < n; ++i) {
        t.push_back(then(t[static_cast<std::size_t>(closure.parent[i])],
                         gens[static_cast<std::size_t>(closure.via_generator[i])]));
    }

    Gl2ActionReport report;
    report.group_order = static_cast<int>(n);
    report.failing_pairs = failing_pairs(
        static_cast<int>(n),
        [&](int a, int b) {
            const auto& target = t[static_cast<std::size_t>(closure.group.multiply(a, b))];
            const auto composite = then(t[static_cast<std::size_t>(a)], t[static_cast<std::size_t>(b)]);
            return projectively_equal(target.m, composite.m) && target.conj == composite.conj;
        },
        policy);
    report.fixing_equals_sl2 = true;
    for (std::size_t i = 0; i < n; ++i) {
        const bool fixes = !t[i].conj;
        const bool det1 = mat_determinant(closure.elements[i]) == 1;
        report.omega_fixing += fixes ? 1 : 0;
        report.determinant_one += det1 ? 1 : 0;
        if (fixes != det1) report.fixing_equals_sl2 = false;
    }
    const auto& diag = t[static_cast<std::size_t>(matrix_index(closure, kDiagonal))];
    report.diagonal_conjugates = diag.conj && projectively_equal(diag.m, mobius_identity());
    return report;
}

TruncatedSeries hesse_j_series(int precision) {
    const auto& f = f4();
    const auto mu = TruncatedSeries::mu(f, precision);
    const auto one = TruncatedSeries::constant(FieldElement(f, 1), precision);
    return mu.pow(12) * series_invert((mu.pow(3) - one).pow(3));
}

SeriesAction sl2f3_series_action(int precision) {
    if (precision < 12) throw std::invalid_argument("sl2f3_series_action: precision must be at least 12");
    const auto& f = f4();
    auto closure = matrix_group({kAlpha, kBeta});
    if (closure.group.order() != 24) throw std::logic_error("sl2f3_series_action: generators do not give SL2(F3)");
    const std::vector<TruncatedSeries> gens{mobius_series(mobius_alpha(), precision),
                                            mobius_series(mobius_beta(), precision)};
    const auto n = closure.elements.size();
    std::vector<TruncatedSeries> subs{TruncatedSeries::mu(f, precision)};
    for (std::size_t i = 1; i < n; ++i) {
        subs.push_back(series_substitute(subs[static_cast<std::size_t>(closure.parent[i])],
                                         gens[static_cast<std::size_t>(closure.via_generator[i])]));
    }
    SeriesAction action{"sl2f3",
                        &f,
                        precision,
                        std::move(closure.group),
                        std::move(subs),
                        std::vector<bool>(n, false),
                        {matrix_index(closure, kAlpha), matrix_index(closure, kBeta)}};
    if (!action.right_action_failures().empty()) {
        throw std::logic_error("sl2f3_series_action: word-built series are inconsistent");
    }
    return action;
}

SeriesAction z2_trivial_action(int precision) {
    const auto& f = FiniteField::get(2);
    const auto mu = TruncatedSeries::mu(f, precision);
    return {"z2-trivial", &f, precision, FiniteGroup::cyclic(2), {mu, mu}, {false, false}, {1}};
}

SeriesAction trivial_action(const FiniteField& field, int precision) {
    return {"trivial", &field, precision, FiniteGroup::cyclic(1), {TruncatedSeries::mu(field, precision)}, {false}, {}};
}

}  // namespace picard
