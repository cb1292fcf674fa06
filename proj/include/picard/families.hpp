#pragma once

// Legendre family in characteristic 3, Hesse family in characteristic 2, and
// the finite group actions on truncated power series in mu.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "picard/field.hpp"
#include "picard/fraction.hpp"
#include "picard/group.hpp"
#include "picard/kernels.hpp"
#include "picard/multipoly.hpp"
#include "picard/series.hpp"
#include "picard/weierstrass.hpp"

namespace picard {

/// A finite group acting on k[mu]/mu^N from the right:
///   f^sigma = conj^{c_sigma}(f) o s_sigma,
/// where s_sigma is a substitution series and conj is the Frobenius of the
/// base field (omega -> omega^2 on F4). Composites obey
///   s_{sigma tau} = conj^{c_tau}(s_sigma) o s_tau,  c_{sigma tau} = c_sigma + c_tau.
struct SeriesAction {
    std::string name;
    const FiniteField* field;
    int precision;
    FiniteGroup group;
    std::vector<TruncatedSeries> substitution;
    std::vector<bool> conjugates;
    /// Indices of the generators the action was built from.
    std::vector<int> generators;

    int order() const { return group.order(); }
    bool semilinear() const;
    TruncatedSeries act(const TruncatedSeries& f, int sigma) const;
    /// Pairs (sigma, tau) where s_{sigma tau} and the composite disagree.
    std::vector<std::pair<int, int>> right_action_failures(ExecutionPolicy policy = ExecutionPolicy::Parallel) const;
    /// s_e = mu, and every s_sigma has valuation 1 with an invertible
    /// compositional inverse (vacuous below precision 2).
    bool substitutions_valid() const;
    /// Same action with the elements relabelled: new index i is old perm[i].
    SeriesAction permuted(const std::vector<int>& perm) const;
};

/// mu -> (a mu + b) / (c mu + d) over a finite field.
struct Mobius {
    FieldElement a, b, c, d;
};

Mobius mobius_multiply(const Mobius& m, const Mobius& n);
Mobius mobius_conjugate(const Mobius& m);
/// Equality in PGL2.
bool projectively_equal(const Mobius& m, const Mobius& n);
/// Power-series expansion; requires b = 0 and d != 0 (std::domain_error).
TruncatedSeries mobius_series(const Mobius& m, int precision);
std::string to_string(const Mobius& m);

// ---- characteristic 3 -------------------------------------------------

/// y^2 = x^3 - (1 + lam) x^2 + lam x over F3[lam].
WeierstrassCurve<FieldPoly> legendre_curve();

struct LegendreReport {
    bool discriminant_unit_multiple = false;  ///< Delta = c * lam^2 (lam - 1)^2, c in F3^x
    bool j_identity = false;                  ///< c4^3 (mu^2 - 1)^2 = mu^6 Delta, mu = lam + 1
    bool degrees_match = false;
    int degree = 0;
    bool j_zero_at_minus_one = false;
    bool singular_at_zero = false;
    /// Every lam in F9 with Delta != 0 satisfies j = mu^6 / (mu^2 - 1)^2.
    bool f9_spot_checks = false;
    int f9_points = 0;
    bool passed() const {
        return discriminant_unit_multiple && j_identity && degrees_match && j_zero_at_minus_one && singular_at_zero &&
               f9_spot_checks;
    }
};

LegendreReport legendre_j_check();

/// j(mu) = mu^6 / (mu^2 - 1)^2 as a series over F3.
TruncatedSeries legendre_j_series(int precision);

/// S3 generated by alpha: mu -> -mu and beta: mu -> mu / (1 - mu) over F3.
/// Throws std::invalid_argument for N < 6 and std::logic_error when the
/// closure does not have order 6 or a relation fails.
SeriesAction s3_action(int precision);

struct S3Relations {
    bool alpha_squared = false;
    bool beta_cubed = false;
    bool alpha_beta_squared = false;
    bool passed() const { return alpha_squared && beta_cubed && alpha_beta_squared; }
};

S3Relations s3_relations(int precision);

// ---- characteristic 2 -------------------------------------------------

/// X^3 + Y^3 + Z^3 + mu XYZ over F (characteristic 2) in the variables x, y, z, mu.
FieldPoly hesse_cubic(const FiniteField& field);

/// Tangent-line test: P is a smooth point of F and the tangent line meets F
/// at P with multiplicity at least 3.
struct FlexReport {
    bool on_curve = false;
    bool smooth = false;
    bool tangent_contact = false;
    bool hessian_vanishes = false;
    bool is_flex() const { return on_curve && smooth && tangent_contact; }
};

/// Point coordinates are polynomials in mu over the field of `cubic`.
FlexReport flex_check(const FieldPoly& cubic, const std::array<FieldPoly, 3>& point);

/// 3x3 Hessian determinant of a ternary cubic.
FieldPoly hessian_determinant(const FieldPoly& cubic);

struct HesseModel {
    /// Coefficients in F2[mu].
    WeierstrassCurve<FieldPoly> curve;
    FlexReport flex;  ///< the flex [1:1:0]
    bool j_identity = false;  ///< j = mu^12 / (mu^3 - 1)^3
    /// Delta = c (mu^3 - 1)^k with c a nonzero constant.
    std::optional<int> discriminant_power;
};

/// Sends the flex [1:1:0] to [0:1:0] and its tangent X + Y + mu Z to the line
/// at infinity (X' = Z, Y' = X, Z' = X + Y + mu Z), dehomogenizes and scales
/// x, y by mu^3 + 1. Throws std::logic_error if [1:1:0] is not a flex.
HesseModel hesse_curve_to_weierstrass();

struct TorsionReport {
    FlexReport first;   ///< [1:0:-1]
    FlexReport second;  ///< [-1:omega:0]
    /// The Hessian vanishes identically in characteristic 2, so the tangent
    /// contact test carries the flex criterion.
    bool hessian_identically_zero = false;
    bool passed() const { return first.is_flex() && second.is_flex() && first.hessian_vanishes && second.hessian_vanishes; }
};

TorsionReport hesse_torsion_points_check();

struct Gl2ActionReport {
    int group_order = 0;
    std::vector<std::pair<int, int>> failing_pairs;
    int omega_fixing = 0;
    int determinant_one = 0;
    bool fixing_equals_sl2 = false;
    bool diagonal_conjugates = false;  ///< diag(1,-1) acts by omega -> omega^2 and fixes mu
    bool passed() const {
        return group_order == 48 && failing_pairs.empty() && omega_fixing == 24 && determinant_one == 24 &&
               fixing_equals_sl2 && diagonal_conjugates;
    }
};

/// GL2(F3) generated by alpha = [[1,0],[-1,1]], beta = [[0,-1],[1,0]] and
/// diag(1,-1), acting by mu -> omega mu, mu -> mu/(mu - 1) and conjugation.
Gl2ActionReport gl2f3_action_check(ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// j(mu) = mu^12 / (mu^3 - 1)^3 as a series over F4.
TruncatedSeries hesse_j_series(int precision);

/// SL2(F3) acting on F4[mu]/mu^N through alpha: mu -> omega mu and
/// beta: mu -> mu / (mu - 1); generators[0] is alpha, generators[1] is beta.
/// Throws std::invalid_argument for N < 12 and std::logic_error when the
/// word-built series are inconsistent.
SeriesAction sl2f3_series_action(int precision);

/// Z/2 acting trivially on F2[mu]/mu^N.
SeriesAction z2_trivial_action(int precision);

/// The trivial group acting on F[mu]/mu^N.
SeriesAction trivial_action(const FiniteField& field, int precision);

}  // namespace picard
