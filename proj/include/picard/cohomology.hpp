#pragma once

// First cohomology of a finite group acting on k[mu]/mu^N, by exact linear
// algebra. A 1-cochain is stored as |G| blocks of N coefficients, block sigma
// holding xi_sigma.

#include <string>
#include <vector>

#include "picard/families.hpp"
#include "picard/linalg.hpp"

namespace picard {

/// sigma -> xi_sigma with xi_{sigma tau} = xi_sigma^tau + xi_tau.
struct Cocycle {
    std::vector<TruncatedSeries> values;
};

Cocycle to_cocycle(const SeriesAction& a, const CodeVector& v);
CodeVector to_vector(const Cocycle& c);

/// Checks the cocycle identity on every pair with series arithmetic.
bool verify_cocycle(const SeriesAction& a, const Cocycle& c, ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// Z^1 as the solution space of all |G|^2 pair equations, in reduced
/// echelon form. Throws std::invalid_argument for a semilinear action.
EchelonBasis cocycle_space(const SeriesAction& a);
/// B^1 spanned by sigma -> (mu^j)^sigma - mu^j, in reduced echelon form.
EchelonBasis coboundaries(const SeriesAction& a);
/// Dimension of {f : f^sigma = f for all sigma}.
int fixed_space_dimension(const SeriesAction& a);

struct CohomologyReport {
    std::string group;
    int order = 0;
    int precision = 0;
    int dim_z1 = 0;
    int dim_b1 = 0;
    int dim_h1 = 0;
    int dim_fixed = 0;
    /// Cocycles independent modulo B^1, one per H^1 dimension.
    std::vector<Cocycle> representatives;
    /// Z^1 basis, each re-checked on all pairs.
    std::vector<Cocycle> z1_basis;
    bool cocycles_verified = false;
    bool coboundaries_are_cocycles = false;
    bool rank_nullity = false;  ///< dim B^1 = N - dim fixed
    bool consistent() const { return cocycles_verified && coboundaries_are_cocycles && rank_nullity; }
};

CohomologyReport h1(const SeriesAction& a, ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// Z^1 and B^1 of the relabelled action, mapped back to the original
/// coordinates, coincide with those of `a`.
bool permutation_invariant(const SeriesAction& a, const std::vector<int>& perm);

/// One link of an elimination chain: the coefficient of mu^coefficient in
/// g^sigma - g, restricted to the variables still alive, involves exactly
/// a_variable.
struct EliminationStep {
    int coefficient = 0;
    int variable = 0;
    bool holds = false;
};

struct EliminationReport {
    int precision = 0;
    int field_order = 0;
    int alpha_dimension = 0;
    /// Degrees i with mu^i spanning the alpha solution space; empty when the
    /// space is not spanned by monomials.
    std::vector<int> alpha_support;
    int solution_dimension = 0;
    std::vector<EliminationStep> chain;
    std::size_t brute_force_candidates = 0;
    std::size_t brute_force_solutions = 0;
    bool methods_agree() const;
    bool chain_holds() const;
};

/// g = a1 mu + ... + a5 mu^5 over F3 with g^alpha = g^beta = g mod mu^6,
/// solved by linear algebra and by all 243 candidates.
EliminationReport elimination_check_char3(ExecutionPolicy policy = ExecutionPolicy::Parallel);
/// g = a1 mu + ... + a11 mu^11 over F4 with g^alpha = g^beta = g mod mu^12,
/// solved by linear algebra and by a staged search (alpha per coefficient,
/// then beta on the surviving candidates).
EliminationReport elimination_check_char2(ExecutionPolicy policy = ExecutionPolicy::Parallel);

struct XiBeta2Report {
    int basis_size = 0;
    bool beta_squared_central = false;
    bool beta_squared_trivial = false;
    int invariant = 0;    ///< cocycles with xi_{beta^2} fixed by every element
    int valuation_ok = 0; ///< cocycles with xi_{beta^2} = xi_beta^beta + xi_beta of valuation >= 2
    int min_valuation = 0;
    std::vector<int> failing;
    bool passed() const {
        return beta_squared_central && beta_squared_trivial && failing.empty() && invariant == basis_size &&
               valuation_ok == basis_size;
    }
};

/// Runs on the SL2(F3) action; generators[1] is beta.
XiBeta2Report xi_beta2_analysis(const SeriesAction& a, const std::vector<Cocycle>& basis);

}  // namespace picard
