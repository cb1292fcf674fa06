#pragma once

#include <optional>
#include <vector>

#include "picard/field.hpp"
#include "picard/group.hpp"
#include "picard/kernels.hpp"
#include "picard/transform.hpp"
#include "picard/weierstrass.hpp"

namespace picard {

/// The stabilizer of a curve over F_q inside G(F_q).
struct AutomorphismGroup {
    WeierstrassCurve<FieldElement> curve;
    /// Sorted by transform_code; index i in `group` is elements[i].
    std::vector<Transform<FieldElement>> elements;
    FiniteGroup group;

    int order() const { return group.order(); }
    /// Index of an element, if present.
    std::optional<int> index_of(const Transform<FieldElement>& g) const;
};

/// Exhaustive scan of all (u, r, s, t) fixing `c`; the result is checked to
/// be closed under compose and invert. Throws std::domain_error for a
/// singular curve.
AutomorphismGroup enumerate_automorphisms(const WeierstrassCurve<FieldElement>& c,
                                          ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// The action of an automorphism on points: (x, y) -> (xs x + xt, ys y + yx x + yt).
struct PointMap {
    FieldElement x_scale, x_shift, y_scale, y_x, y_shift;

    friend bool operator==(const PointMap&, const PointMap&) = default;
};

PointMap point_map(const Transform<FieldElement>& g);

/// Cyclic automorphism group with a pinned generator and root of unity.
struct CyclicCharacterData {
    int order;
    int generator;      ///< index into AutomorphismGroup::elements
    FieldElement zeta;  ///< pinned primitive order-th root of unity
    int exponent;       ///< differential_factor(generator) = zeta^exponent
};

/// e with differential_factor(generator) = zeta^e, where `generator` has
/// order |A| (so A is cyclic). Throws std::invalid_argument when the element
/// does not generate A or the factor is not a power of zeta.
int differential_character(const AutomorphismGroup& a, int generator, const FieldElement& zeta);

/// y^2 = x^3 + x: the generator is the automorphism (x, y) -> (zeta^2 x, zeta y)
/// for the smallest-code primitive 4th root zeta.
CyclicCharacterData mu4_character(const AutomorphismGroup& a);

struct Mu6Data {
    CyclicCharacterData character;
    int order_two;    ///< (x, y) -> (x, -y - 1)
    int order_three;  ///< (x, y) -> (zeta3 x, y)
};

/// y^2 + y = x^3: zeta6 is the smallest-code primitive 6th root and
/// zeta3 = -zeta6; the generator is the product of the order-2 element
/// (x, -y - 1) and the order-3 element (zeta3 x, y), i.e. the element
/// (-1, zeta3) of mu2 x mu3 = mu6.
Mu6Data mu6_character(const AutomorphismGroup& a);

/// Exponents of the lambda character on the two special curves.
struct LambdaExponents {
    int e4 = 0;  ///< in Z/4
    int e6 = 0;  ///< in Z/6
};

/// (chi4, chi6) = (i e4 mod 4, i e6 mod 6) for lambda^i, and its image in
/// Z/12 = {(a, b) : a = b mod 2}.
struct ChiPair {
    int chi4 = 0;
    int chi6 = 0;
    int z12 = 0;
};

/// Throws std::logic_error if the pair is not in the fiber product
/// (chi4 != chi6 mod 2).
ChiPair chi_pair(long i, const LambdaExponents& lambda = {1, 1});

/// The unique x mod 12 with x = a mod 4 and x = b mod 6; nullopt when a, b
/// disagree mod 2.
std::optional<int> crt_4_6(int a, int b);

}  // namespace picard
