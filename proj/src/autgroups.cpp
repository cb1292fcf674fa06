#include "picard/autgroups.hpp"

#include <map>
#include <stdexcept>

namespace picard {

std::optional<int> AutomorphismGroup::index_of(const Transform<FieldElement>& g) const {
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] == g) return static_cast<int>(i);
    }
    return std::nullopt;
}

AutomorphismGroup enumerate_automorphisms(const WeierstrassCurve<FieldElement>& c, ExecutionPolicy policy) {
    if (discriminant(c).is_zero()) throw std::domain_error("enumerate_automorphisms: curve is singular");
    auto elements = scan_stabilizer(c, policy);

    std::map<std::int64_t, int> index;
    for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(transform_code(elements[i]), static_cast<int>(i));
    const auto n = elements.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a) {
        auto inv = index.find(transform_code(invert(elements[a])));
        if (inv == index.end()) throw std::logic_error("automorphism set is not closed under inverse");
        for (std::size_t b = 0; b < n; ++b) {
            auto it = index.find(transform_code(compose(elements[a], elements[b])));
            if (it == index.end()) throw std::logic_error("automorphism set is not closed under compose");
            table[a][b] = it->second;
        }
    }
    std::vector<std::string> names;
    for (const auto& g : elements) names.push_back(to_string(g));
    FiniteGroup group(std::move(table), std::move(names));
    if (!group.verify_associativity()) throw std::logic_error("automorphism table is not associative");
    return {c, std::move(elements), std::move(group)};
}

PointMap point_map(const Transform<FieldElement>& g) {
    const FieldElement u2 = g.u * g.u;
    return {u2, g.r, u2 * g.u, g.s * u2, g.t};
}

int differential_character(const AutomorphismGroup& a, int generator, const FieldElement& zeta) {
    const int n = a.order();
    if (a.group.element_order(generator) != n) throw std::invalid_argument("differential_character: group is not generated by the element");
    if (zeta.multiplicative_order() != n) throw std::invalid_argument("differential_character: zeta has the wrong order");
    const FieldElement factor = differential_factor(a.elements[static_cast<std::size_t>(generator)]);
    FieldElement power(zeta.field(), 1);
    for (int e = 0; e < n; ++e) {
        if (power == factor) return e;
        power *= zeta;
    }
    throw std::invalid_argument("differential_character: factor is not a power of zeta");
}

namespace {

int find_by_point_map(const AutomorphismGroup& a, const PointMap& target, const char* what) {
    for (std::size_t i = 0; i < a.elements.size(); ++i) {
        if (point_map(a.elements[i]) == target) return static_cast<int>(i);
    }
    throw std::logic_error(std::string("automorphism ") + what + " is missing from the enumerated group");
}

}  // namespace

CyclicCharacterData mu4_character(const AutomorphismGroup& a) {
    const FiniteField& f = a.curve.a1.field();
    auto zeta = primitive_root_of_unity(f, 4);
    if (!zeta) throw std::invalid_argument("mu4_character: field has no primitive 4th root of unity");
    const FieldElement zero(f, 0);
    const int gen = find_by_point_map(a, {*zeta * *zeta, zero, *zeta, zero, zero}, "(zeta^2 x, zeta y)");
    return {a.order(), gen, *zeta, differential_character(a, gen, *zeta)};
}

Mu6Data mu6_character(const AutomorphismGroup& a) {
    const FiniteField& f = a.curve.a1.field();
    auto zeta6 = primitive_root_of_unity(f, 6);
    if (!zeta6) throw std::invalid_argument("mu6_character: field has no primitive 6th root of unity");
    const FieldElement zeta3 = -*zeta6;
    if (zeta3.multiplicative_order() != 3) throw std::logic_error("-zeta6 is not a primitive cube root");
    const FieldElement zero(f, 0), one(f, 1);
    const int two = find_by_point_map(a, {one, zero, -one, zero, -one}, "(x, -y - 1)");
    const int three = find_by_point_map(a, {zeta3, zero, one, zero, zero}, "(zeta3 x, y)");
    const int gen = a.group.multiply(two, three);
    return {{a.order(), gen, *zeta6, differential_character(a, gen, *zeta6)}, two, three};
}

std::optional<int> crt_4_6(int a, int b) {
    for (int x = 0; x < 12; ++x) {
        if (x % 4 == ((a % 4) + 4) % 4 && x % 6 == ((b % 6) + 6) % 6) return x;
    }
    return std::nullopt;
}

ChiPair chi_pair(long i, const LambdaExponents& lambda) {
    auto reduce = [](long v, int n) { return static_cast<int>(((v % n) + n) % n); };
    ChiPair out{reduce(i * lambda.e4, 4), reduce(i * lambda.e6, 6), 0};
    auto z = crt_4_6(out.chi4, out.chi6);
    if (!z || out.chi4 % 2 != out.chi6 % 2) throw std::logic_error("chi_pair: (chi4, chi6) is not in Z/12");
    out.z12 = *z;
    return out;
}

}  // namespace picard
