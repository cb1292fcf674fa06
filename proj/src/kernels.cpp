#include "picard/kernels.hpp"

namespace picard {

std::vector<Transform<FieldElement>> scan_stabilizer(const WeierstrassCurve<FieldElement>& c, ExecutionPolicy policy) {
    const FiniteField& f = c.a1.field();
    const std::int64_t q = f.order();
    const std::int64_t count = (q - 1) * q * q * q;
    (void)transform_formulas();  // build the shared formulas before any worker needs them

    auto decode = [&](std::int64_t i) {
        const auto t = static_cast<int>(i % q);
        i /= q;
        const auto s = static_cast<int>(i % q);
        i /= q;
        const auto r = static_cast<int>(i % q);
        i /= q;
        const auto u = static_cast<int>(i + 1);
        return Transform<FieldElement>{FieldElement::from_code(f, u), FieldElement::from_code(f, r),
                                       FieldElement::from_code(f, s), FieldElement::from_code(f, t)};
    };
    const auto hits = filter_indices(count, [&](std::int64_t i) { return apply_transform(c, decode(i)) == c; }, policy);

    std::vector<Transform<FieldElement>> out;
    out.reserve(hits.size());
    for (auto i : hits) out.push_back(decode(i));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return transform_code(a) < transform_code(b); });
    return out;
}

}  // namespace picard
