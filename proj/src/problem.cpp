#include "radii/problem.hpp"

#include <cmath>

namespace radii {

const char* family_name(BoundFamily family) {
    switch (family) {
        case BoundFamily::BoundByN: return "n";
        case BoundFamily::BoundByM: return "m";
        case BoundFamily::BoundByMOverN: return "m-over-n";
        case BoundFamily::Caratheodory: return "caratheodory";
    }
    return "?";
}

const char* kind_name(KindTag tag) {
    switch (tag) {
        case KindTag::StarlikeOrder: return "starlike";
        case KindTag::ConvexOrder: return "convex";
        case KindTag::ParabolicStarlike: return "parabolic";
        case KindTag::UniformlyConvex: return "ucv";
        case KindTag::PositiveRealPartOrder: return "positive-real";
    }
    return "?";
}

void validate(const RadiusQuery& query) {
    const ClassSpec& cls = query.cls;
    if (!(cls.b >= 0.0 && cls.b <= 1.0)) {
        throw DomainError("b out of [0,1]");
    }
    const bool needs_m = cls.family != BoundFamily::BoundByN;
    if (needs_m && !cls.m.has_value()) {
        throw DomainError("M required for this class family but missing");
    }
    if (!needs_m && cls.m.has_value()) {
        throw DomainError("M given but the n-bounded family takes none");
    }
    if (cls.m.has_value() && !(*cls.m > 0.0 && std::isfinite(*cls.m))) {
        throw DomainError("M must be positive and finite");
    }

    const double alpha = query.kind.effective_alpha();
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw DomainError("alpha out of [0,1)");
    }

    const bool cara_family = cls.family == BoundFamily::Caratheodory;
    const bool cara_kind = query.kind.tag == KindTag::PositiveRealPartOrder;
    if (cara_family != cara_kind) {
        throw DomainError(cara_family
                              ? "Caratheodory family is only valid with the positive-real kind"
                              : "positive-real kind is only valid with the Caratheodory family");
    }

    if (!(query.tolerance > 0.0 && query.tolerance < 1e-6)) {
        throw DomainError("tolerance must lie in (0, 1e-6)");
    }
    if (query.max_iterations <= 0) {
        throw DomainError("max_iterations must be positive");
    }
}

}  // namespace radii
