#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace radii {

// Error vocabulary shared by all modules.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsupportedClass : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoRoot : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MultipleRoots : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Which coefficient inequality holds for n >= 3.
enum class BoundFamily {
    BoundByN,       // |a_n| <= n
    BoundByM,       // |a_n| <= M
    BoundByMOverN,  // |a_n| <= M/n
    Caratheodory,   // p = 1 + c_1 z + ..., |c_1| = 2b, |c_n| <= 2M
};

/// Coefficient-bound family with the fixed second-coefficient parameter b
/// (|a_2| = 2b, or |c_1| = 2b for the Caratheodory family) and, where the
/// family needs it, the bound M.
struct ClassSpec {
    BoundFamily family = BoundFamily::BoundByN;
    double b = 1.0;
    std::optional<double> m{};

    static ClassSpec bound_by_n(double b) { return {BoundFamily::BoundByN, b, {}}; }
    static ClassSpec bound_by_m(double b, double m) { return {BoundFamily::BoundByM, b, m}; }
    static ClassSpec bound_by_m_over_n(double b, double m) { return {BoundFamily::BoundByMOverN, b, m}; }
    static ClassSpec caratheodory(double b, double m) { return {BoundFamily::Caratheodory, b, m}; }

    bool operator==(const ClassSpec&) const = default;
};

enum class KindTag {
    StarlikeOrder,
    ConvexOrder,
    ParabolicStarlike,
    UniformlyConvex,
    PositiveRealPartOrder,
};

/// Requested radius. ParabolicStarlike and UniformlyConvex are distinct
/// variants so reports can name them, but they compute with alpha = 1/2.
struct RadiusKind {
    KindTag tag = KindTag::StarlikeOrder;
    double alpha = 0.0;  // meaningful for the parameterized variants only

    static RadiusKind starlike(double alpha) { return {KindTag::StarlikeOrder, alpha}; }
    static RadiusKind convex(double alpha) { return {KindTag::ConvexOrder, alpha}; }
    static RadiusKind parabolic_starlike() { return {KindTag::ParabolicStarlike, 0.5}; }
    static RadiusKind uniformly_convex() { return {KindTag::UniformlyConvex, 0.5}; }
    static RadiusKind positive_real_part(double alpha) { return {KindTag::PositiveRealPartOrder, alpha}; }

    // Order parameter actually used by the computation.
    double effective_alpha() const {
        switch (tag) {
            case KindTag::ParabolicStarlike:
            case KindTag::UniformlyConvex:
                return 0.5;
            default:
                return alpha;
        }
    }

    // Starlike-type kinds test z f'/f; convex-type kinds test 1 + z f''/f'.
    bool is_starlike_type() const {
        return tag == KindTag::StarlikeOrder || tag == KindTag::ParabolicStarlike;
    }
    bool is_convex_type() const {
        return tag == KindTag::ConvexOrder || tag == KindTag::UniformlyConvex;
    }

    bool operator==(const RadiusKind&) const = default;
};

struct RadiusQuery {
    ClassSpec cls;
    RadiusKind kind;
    double tolerance = 1e-12;
    int max_iterations = 200;

    bool operator==(const RadiusQuery&) const = default;
};

/// Computed radius r0 in (0,1) together with the residual of the defining
/// function at r0 and the equation tag that was solved.
struct RadiusResult {
    double radius = 0.0;
    double residual = 0.0;
    int iterations = 0;
    std::string equation_id;
};

struct VerificationReport {
    std::string check_name;
    bool passed = false;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

const char* family_name(BoundFamily family);
const char* kind_name(KindTag tag);

/// Throws DomainError unless every type invariant holds: b in [0,1],
/// alpha in [0,1), M present and positive exactly for the families that
/// need it, Caratheodory paired with PositiveRealPartOrder and only with
/// it, tolerance in (0, 1e-6), positive iteration budget.
void validate(const RadiusQuery& query);

}  // namespace radii
