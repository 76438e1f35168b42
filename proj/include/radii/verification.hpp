#pragma once

#include <vector>

#include "radii/extremal.hpp"
#include "radii/problem.hpp"

namespace radii::verification {

/// Minima of the membership quantities over the circle |z| = radius.
/// For the analytic forms w = zf'/f and v = 1 + zf''/f'; for the
/// Caratheodory form both channels carry p0 itself (the quantity the
/// positive-real-part test constrains). Only the channel matching the kind
/// under test is meaningful at a given radius; the other can sit beyond its
/// own sharp radius.
struct CircleScan {
    double radius = 0.0;
    int samples = 0;
    double min_re_star = 0.0;          // min Re(w)
    double min_parabolic_margin = 0.0; // min Re(w) - |w - 1|
    double min_re_convex = 0.0;        // min Re(v)
    double min_ucv_margin = 0.0;       // min Re(v) - |v - 1|
    double argmin_angle = 0.0;         // angle attaining the star minimum
};

/// Samples w and v on a uniform angular grid (samples must be a power of
/// two) and records the channel minima.
CircleScan scan_circle(const extremal::ExtremalFunction& ef, double r, int samples);

/// Solves for r0, then asserts the sharpness equalities at z = r0 on the
/// extremal function: |w - 1| = 1 - alpha and Re w = alpha for starlike
/// kinds, |v - 1| = 1 - alpha and Re v = alpha for convex kinds,
/// |p0(r0) - 1| = 1 - alpha for the Caratheodory kind. Tolerance 1e-8.
VerificationReport check_sharpness(const ClassSpec& cls, const RadiusKind& kind);

/// Root of the truncated worst-case coefficient-sum margin, with the
/// rigorous geometric tail bound folded in: the sharp radius lies in
/// [lo, hi]. Independent of the closed-form defining equations.
struct OracleInterval {
    double lo = 0.0;
    double hi = 0.0;
    double value() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
};

OracleInterval oracle_root(const ClassSpec& cls, const RadiusKind& kind, int n_terms);

struct ParameterGrid {
    std::vector<double> alphas;
    std::vector<double> bs;
    std::vector<double> ms;
};

/// alpha in {0, 0.25, 0.5, 0.75}, b in {0, 0.5, 1}, M in {0.5, 1, 2}.
ParameterGrid default_grid();

/// Every (class, kind) instance the grid supports. Combinations the theory
/// does not cover (convex M/n with 2b > 1, Caratheodory with non-matching
/// kinds) are skipped, not failed.
std::vector<RadiusQuery> grid_queries(const ParameterGrid& grid);

/// The fixed reference radii (four starlike/parabolic and four convex/ucv
/// constants of the n-bounded family plus the M = 1 univalence radius),
/// each compared against solve_radius at 1e-5.
std::vector<VerificationReport> constants_suite();

/// check_sharpness plus the circle-scan triple (0.9 r0, r0, and
/// min(1.05 r0, (r0+1)/2)) for every grid query.
std::vector<VerificationReport> sharpness_suite(const ParameterGrid& grid);

/// |solve_radius - oracle_root| <= 1e-9 + interval width per grid query.
std::vector<VerificationReport> oracle_suite(const ParameterGrid& grid, int n_terms = 10000);

/// Radius strictly decreasing in alpha and nonincreasing in b along the
/// grid, plus the zero-second-coefficient improvement r1 > r0 for each M.
std::vector<VerificationReport> monotonicity_suite(const ParameterGrid& grid);

/// All of the above except constants. Failures are reported, never thrown.
std::vector<VerificationReport> run_suite(const ParameterGrid& grid);

}  // namespace radii::verification
