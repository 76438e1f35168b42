#pragma once

#include "radii/equations.hpp"
#include "radii/problem.hpp"

namespace radii::solver {

/// Sign-changing interval: 0 <= lo < hi < 1 and g_lo * g_hi < 0.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    double g_lo = 0.0;
    double g_hi = 0.0;
};

/// Scans [1e-12, 1-1e-12] with 64 geometric steps (log-spaced, dense toward
/// 0 where all the radii live) and returns the unique sign-changing cell.
/// Throws NoRoot if no sign change is seen and MultipleRoots if more than
/// one cell changes sign at scan resolution.
Bracket bracket_root(const equations::DefiningFunction& g);

/// Brent-style refinement: inverse-quadratic/secant steps guarded by
/// bisection, accepted only while they stay inside the bracket and keep
/// halving it. Converged when the bracket width and |g| both drop to tol.
RadiusResult refine(const equations::DefiningFunction& g, Bracket bracket,
                    double tol, int max_iter);

/// Dispatches a validated query to its defining equation (or closed form)
/// and returns the radius. The convex M/n case is solved through the
/// equivalent M-bounded starlike problem with b replaced by 2b, which
/// requires 2b <= 1.
RadiusResult solve_radius(const RadiusQuery& query);

enum class RadicalId {
    StarlikeNSecondCoeffMax,       // n-bounded, b=1, alpha=0
    StarlikeNSecondCoeffMaxHalf,   // n-bounded, b=1, alpha=1/2
    StarlikeNZeroSecondCoeffHalf,  // n-bounded, b=0, alpha=1/2: 1 - (1/2)^(1/3)
    UnivalenceBoundM,              // M-bounded, 2b=M, alpha=0: 1 - sqrt(M/(1+M))
};

/// Exact radical expressions for the parameter sets that admit them;
/// m is read only for UnivalenceBoundM.
double closed_form_radical(RadicalId id, double m = 1.0);

}  // namespace radii::solver
