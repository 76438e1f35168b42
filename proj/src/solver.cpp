#include "radii/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace radii::solver {

using equations::DefiningFunction;

namespace {

constexpr double kScanEdge = 1e-12;
constexpr int kScanSteps = 64;

}  // namespace

Bracket bracket_root(const DefiningFunction& g) {
    const double log_lo = std::log(kScanEdge);
    const double log_hi = std::log1p(-kScanEdge);  // log(1 - 1e-12)

    double x_prev = kScanEdge;
    double g_prev = g.evaluate(x_prev);
    Bracket found{};
    int sign_changes = 0;
    for (int i = 1; i <= kScanSteps; ++i) {
        const double t = static_cast<double>(i) / kScanSteps;
        const double x = std::exp(log_lo + t * (log_hi - log_lo));
        const double gx = g.evaluate(x);
        if ((g_prev < 0.0) != (gx < 0.0) || gx == 0.0) {
            ++sign_changes;
            found = Bracket{x_prev, x, g_prev, gx};
        }
        x_prev = x;
        g_prev = gx;
    }
    if (sign_changes == 0) {
        throw NoRoot("no sign change of " + g.equation_id + " on (0,1)");
    }
    if (sign_changes > 1) {
        throw MultipleRoots("multiple sign changes of " + g.equation_id + " at scan resolution");
    }
    return found;
}

RadiusResult refine(const DefiningFunction& g, Bracket bracket, double tol, int max_iter) {
    if (!(bracket.g_lo * bracket.g_hi < 0.0)) {
        throw DomainError("refine requires a sign-changing bracket");
    }
    if (!(tol > 0.0)) throw DomainError("tol must be positive");

    // Classic Brent layout: b is the current best iterate, [b,c] brackets
    // the root, a is the previous iterate.
    double a = bracket.lo, b = bracket.hi;
    double fa = bracket.g_lo, fb = bracket.g_hi;
    if (std::abs(fa) < std::abs(fb)) {
        std::swap(a, b);
        std::swap(fa, fb);
    }
    double c = a, fc = fa;
    double d = b - a, e = d;

    for (int iter = 1; iter <= max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double eps_tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b);
        const double xm = 0.5 * (c - b);

        if ((std::abs(xm) <= 0.5 * tol || std::abs(xm) <= eps_tol) && std::abs(fb) <= tol) {
            return RadiusResult{b, fb, iter, g.equation_id};
        }
        if (fb == 0.0) {
            return RadiusResult{b, 0.0, iter, g.equation_id};
        }

        if (std::abs(e) >= eps_tol && std::abs(fa) > std::abs(fb)) {
            // Secant when only two points differ, inverse quadratic otherwise.
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double inv_q = fa / fc;
                const double inv_r = fb / fc;
                p = s * (2.0 * xm * inv_q * (inv_q - inv_r) - (b - a) * (inv_r - 1.0));
                q = (inv_q - 1.0) * (inv_r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            // Accept only if the step stays inside the bracket and keeps
            // shrinking it at least geometrically.
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(eps_tol * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }

        a = b;
        fa = fb;
        if (std::abs(d) > eps_tol) {
            b += d;
        } else {
            b += (xm > 0.0 ? eps_tol : -eps_tol);
        }
        fb = g.evaluate(b);
    }
    throw NonConvergence("root refinement exhausted " + std::to_string(max_iter) +
                         " iterations for " + g.equation_id);
}

namespace {

DefiningFunction defining_function(const ClassSpec& cls, bool convex, double alpha) {
    const double b = cls.b;
    switch (cls.family) {
        case BoundFamily::BoundByN:
            if (convex) {
                return {"convex-bound-n",
                        [alpha, b](double r) { return equations::g_convex_bound_n(r, alpha, b); }};
            }
            return {"starlike-bound-n",
                    [alpha, b](double r) { return equations::g_starlike_bound_n(r, alpha, b); }};
        case BoundFamily::BoundByM: {
            const double m = *cls.m;
            if (convex) {
                return {"convex-bound-m",
                        [alpha, b, m](double r) { return equations::g_convex_bound_m(r, alpha, b, m); }};
            }
            return {"starlike-bound-m",
                    [alpha, b, m](double r) { return equations::g_starlike_bound_m(r, alpha, b, m); }};
        }
        case BoundFamily::BoundByMOverN: {
            const double m = *cls.m;
            if (convex) {
                throw UnsupportedClass("convex M/n is dispatched via reduction");
            }
            return {"starlike-bound-m-over-n", [alpha, b, m](double r) {
                        return equations::g_starlike_bound_m_over_n(r, alpha, b, m);
                    }};
        }
        case BoundFamily::Caratheodory:
            throw UnsupportedClass("Caratheodory radius is a closed form");
    }
    throw DomainError("unknown family");
}

RadiusResult solve_equation(const DefiningFunction& g, const RadiusQuery& query) {
    return refine(g, bracket_root(g), query.tolerance, query.max_iterations);
}

}  // namespace

RadiusResult solve_radius(const RadiusQuery& query) {
    validate(query);
    const double alpha = query.kind.effective_alpha();
    const ClassSpec& cls = query.cls;

    if (query.kind.tag == KindTag::PositiveRealPartOrder) {
        const double r0 = equations::caratheodory_radius(alpha, cls.b, *cls.m);
        const double residual = equations::caratheodory_margin(alpha, cls.b, *cls.m, r0);
        return RadiusResult{r0, residual, 0, "caratheodory-closed-form"};
    }

    const bool convex = query.kind.is_convex_type();
    if (convex && cls.family == BoundFamily::BoundByMOverN) {
        // f is convex of order alpha iff zf' is starlike of order alpha, and
        // zf' of an M/n-bounded function with |a_2| = 2b is M-bounded with
        // second coefficient 2(2b).
        if (2.0 * cls.b > 1.0) {
            throw DomainError("convex M/n reduction needs 2b <= 1");
        }
        RadiusQuery reduced = query;
        reduced.cls = ClassSpec::bound_by_m(2.0 * cls.b, *cls.m);
        reduced.kind = RadiusKind::starlike(alpha);
        RadiusResult result = solve_equation(defining_function(reduced.cls, false, alpha), reduced);
        result.equation_id = "convex-bound-m-over-n-via-starlike-bound-m";
        return result;
    }

    return solve_equation(defining_function(cls, convex, alpha), query);
}

double closed_form_radical(RadicalId id, double m) {
    switch (id) {
        case RadicalId::StarlikeNSecondCoeffMax: {
            const double s = std::sqrt(330.0);
            return 1.0 + (std::cbrt(s - 18.0) - std::cbrt(s + 18.0)) / std::pow(6.0, 2.0 / 3.0);
        }
        case RadicalId::StarlikeNSecondCoeffMaxHalf: {
            const double t = 2.0 * std::sqrt(2.0);
            return 1.0 + (std::cbrt(3.0 - t) - std::cbrt(3.0 + t)) / std::sqrt(2.0);
        }
        case RadicalId::StarlikeNZeroSecondCoeffHalf:
            return 1.0 - std::cbrt(0.5);
        case RadicalId::UnivalenceBoundM:
            if (!(m > 0.0)) throw DomainError("M must be positive");
            return 1.0 - std::sqrt(m / (1.0 + m));
    }
    throw DomainError("unknown radical id");
}

}  // namespace radii::solver
