#pragma once

#include <complex>

#include "radii/problem.hpp"

namespace radii::extremal {

using Complex = std::complex<double>;

/// Closed form of the sharpness witness per family.
enum class Form {
    StarBoundN,      // f0(z) = 2z + 2(1-b)z^2 - z/(1-z)^2
    BoundM,          // f0(z) = z - 2bz^2 - Mz^3/(1-z)
    BoundMOverN,     // f0(z) = (1+M)z + (M/2-2b)z^2 + M log(1-z)
    CaratheodoryP0,  // p0(z) = 1 - 2bz - 2Mz^2/(1-z)
};

/// The extremal function of a coefficient-bound class: every bound is
/// saturated and the signs are aligned so the class property fails first on
/// the positive real axis. Evaluates its closed form, both hand-derived
/// derivatives, the membership quotients zf'/f and 1+zf''/f', and truncated
/// partial sums with a rigorous tail bound (the series oracle).
class ExtremalFunction {
public:
    explicit ExtremalFunction(const ClassSpec& cls);

    const ClassSpec& cls() const { return cls_; }
    Form form() const { return form_; }

    /// Coefficient of z^n (n >= 0). The analytic forms have a_0 = 0, a_1 = 1,
    /// a_2 = -2b and then -n, -M or -M/n; the Caratheodory form has c_0 = 1,
    /// c_1 = -2b and c_n = -2M for n >= 2.
    double coefficient(int n) const;

    Complex eval(Complex z) const;
    Complex eval_d1(Complex z) const;
    Complex eval_d2(Complex z) const;

    /// z f'(z) / f(z). Throws PoleError when |f(z)| < 1e-300 (the paper's
    /// denominators are positive for r <= r0, so a hit means the caller
    /// left the valid disk) and UnsupportedClass for the p0 form.
    Complex star_quotient(Complex z) const;

    /// 1 + z f''(z) / f'(z); same guards against |f'(z)| < 1e-300.
    Complex convex_quotient(Complex z) const;

    struct Truncated {
        Complex value;
        double tail_bound;  // rigorous bound on |true value - value|
    };

    /// Partial sum of the series through n_terms powers of z, plus a
    /// geometric-ratio bound on the dropped tail. Requires |z| <= 1 - 1e-6.
    Truncated eval_truncated(Complex z, int n_terms) const;

    /// Same for the derivative series sum n a_n z^(n-1).
    Truncated eval_d1_truncated(Complex z, int n_terms) const;

private:
    void require_in_disk(Complex z) const;

    ClassSpec cls_;
    Form form_;
};

}  // namespace radii::extremal
