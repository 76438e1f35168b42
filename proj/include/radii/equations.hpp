#pragma once

#include <functional>
#include <string>

#include "radii/problem.hpp"

namespace radii::equations {

// Closed tail sums of the power series used throughout. All take r in [0,1)
// and a start index, and return the sum over n >= start:
//
//   sum_n_pow(k, r, s)   = sum n^k r^(n-1),  k in {1,2,3}
//                          (full sums 1/(1-r)^2, (1+r)/(1-r)^3, (1+4r+r^2)/(1-r)^4)
//   sum_geometric(r, s)  = sum r^(n-1) = r^(s-1)/(1-r)
//   sum_log_tail(r, s)   = sum r^(n-1)/n   (from -log(1-r)/r with the leading
//                          terms removed; series-evaluated for small r to
//                          avoid cancellation)
double sum_n_pow(int k, double r, int start);
double sum_geometric(double r, int start);
double sum_log_tail(double r, int start);

// Defining functions G(r) of the radius equations, each arranged as
// (right side) - (left side) so that G(0) = 1-alpha (or 2(1-alpha)) > 0 and
// G(r) < 0 as r -> 1. The root of G on (0,1) is the sharp radius.

/// |a_n| <= n family, starlike of order alpha:
///   G(r) = 2(1-a+(2-a)(1-b)r)(1-r)^3 - (1-a) - (1+a)r
double g_starlike_bound_n(double r, double alpha, double b);

/// |a_n| <= M family, starlike of order alpha:
///   G(r) = ((1+M)(1-a)-(2-a)(2b-M)r)(1-r)^2 - M(1-a+ar)
double g_starlike_bound_m(double r, double alpha, double b, double m);

/// |a_n| <= M/n family, starlike of order alpha:
///   G(r) = (2(1+M)(1-a)+(2-a)(M-4b)r)(1-r) - 2M(1 + a(1-r)log(1-r)/r)
/// The factor (1-r)log(1-r)/r has a removable singularity at r = 0 with
/// limit -1; it is series-evaluated below the crossover in log_factor().
double g_starlike_bound_m_over_n(double r, double alpha, double b, double m);

/// |a_n| <= n family, convex of order alpha:
///   G(r) = 2(1-a+2(2-a)(1-b)r)(1-r)^4 - (1-a) - 4r - (1+a)r^2
double g_convex_bound_n(double r, double alpha, double b);

/// |a_n| <= M family, convex of order alpha:
///   G(r) = ((1-a)(1+M)-2(2-a)(2b-M)r)(1-r)^3 - M(1-a+(1+a)r)
double g_convex_bound_m(double r, double alpha, double b, double m);

/// Closed-form radius for the Caratheodory-type class (|c_1| = 2b,
/// |c_n| <= 2M): the positive root of 2br + 2Mr^2/(1-r) = 1-alpha,
///   r0 = 2(1-a) / (1-a+2b + sqrt((1-a+2b)^2 + 8(1-a)(M-b))).
double caratheodory_radius(double alpha, double b, double m);

/// (1-alpha) - (2br + 2Mr^2/(1-r)); zero exactly at caratheodory_radius.
double caratheodory_margin(double alpha, double b, double m, double r);

/// Starlike sufficiency margin
///   (1-a) - [2(2-a)b r + sum_{n>=3} (n-a) beta_n r^(n-1)]
/// with beta_n the family bound (n, M or M/n), via the closed tail sums.
/// Nonnegative margin guarantees |zf'/f - 1| <= 1-a on |z| <= r.
double sufficiency_margin_starlike(const ClassSpec& cls, double alpha, double r);

/// Convex analogue with weight n(n-a):
///   (1-a) - [4(2-a)b r + sum_{n>=3} n(n-a) beta_n r^(n-1)]
/// Supports the n- and M-bounded families; the M/n family reduces to the
/// M-bounded starlike problem (see solver) and throws UnsupportedClass here.
double sufficiency_margin_convex(const ClassSpec& cls, double alpha, double r);

/// A defining function bundled with the tag reported in results.
struct DefiningFunction {
    std::string equation_id;
    std::function<double(double)> evaluate;
};

}  // namespace radii::equations
