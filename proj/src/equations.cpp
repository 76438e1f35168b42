#include "radii/equations.hpp"

#include <cmath>

namespace radii::equations {

namespace {

void require_unit_range(double r) {
    if (!(r >= 0.0 && r < 1.0)) {
        throw DomainError("r must lie in [0,1)");
    }
}

void require_params(double alpha, double b) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("alpha out of [0,1)");
    if (!(b >= 0.0 && b <= 1.0)) throw DomainError("b out of [0,1]");
}

void require_m(double m) {
    if (!(m > 0.0 && std::isfinite(m))) throw DomainError("M must be positive and finite");
}

// (1-r)log(1-r)/r, continuous at r = 0 with value -1. Below the crossover
// use log(1-r)/r = -(1 + r/2 + r^2/3 + r^3/4 + r^4/5) (+O(r^5)); truncation
// stays under 1e-20 there.
double log_factor(double r) {
    if (r < 1e-4) {
        const double s = 1.0 + r * (0.5 + r * (1.0 / 3.0 + r * (0.25 + r * 0.2)));
        return -(1.0 - r) * s;
    }
    return (1.0 - r) * std::log1p(-r) / r;
}

}  // namespace

double sum_n_pow(int k, double r, int start) {
    require_unit_range(r);
    if (k < 1 || k > 3) throw DomainError("k must be 1, 2 or 3");
    if (start < 1) throw DomainError("start must be >= 1");

    // Tail form of the closed sums 1/(1-r)^2, (1+r)/(1-r)^3 and
    // (1+4r+r^2)/(1-r)^4: algebraically identical to subtracting the
    // omitted leading terms, but free of cancellation for large start.
    const double u = 1.0 - r;
    const double s = start;
    const double rp = std::pow(r, start - 1);
    switch (k) {
        case 1:
            return rp * (s - (s - 1.0) * r) / (u * u);
        case 2:
            return rp
                   * (s * s - (2.0 * s * s - 2.0 * s - 1.0) * r
                      + (s - 1.0) * (s - 1.0) * r * r)
                   / (u * u * u);
        case 3: {
            const double c1 = 3.0 * s * s * s - 3.0 * s * s - 3.0 * s - 1.0;
            const double c2 = 3.0 * s * s * s - 6.0 * s * s + 4.0;
            const double c3 = (s - 1.0) * (s - 1.0) * (s - 1.0);
            return rp * (s * s * s - c1 * r + c2 * r * r - c3 * r * r * r)
                   / (u * u * u * u);
        }
    }
    return 0.0;
}

double sum_geometric(double r, int start) {
    require_unit_range(r);
    if (start < 1) throw DomainError("start must be >= 1");
    return std::pow(r, start - 1) / (1.0 - r);
}

double sum_log_tail(double r, int start) {
    require_unit_range(r);
    if (start < 1) throw DomainError("start must be >= 1");
    if (r < 0.1) {
        // sum_{n>=start} r^(n-1)/n term by term; geometric decay makes this
        // exact to double precision in a few dozen terms.
        double sum = 0.0;
        double rp = std::pow(r, start - 1);
        for (int n = start; n < start + 80; ++n) {
            const double term = rp / n;
            sum += term;
            if (term < 1e-22 * (sum + 1e-300)) break;
            rp *= r;
        }
        return sum;
    }
    double full = -std::log1p(-r) / r;  // sum_{n>=1} r^(n-1)/n
    double rp = 1.0;
    for (int n = 1; n < start; ++n) {
        full -= rp / n;
        rp *= r;
    }
    return full;
}

double g_starlike_bound_n(double r, double alpha, double b) {
    require_unit_range(r);
    require_params(alpha, b);
    const double u = 1.0 - r;
    return 2.0 * (1.0 - alpha + (2.0 - alpha) * (1.0 - b) * r) * u * u * u
           - (1.0 - alpha) - (1.0 + alpha) * r;
}

double g_starlike_bound_m(double r, double alpha, double b, double m) {
    require_unit_range(r);
    require_params(alpha, b);
    require_m(m);
    const double u = 1.0 - r;
    return ((1.0 + m) * (1.0 - alpha) - (2.0 - alpha) * (2.0 * b - m) * r) * u * u
           - m * (1.0 - alpha + alpha * r);
}

double g_starlike_bound_m_over_n(double r, double alpha, double b, double m) {
    require_unit_range(r);
    require_params(alpha, b);
    require_m(m);
    const double u = 1.0 - r;
    return (2.0 * (1.0 + m) * (1.0 - alpha) + (2.0 - alpha) * (m - 4.0 * b) * r) * u
           - 2.0 * m * (1.0 + alpha * log_factor(r));
}

double g_convex_bound_n(double r, double alpha, double b) {
    require_unit_range(r);
    require_params(alpha, b);
    const double u = 1.0 - r;
    return 2.0 * (1.0 - alpha + 2.0 * (2.0 - alpha) * (1.0 - b) * r) * u * u * u * u
           - (1.0 - alpha) - 4.0 * r - (1.0 + alpha) * r * r;
}

double g_convex_bound_m(double r, double alpha, double b, double m) {
    require_unit_range(r);
    require_params(alpha, b);
    require_m(m);
    const double u = 1.0 - r;
    return ((1.0 - alpha) * (1.0 + m) - 2.0 * (2.0 - alpha) * (2.0 * b - m) * r) * u * u * u
           - m * (1.0 - alpha + (1.0 + alpha) * r);
}

double caratheodory_radius(double alpha, double b, double m) {
    require_params(alpha, b);
    require_m(m);
    const double oma = 1.0 - alpha;
    const double disc = (oma + 2.0 * b) * (oma + 2.0 * b) + 8.0 * oma * (m - b);
    if (disc < 0.0) throw DomainError("negative discriminant");
    return 2.0 * oma / (oma + 2.0 * b + std::sqrt(disc));
}

double caratheodory_margin(double alpha, double b, double m, double r) {
    require_unit_range(r);
    require_params(alpha, b);
    require_m(m);
    return (1.0 - alpha) - (2.0 * b * r + 2.0 * m * r * r / (1.0 - r));
}

double sufficiency_margin_starlike(const ClassSpec& cls, double alpha, double r) {
    require_unit_range(r);
    require_params(alpha, cls.b);
    double tail = 0.0;
    switch (cls.family) {
        case BoundFamily::BoundByN:
            tail = sum_n_pow(2, r, 3) - alpha * sum_n_pow(1, r, 3);
            break;
        case BoundFamily::BoundByM:
            require_m(cls.m.value_or(0.0));
            tail = *cls.m * (sum_n_pow(1, r, 3) - alpha * sum_geometric(r, 3));
            break;
        case BoundFamily::BoundByMOverN:
            require_m(cls.m.value_or(0.0));
            tail = *cls.m * (sum_geometric(r, 3) - alpha * sum_log_tail(r, 3));
            break;
        case BoundFamily::Caratheodory:
            throw UnsupportedClass("starlike margin is undefined for the Caratheodory family");
    }
    return (1.0 - alpha) - (2.0 * (2.0 - alpha) * cls.b * r + tail);
}

double sufficiency_margin_convex(const ClassSpec& cls, double alpha, double r) {
    require_unit_range(r);
    require_params(alpha, cls.b);
    double tail = 0.0;
    switch (cls.family) {
        case BoundFamily::BoundByN:
            tail = sum_n_pow(3, r, 3) - alpha * sum_n_pow(2, r, 3);
            break;
        case BoundFamily::BoundByM:
            require_m(cls.m.value_or(0.0));
            tail = *cls.m * (sum_n_pow(2, r, 3) - alpha * sum_n_pow(1, r, 3));
            break;
        case BoundFamily::BoundByMOverN:
            throw UnsupportedClass("convex M/n margin is handled by reduction to the M-bounded starlike problem");
        case BoundFamily::Caratheodory:
            throw UnsupportedClass("convex margin is undefined for the Caratheodory family");
    }
    return (1.0 - alpha) - (4.0 * (2.0 - alpha) * cls.b * r + tail);
}

}  // namespace radii::equations
