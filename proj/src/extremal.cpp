#include "radii/extremal.hpp"

#include <cmath>
#include <limits>

#include "radii/equations.hpp"

namespace radii::extremal {

namespace {

constexpr double kPoleThreshold = 1e-300;
constexpr double kTruncationEdge = 1e-6;

Form form_of(const ClassSpec& cls) {
    switch (cls.family) {
        case BoundFamily::BoundByN: return Form::StarBoundN;
        case BoundFamily::BoundByM: return Form::BoundM;
        case BoundFamily::BoundByMOverN: return Form::BoundMOverN;
        case BoundFamily::Caratheodory: return Form::CaratheodoryP0;
    }
    throw DomainError("unknown family");
}

}  // namespace

ExtremalFunction::ExtremalFunction(const ClassSpec& cls) : cls_(cls), form_(form_of(cls)) {
    if (!(cls.b >= 0.0 && cls.b <= 1.0)) throw DomainError("b out of [0,1]");
    if (cls.family != BoundFamily::BoundByN) {
        if (!cls.m.has_value() || !(*cls.m > 0.0)) {
            throw DomainError("M required and positive for this family");
        }
    }
}

void ExtremalFunction::require_in_disk(Complex z) const {
    if (!(std::norm(z) < 1.0)) throw DomainError("|z| must be < 1");
}

double ExtremalFunction::coefficient(int n) const {
    if (n < 0) throw DomainError("coefficient index must be >= 0");
    const double b = cls_.b;
    if (form_ == Form::CaratheodoryP0) {
        if (n == 0) return 1.0;
        if (n == 1) return -2.0 * b;
        return -2.0 * *cls_.m;
    }
    if (n == 0) return 0.0;
    if (n == 1) return 1.0;
    if (n == 2) return -2.0 * b;
    switch (form_) {
        case Form::StarBoundN: return -static_cast<double>(n);
        case Form::BoundM: return -*cls_.m;
        case Form::BoundMOverN: return -*cls_.m / n;
        default: break;
    }
    return 0.0;
}

Complex ExtremalFunction::eval(Complex z) const {
    require_in_disk(z);
    const double b = cls_.b;
    const Complex u = 1.0 - z;
    switch (form_) {
        case Form::StarBoundN:
            return 2.0 * z + 2.0 * (1.0 - b) * z * z - z / (u * u);
        case Form::BoundM:
            return z - 2.0 * b * z * z - *cls_.m * z * z * z / u;
        case Form::BoundMOverN:
            return (1.0 + *cls_.m) * z + (*cls_.m / 2.0 - 2.0 * b) * z * z
                   + *cls_.m * std::log(u);
        case Form::CaratheodoryP0:
            return 1.0 - 2.0 * b * z - 2.0 * *cls_.m * z * z / u;
    }
    return {};
}

Complex ExtremalFunction::eval_d1(Complex z) const {
    require_in_disk(z);
    const double b = cls_.b;
    const Complex u = 1.0 - z;
    switch (form_) {
        case Form::StarBoundN:
            return 2.0 + 4.0 * (1.0 - b) * z - (1.0 + z) / (u * u * u);
        case Form::BoundM:
            return 1.0 - 4.0 * b * z - *cls_.m * (3.0 * z * z - 2.0 * z * z * z) / (u * u);
        case Form::BoundMOverN:
            return (1.0 + *cls_.m) + (*cls_.m - 4.0 * b) * z - *cls_.m / u;
        case Form::CaratheodoryP0:
            return -2.0 * b - 2.0 * *cls_.m * (2.0 * z - z * z) / (u * u);
    }
    return {};
}

Complex ExtremalFunction::eval_d2(Complex z) const {
    require_in_disk(z);
    const double b = cls_.b;
    const Complex u = 1.0 - z;
    switch (form_) {
        case Form::StarBoundN:
            return 4.0 * (1.0 - b) - (4.0 + 2.0 * z) / (u * u * u * u);
        case Form::BoundM:
            return -4.0 * b
                   - *cls_.m * (6.0 * z - 6.0 * z * z + 2.0 * z * z * z) / (u * u * u);
        case Form::BoundMOverN:
            return (*cls_.m - 4.0 * b) - *cls_.m / (u * u);
        case Form::CaratheodoryP0:
            return -4.0 * *cls_.m / (u * u * u);
    }
    return {};
}

Complex ExtremalFunction::star_quotient(Complex z) const {
    if (form_ == Form::CaratheodoryP0) {
        throw UnsupportedClass("zf'/f is not the membership quantity for the p0 form");
    }
    require_in_disk(z);
    if (z == Complex{}) return 1.0;
    const Complex denom = eval(z);
    if (std::abs(denom) < kPoleThreshold) {
        throw PoleError("f vanishes at the evaluation point");
    }
    return z * eval_d1(z) / denom;
}

Complex ExtremalFunction::convex_quotient(Complex z) const {
    if (form_ == Form::CaratheodoryP0) {
        throw UnsupportedClass("1+zf''/f' is not the membership quantity for the p0 form");
    }
    require_in_disk(z);
    if (z == Complex{}) return 1.0;
    const Complex denom = eval_d1(z);
    if (std::abs(denom) < kPoleThreshold) {
        throw PoleError("f' vanishes at the evaluation point");
    }
    return 1.0 + z * eval_d2(z) / denom;
}

ExtremalFunction::Truncated ExtremalFunction::eval_truncated(Complex z, int n_terms) const {
    if (!(std::abs(z) <= 1.0 - kTruncationEdge)) {
        throw DomainError("|z| must be <= 1 - 1e-6 for the truncated series");
    }
    if (n_terms < 2) throw DomainError("n_terms must be >= 2");

    const double x = std::abs(z);
    Complex sum{};
    double majorant = 0.0;
    Complex zp = 1.0;  // z^n
    for (int n = 0; n <= n_terms; ++n) {
        const Complex term = coefficient(n) * zp;
        sum += term;
        majorant += std::abs(term);
        zp *= z;
    }

    const int k = n_terms + 1;  // first dropped power
    const double m = cls_.m.value_or(0.0);
    double tail = 0.0;
    switch (form_) {
        case Form::StarBoundN: tail = x * equations::sum_n_pow(1, x, k); break;
        case Form::BoundM: tail = m * std::pow(x, k) / (1.0 - x); break;
        case Form::BoundMOverN: tail = m / k * std::pow(x, k) / (1.0 - x); break;
        case Form::CaratheodoryP0: tail = 2.0 * m * std::pow(x, k) / (1.0 - x); break;
    }
    // Fold in the first-order rounding of the recursive summation so the
    // bound stays honest when the analytic tail underflows.
    const double eps = std::numeric_limits<double>::epsilon();
    tail += eps * (n_terms + 4.0) * (majorant + 1.0);
    return {sum, tail};
}

ExtremalFunction::Truncated ExtremalFunction::eval_d1_truncated(Complex z, int n_terms) const {
    if (!(std::abs(z) <= 1.0 - kTruncationEdge)) {
        throw DomainError("|z| must be <= 1 - 1e-6 for the truncated series");
    }
    if (n_terms < 2) throw DomainError("n_terms must be >= 2");

    const double x = std::abs(z);
    Complex sum{};
    double majorant = 0.0;
    Complex zp = 1.0;  // z^(n-1)
    for (int n = 1; n <= n_terms; ++n) {
        const Complex term = static_cast<double>(n) * coefficient(n) * zp;
        sum += term;
        majorant += std::abs(term);
        zp *= z;
    }

    const int k = n_terms + 1;
    const double m = cls_.m.value_or(0.0);
    double tail = 0.0;
    switch (form_) {
        case Form::StarBoundN: tail = equations::sum_n_pow(2, x, k); break;
        case Form::BoundM: tail = m * equations::sum_n_pow(1, x, k); break;
        case Form::BoundMOverN: tail = m * std::pow(x, k - 1) / (1.0 - x); break;
        case Form::CaratheodoryP0: tail = 2.0 * m * equations::sum_n_pow(1, x, k); break;
    }
    const double eps = std::numeric_limits<double>::epsilon();
    tail += eps * (n_terms + 4.0) * (majorant + 1.0);
    return {sum, tail};
}

}  // namespace radii::extremal
