#include "radii/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "radii/equations.hpp"
#include "radii/solver.hpp"

namespace radii::verification {

using extremal::Complex;
using extremal::ExtremalFunction;
using extremal::Form;

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::string format_value(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string query_label(const RadiusQuery& q) {
    std::ostringstream os;
    os << family_name(q.cls.family) << '/' << kind_name(q.kind.tag);
    if (q.kind.tag == KindTag::StarlikeOrder || q.kind.tag == KindTag::ConvexOrder ||
        q.kind.tag == KindTag::PositiveRealPartOrder) {
        os << "/alpha=" << q.kind.alpha;
    }
    os << "/b=" << q.cls.b;
    if (q.cls.m) os << "/m=" << *q.cls.m;
    return os.str();
}

VerificationReport failed_report(std::string name, const std::exception& e) {
    return {std::move(name), false, 0.0, 0.0, 0.0, e.what()};
}

// Truncated worst-case coefficient-sum margin with a rigorous bound on the
// dropped tail. The sufficiency conditions are linear in |a_n|, so the
// extremal moduli (every bound saturated) give the binding margin.
struct MarginSeries {
    BoundFamily family;
    bool convex = false;
    double alpha = 0.0;
    double b = 0.0;
    double m = 0.0;
    int n_terms = 0;

    double partial(double r) const {
        if (family == BoundFamily::Caratheodory) {
            double sum = 2.0 * b * r;
            double rp = r * r;
            for (int n = 2; n <= n_terms; ++n) {
                sum += 2.0 * m * rp;
                rp *= r;
            }
            return (1.0 - alpha) - sum;
        }
        double sum = (convex ? 4.0 : 2.0) * (2.0 - alpha) * b * r;
        double rp = r * r;  // r^(n-1) at n = 3
        for (int n = 3; n <= n_terms; ++n) {
            double bound = 0.0;
            switch (family) {
                case BoundFamily::BoundByN: bound = n; break;
                case BoundFamily::BoundByM: bound = m; break;
                case BoundFamily::BoundByMOverN: bound = m / n; break;
                default: break;
            }
            const double weight = convex ? n * (n - alpha) : (n - alpha);
            sum += weight * bound * rp;
            rp *= r;
        }
        return (1.0 - alpha) - sum;
    }

    double tail(double r) const {
        const int k = n_terms + 1;
        if (family == BoundFamily::Caratheodory) {
            return 2.0 * m * std::pow(r, k) / (1.0 - r);
        }
        switch (family) {
            case BoundFamily::BoundByN:
                return equations::sum_n_pow(convex ? 3 : 2, r, k);
            case BoundFamily::BoundByM:
                return m * equations::sum_n_pow(convex ? 2 : 1, r, k);
            case BoundFamily::BoundByMOverN:
                return convex ? m * equations::sum_n_pow(1, r, k)
                              : m * equations::sum_geometric(r, k);
            default:
                return 0.0;
        }
    }
};

// Bisection for a strictly decreasing margin; returns the bracket endpoint
// on the requested side so the answer stays a rigorous bound.
template <typename F>
double bisect_decreasing(const F& h, bool keep_upper) {
    double lo = 1e-9, hi = 1.0 - 1e-9;
    if (!(h(lo) > 0.0)) return lo;
    if (!(h(hi) < 0.0)) throw NoRoot("margin has no sign change on (0,1)");
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (h(mid) > 0.0 ? lo : hi) = mid;
    }
    return keep_upper ? hi : lo;
}

}  // namespace

CircleScan scan_circle(const ExtremalFunction& ef, double r, int samples) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("scan radius must lie in (0,1)");
    if (!is_power_of_two(samples) || samples < 64) {
        throw DomainError("samples must be a power of two, at least 64");
    }

    CircleScan scan;
    scan.radius = r;
    scan.samples = samples;
    scan.min_re_star = std::numeric_limits<double>::infinity();
    scan.min_parabolic_margin = scan.min_re_star;
    scan.min_re_convex = scan.min_re_star;
    scan.min_ucv_margin = scan.min_re_star;

    const double step = 2.0 * std::numbers::pi / samples;
    for (int k = 0; k < samples; ++k) {
        const double theta = k * step;
        const Complex z = std::polar(r, theta);
        Complex w, v;
        if (ef.form() == Form::CaratheodoryP0) {
            w = v = ef.eval(z);
        } else {
            w = ef.star_quotient(z);
            v = ef.convex_quotient(z);
        }
        const double re_w = w.real();
        if (re_w < scan.min_re_star) {
            scan.min_re_star = re_w;
            scan.argmin_angle = theta;
        }
        scan.min_parabolic_margin = std::min(scan.min_parabolic_margin, re_w - std::abs(w - 1.0));
        scan.min_re_convex = std::min(scan.min_re_convex, v.real());
        scan.min_ucv_margin = std::min(scan.min_ucv_margin, v.real() - std::abs(v - 1.0));
    }
    return scan;
}

VerificationReport check_sharpness(const ClassSpec& cls, const RadiusKind& kind) {
    RadiusQuery query{cls, kind};
    const std::string name = "sharpness/" + query_label(query);
    const double tol = 1e-8;

    const RadiusResult result = solver::solve_radius(query);
    const double alpha = kind.effective_alpha();
    const double expected = 1.0 - alpha;
    const ExtremalFunction ef(cls);
    const Complex z{result.radius, 0.0};

    double measured = 0.0;
    double re_deviation = 0.0;
    if (kind.tag == KindTag::PositiveRealPartOrder) {
        measured = std::abs(ef.eval(z) - 1.0);
    } else {
        const Complex q = kind.is_starlike_type() ? ef.star_quotient(z) : ef.convex_quotient(z);
        measured = std::abs(q - 1.0);
        re_deviation = std::abs(q.real() - alpha);
    }
    const bool passed = std::abs(measured - expected) <= tol && re_deviation <= tol;

    std::ostringstream detail;
    detail << "r0=" << format_value(result.radius) << " |q-1|=" << format_value(measured)
           << " re-deviation=" << format_value(re_deviation);
    return {name, passed, measured, expected, tol, detail.str()};
}

OracleInterval oracle_root(const ClassSpec& cls, const RadiusKind& kind, int n_terms) {
    if (n_terms < 1000) throw DomainError("oracle needs n_terms >= 1000");
    RadiusQuery query{cls, kind};
    validate(query);

    MarginSeries series{cls.family, kind.is_convex_type(), kind.effective_alpha(),
                        cls.b, cls.m.value_or(0.0), n_terms};
    OracleInterval interval;
    interval.hi = bisect_decreasing([&](double r) { return series.partial(r); }, true);
    interval.lo =
        bisect_decreasing([&](double r) { return series.partial(r) - series.tail(r); }, false);
    if (interval.lo > interval.hi) std::swap(interval.lo, interval.hi);
    return interval;
}

ParameterGrid default_grid() {
    return {{0.0, 0.25, 0.5, 0.75}, {0.0, 0.5, 1.0}, {0.5, 1.0, 2.0}};
}

std::vector<RadiusQuery> grid_queries(const ParameterGrid& grid) {
    std::vector<RadiusQuery> queries;

    auto add_analytic_kinds = [&](const ClassSpec& cls) {
        const bool reduction = cls.family == BoundFamily::BoundByMOverN;
        const bool convex_ok = !reduction || 2.0 * cls.b <= 1.0;
        for (double alpha : grid.alphas) {
            queries.push_back({cls, RadiusKind::starlike(alpha)});
            if (convex_ok) queries.push_back({cls, RadiusKind::convex(alpha)});
        }
        queries.push_back({cls, RadiusKind::parabolic_starlike()});
        if (convex_ok) queries.push_back({cls, RadiusKind::uniformly_convex()});
    };

    for (double b : grid.bs) {
        add_analytic_kinds(ClassSpec::bound_by_n(b));
        for (double m : grid.ms) {
            add_analytic_kinds(ClassSpec::bound_by_m(b, m));
            add_analytic_kinds(ClassSpec::bound_by_m_over_n(b, m));
            for (double alpha : grid.alphas) {
                queries.push_back({ClassSpec::caratheodory(b, m),
                                   RadiusKind::positive_real_part(alpha)});
            }
        }
    }
    return queries;
}

namespace {

// Channel of the scan that the kind under test constrains.
double kind_channel(const CircleScan& scan, const RadiusKind& kind) {
    if (kind.is_convex_type()) return scan.min_re_convex;
    return scan.min_re_star;  // starlike kinds and the p0 channel
}

void scan_triple_reports(const RadiusQuery& query, std::vector<VerificationReport>& out) {
    const std::string label = query_label(query);
    const double alpha = query.kind.effective_alpha();
    const RadiusResult result = solver::solve_radius(query);
    const ExtremalFunction ef(query.cls);
    const int samples = 4096;

    {
        const CircleScan scan = scan_circle(ef, 0.9 * result.radius, samples);
        const double min_re = kind_channel(scan, query.kind);
        double shortfall = std::max(0.0, (alpha - 1e-9) - min_re);
        std::ostringstream detail;
        detail << "min_re=" << format_value(min_re);
        if (query.kind.tag == KindTag::ParabolicStarlike) {
            shortfall = std::max(shortfall, -std::min(0.0, scan.min_parabolic_margin));
            detail << " parabolic_margin=" << format_value(scan.min_parabolic_margin);
        }
        if (query.kind.tag == KindTag::UniformlyConvex) {
            shortfall = std::max(shortfall, -std::min(0.0, scan.min_ucv_margin));
            detail << " ucv_margin=" << format_value(scan.min_ucv_margin);
        }
        out.push_back({"scan-inside/" + label, shortfall == 0.0, shortfall, 0.0, 0.0, detail.str()});
    }
    {
        const CircleScan scan = scan_circle(ef, result.radius, samples);
        const double min_re = kind_channel(scan, query.kind);
        const double spacing = 2.0 * std::numbers::pi / samples;
        const bool passed = std::abs(min_re - alpha) <= 1e-6 && scan.argmin_angle < spacing;
        std::ostringstream detail;
        detail << "min_re=" << format_value(min_re) << " argmin_angle="
               << format_value(scan.argmin_angle);
        out.push_back({"scan-at-radius/" + label, passed, min_re, alpha, 1e-6, detail.str()});
    }
    {
        const double beyond = std::min(1.05 * result.radius, 0.5 * (result.radius + 1.0));
        const CircleScan scan = scan_circle(ef, beyond, samples);
        const double min_re = kind_channel(scan, query.kind);
        const double excess = std::max(0.0, min_re - alpha);
        std::ostringstream detail;
        detail << "r=" << format_value(beyond) << " min_re=" << format_value(min_re);
        out.push_back({"scan-beyond/" + label, excess == 0.0 && min_re < alpha, excess, 0.0, 0.0,
                       detail.str()});
    }
}

// Worst difference of consecutive radii along one swept parameter.
struct SweepOutcome {
    double worst_diff = -std::numeric_limits<double>::infinity();
    int points = 0;
};

template <typename MakeQuery>
SweepOutcome sweep_radii(const std::vector<double>& values, const MakeQuery& make) {
    SweepOutcome outcome;
    double prev = 0.0;
    for (double v : values) {
        const auto query = make(v);
        if (!query) continue;
        const double r = solver::solve_radius(*query).radius;
        if (outcome.points > 0) {
            outcome.worst_diff = std::max(outcome.worst_diff, r - prev);
        }
        prev = r;
        ++outcome.points;
    }
    return outcome;
}

}  // namespace

std::vector<VerificationReport> constants_suite() {
    struct Entry {
        const char* name;
        RadiusQuery query;
        double expected;
    };
    const ClassSpec n1 = ClassSpec::bound_by_n(1.0);
    const ClassSpec n0 = ClassSpec::bound_by_n(0.0);
    const Entry entries[] = {
        {"starlike-full-second-coeff", {n1, RadiusKind::starlike(0.0)}, 0.164878},
        {"parabolic-full-second-coeff", {n1, RadiusKind::parabolic_starlike()}, 0.120385},
        {"starlike-zero-second-coeff", {n0, RadiusKind::starlike(0.0)}, 0.253571},
        {"parabolic-zero-second-coeff", {n0, RadiusKind::parabolic_starlike()}, 0.206299},
        {"convex-full-second-coeff", {n1, RadiusKind::convex(0.0)}, 0.0903331},
        {"ucv-full-second-coeff", {n1, RadiusKind::uniformly_convex()}, 0.064723},
        {"convex-zero-second-coeff", {n0, RadiusKind::convex(0.0)}, 0.155972},
        {"ucv-zero-second-coeff", {n0, RadiusKind::uniformly_convex()}, 0.125429},
        {"univalence-bound-m-one",
         {ClassSpec::bound_by_m(0.5, 1.0), RadiusKind::starlike(0.0)},
         0.292893},
    };

    std::vector<VerificationReport> reports;
    for (const Entry& entry : entries) {
        const std::string name = std::string("constants/") + entry.name;
        try {
            const double radius = solver::solve_radius(entry.query).radius;
            const bool passed = std::abs(radius - entry.expected) <= 1e-5;
            reports.push_back({name, passed, radius, entry.expected, 1e-5,
                               "radius=" + format_value(radius)});
        } catch (const std::exception& e) {
            reports.push_back(failed_report(name, e));
        }
    }
    return reports;
}

std::vector<VerificationReport> sharpness_suite(const ParameterGrid& grid) {
    std::vector<VerificationReport> reports;
    for (const RadiusQuery& query : grid_queries(grid)) {
        try {
            validate(query);
            reports.push_back(check_sharpness(query.cls, query.kind));
            scan_triple_reports(query, reports);
        } catch (const std::exception& e) {
            reports.push_back(failed_report("sharpness/" + query_label(query), e));
        }
    }
    return reports;
}

std::vector<VerificationReport> oracle_suite(const ParameterGrid& grid, int n_terms) {
    std::vector<VerificationReport> reports;
    for (const RadiusQuery& query : grid_queries(grid)) {
        const std::string name = "oracle/" + query_label(query);
        try {
            validate(query);
            const double radius = solver::solve_radius(query).radius;
            const OracleInterval interval = oracle_root(query.cls, query.kind, n_terms);
            const double tol = 1e-9 + interval.width();
            const double measured = std::abs(radius - interval.value());
            std::ostringstream detail;
            detail << "solver=" << format_value(radius) << " oracle=["
                   << format_value(interval.lo) << ',' << format_value(interval.hi) << ']';
            reports.push_back({name, measured <= tol, measured, 0.0, tol, detail.str()});
        } catch (const std::exception& e) {
            reports.push_back(failed_report(name, e));
        }
    }
    return reports;
}

std::vector<VerificationReport> monotonicity_suite(const ParameterGrid& grid) {
    std::vector<VerificationReport> reports;

    struct FamilyInstance {
        BoundFamily family;
        std::optional<double> m;
    };
    std::vector<FamilyInstance> instances{{BoundFamily::BoundByN, {}}};
    for (double m : grid.ms) {
        instances.push_back({BoundFamily::BoundByM, m});
        instances.push_back({BoundFamily::BoundByMOverN, m});
        instances.push_back({BoundFamily::Caratheodory, m});
    }

    auto make_query = [](const FamilyInstance& inst, double alpha, double b,
                         bool convex) -> std::optional<RadiusQuery> {
        ClassSpec cls{inst.family, b, inst.m};
        if (inst.family == BoundFamily::Caratheodory) {
            if (convex) return std::nullopt;
            return RadiusQuery{cls, RadiusKind::positive_real_part(alpha)};
        }
        if (convex && inst.family == BoundFamily::BoundByMOverN && 2.0 * b > 1.0) {
            return std::nullopt;
        }
        return RadiusQuery{cls,
                           convex ? RadiusKind::convex(alpha) : RadiusKind::starlike(alpha)};
    };

    for (const FamilyInstance& inst : instances) {
        for (bool convex : {false, true}) {
            if (convex && inst.family == BoundFamily::Caratheodory) continue;
            const char* kind_tag = inst.family == BoundFamily::Caratheodory ? "positive-real"
                                   : convex                                 ? "convex"
                                                                            : "starlike";
            for (double b : grid.bs) {
                std::ostringstream name;
                name << "monotonicity-alpha/" << family_name(inst.family) << '/' << kind_tag
                     << "/b=" << b;
                if (inst.m) name << "/m=" << *inst.m;
                try {
                    const SweepOutcome outcome = sweep_radii(
                        grid.alphas, [&](double alpha) { return make_query(inst, alpha, b, convex); });
                    if (outcome.points < 2) continue;
                    const double measured = std::max(0.0, outcome.worst_diff + 1e-12);
                    reports.push_back({name.str(), outcome.worst_diff < -1e-12, measured, 0.0, 0.0,
                                       "worst consecutive diff " + format_value(outcome.worst_diff)});
                } catch (const std::exception& e) {
                    reports.push_back(failed_report(name.str(), e));
                }
            }
            for (double alpha : grid.alphas) {
                std::ostringstream name;
                name << "monotonicity-b/" << family_name(inst.family) << '/' << kind_tag
                     << "/alpha=" << alpha;
                if (inst.m) name << "/m=" << *inst.m;
                try {
                    const SweepOutcome outcome = sweep_radii(
                        grid.bs, [&](double b) { return make_query(inst, alpha, b, convex); });
                    if (outcome.points < 2) continue;
                    const double measured = std::max(0.0, outcome.worst_diff - 1e-12);
                    reports.push_back({name.str(), outcome.worst_diff <= 1e-12, measured, 0.0, 0.0,
                                       "worst consecutive diff " + format_value(outcome.worst_diff)});
                } catch (const std::exception& e) {
                    reports.push_back(failed_report(name.str(), e));
                }
            }
        }
    }

    // Zero second coefficient improves the M-bounded starlike radius over
    // the saturated one (2b = M), for every M that admits b = M/2.
    for (double m : grid.ms) {
        if (m / 2.0 > 1.0) continue;
        std::ostringstream name;
        name << "monotonicity-zero-a2-improves/m=" << m;
        try {
            const double r0 =
                solver::solve_radius({ClassSpec::bound_by_m(m / 2.0, m), RadiusKind::starlike(0.0)})
                    .radius;
            const double r1 =
                solver::solve_radius({ClassSpec::bound_by_m(0.0, m), RadiusKind::starlike(0.0)})
                    .radius;
            const double measured = std::max(0.0, r0 - r1);
            reports.push_back({name.str(), r1 > r0, measured, 0.0, 0.0,
                               "r0=" + format_value(r0) + " r1=" + format_value(r1)});
        } catch (const std::exception& e) {
            reports.push_back(failed_report(name.str(), e));
        }
    }
    return reports;
}

std::vector<VerificationReport> run_suite(const ParameterGrid& grid) {
    std::vector<VerificationReport> reports = sharpness_suite(grid);
    for (auto& report : oracle_suite(grid)) reports.push_back(std::move(report));
    for (auto& report : monotonicity_suite(grid)) reports.push_back(std::move(report));
    return reports;
}

}  // namespace radii::verification
