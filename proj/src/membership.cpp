#include "schlicht/membership.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "schlicht/parallel.hpp"

namespace schlicht {

SamplingPlan SamplingPlan::dyadic(std::size_t radii_count, std::size_t angles, double tolerance)
{
    SamplingPlan plan;
    for (std::size_t j = 1; j <= radii_count; ++j)
        plan.radii.push_back(1.0 - std::ldexp(1.0, -static_cast<int>(j)));
    plan.angles_per_circle = angles;
    plan.tolerance = tolerance;
    plan.validate();
    return plan;
}

void SamplingPlan::validate() const
{
    if (radii.empty())
        throw DomainError("SamplingPlan: no radii");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0 && radii[i] < 1.0))
            throw DomainError("SamplingPlan: radii must lie in (0,1)");
        if (i > 0 && !(radii[i] > radii[i - 1]))
            throw DomainError("SamplingPlan: radii must be strictly increasing");
    }
    if (angles_per_circle < 64)
        throw DomainError("SamplingPlan: need at least 64 angles per circle");
    if (!(tolerance >= 0.0))
        throw DomainError("SamplingPlan: tolerance must be nonnegative");
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::IN: return "IN";
    case Verdict::OUT: return "OUT";
    case Verdict::UNDECIDED: return "UNDECIDED";
    }
    return "?";
}

std::string_view to_string(JuliaLimit j)
{
    switch (j) {
    case JuliaLimit::FINITE: return "FINITE";
    case JuliaLimit::DIVERGENT: return "DIVERGENT";
    case JuliaLimit::UNDECIDED: return "UNDECIDED";
    }
    return "?";
}

cplx u_functional(const AnalyticMap &f, cplx z)
{
    if (z == cplx{})
        return {};
    const InverseValue iv = f.inverse(z);
    if (std::abs(iv.q) < pole_threshold)
        throw SingularPoint(f.name + ": U_f evaluated at a pole of f", z);
    return iv.q - z * iv.dq - 1.0;
}

TruncatedSeries u_series(const AnalyticMap &f)
{
    const TruncatedSeries &q = f.inverse_series;
    const TruncatedSeries one = TruncatedSeries::constant(1.0, q.order());
    return q - shift_up(differentiate(q)) - one;
}

MembershipReport sup_abs_u(const AnalyticMap &f, const SamplingPlan &plan)
{
    plan.validate();
    MembershipReport rep;
    const std::size_t circles = plan.radii.size();
    std::vector<CircleSup> per(circles);
    std::vector<std::vector<cplx>> skipped(circles);
    parallel_for(circles, [&](std::size_t i) {
        CircleSup cs{plan.radii[i], 0.0, plan.point(i, 0)};
        for (std::size_t k = 0; k < plan.angles_per_circle; ++k) {
            const cplx z = plan.point(i, k);
            double m;
            try {
                m = std::abs(u_functional(f, z));
            } catch (const SingularPoint &) {
                skipped[i].push_back(z);
                continue;
            }
            if (m > cs.sup) {
                cs.sup = m;
                cs.arg_max = z;
            }
        }
        per[i] = cs;
    });
    rep.per_circle_sup = std::move(per);
    for (const auto &cs : rep.per_circle_sup) {
        if (cs.sup > rep.sup_estimate) {
            rep.sup_estimate = cs.sup;
            rep.arg_max = cs.arg_max;
        }
    }
    for (auto &s : skipped)
        rep.skipped_points.insert(rep.skipped_points.end(), s.begin(), s.end());
    return rep;
}

namespace {

std::size_t vanishing_order(const TruncatedSeries &s)
{
    const double scale = std::max(1.0, s.max_abs());
    for (std::size_t n = 0; n <= s.order(); ++n)
        if (std::abs(s[n]) > 1e-12 * scale)
            return n;
    return s.order() + 1;
}

// Estimate of sum_{n>N} |c_n| r^n from the geometric ratio of the last two
// coefficients.
double series_tail(const TruncatedSeries &s, double r)
{
    const std::size_t N = s.order();
    const double scale = std::max(1.0, s.max_abs());
    const double last = std::abs(s[N]);
    if (last <= 1e-15 * scale)
        return 0.0;
    const double prev = std::abs(s[N - 1]);
    if (prev == 0.0)
        return std::numeric_limits<double>::infinity();
    const double x = last / prev * r;
    if (x >= 1.0)
        return std::numeric_limits<double>::infinity();
    return last * std::pow(r, static_cast<double>(N)) * x / (1.0 - x);
}

} // namespace

MembershipReport membership_verdict(const AnalyticMap &f, double level, const SamplingPlan &plan)
{
    if (!(level > 0.0 && level <= 1.0))
        throw DomainError("membership_verdict: lambda must lie in (0,1]");
    MembershipReport rep = sup_abs_u(f, plan);
    rep.level = level;
    const TruncatedSeries us = u_series(f);
    rep.vanishing_order = vanishing_order(us);
    rep.tail_estimate = series_tail(us, plan.r_max());

    if (rep.sup_estimate >= level) {
        rep.verdict = Verdict::OUT;
        rep.witness = rep.arg_max;
        rep.margin = level - rep.sup_estimate;
        return rep;
    }
    rep.margin = level - rep.sup_estimate - rep.tail_estimate;

    if (!rep.skipped_points.empty()) {
        rep.notes.push_back("grid points at poles of f were skipped");
        return rep;
    }
    const double p = static_cast<double>(rep.vanishing_order);
    bool schwarz_ok = true;
    for (const auto &cs : rep.per_circle_sup) {
        if (cs.sup > level * std::pow(cs.r, p) + plan.tolerance) {
            schwarz_ok = false;
            rep.notes.push_back("circle r=" + std::to_string(cs.r) +
                                " exceeds lambda r^p growth bound");
            break;
        }
    }
    const bool below = rep.sup_estimate <= level - plan.tolerance;
    const bool tail_ok = rep.sup_estimate + rep.tail_estimate < level;
    if (!tail_ok)
        rep.notes.push_back("series tail estimate does not keep the supremum below lambda");
    if (below && schwarz_ok && tail_ok)
        rep.verdict = Verdict::IN;
    return rep;
}

double l_phi(const SchwarzCandidate &phi, double lambda, cplx z)
{
    const cplx p = phi.value(z);
    const cplx dp = phi.derivative(z);
    return std::abs(-(1.0 + lambda) * (p - z * dp) + lambda * p * (p - 2.0 * z * dp));
}

JuliaReport julia_quotient(const std::function<double(cplx)> &defect, cplx zeta,
                           std::span<const double> radii, const JuliaOptions &options)
{
    if (std::abs(std::abs(zeta) - 1.0) > 1e-12)
        throw DomainError("julia_quotient: zeta must be unimodular");
    JuliaReport rep;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double r = radii[i];
        if (!(r > 0.0 && r < 1.0) || (i > 0 && !(r > radii[i - 1])))
            throw DomainError("julia_quotient: radii must increase within (0,1)");
        rep.estimates.push_back({r, defect(r * zeta) / (1.0 - r)});
    }
    if (rep.estimates.empty())
        return rep;
    rep.limit = rep.estimates.back().quotient;

    const std::size_t W = options.window;
    const std::size_t n = rep.estimates.size();
    if (n < W + 1)
        return rep;
    const auto &e = rep.estimates;

    double max_rel = 0.0;
    for (std::size_t i = n - W; i < n; ++i)
        max_rel = std::max(max_rel, std::abs(e[i].quotient - e[i - 1].quotient) /
                                        std::abs(e[i].quotient));
    if (max_rel < options.stable_rel) {
        rep.classification = JuliaLimit::FINITE;
        return rep;
    }
    const bool growing = e[n - 1].quotient > e[n - 2].quotient;
    if (growing && e[n - 1].quotient > options.ceiling) {
        rep.classification = JuliaLimit::DIVERGENT;
        return rep;
    }
    // Growth per halving of 1 - r. A convergent quotient has slopes that
    // decay geometrically; sustained slopes mean growth like log(1/(1-r)) or
    // faster, which never reaches a finite limit.
    std::vector<double> slope;
    for (std::size_t i = n - W; i < n; ++i) {
        const double octaves = std::log2((1.0 - e[i - 1].r) / (1.0 - e[i].r));
        slope.push_back((e[i].quotient - e[i - 1].quotient) / octaves);
    }
    bool sustained = true;
    for (std::size_t i = 0; i < slope.size(); ++i) {
        if (!(slope[i] > 0.0))
            sustained = false;
        if (i > 0 && slope[i] < options.growth_ratio * slope[i - 1])
            sustained = false;
    }
    if (sustained)
        rep.classification = JuliaLimit::DIVERGENT;
    return rep;
}

JuliaReport julia_quotient_of(const std::function<cplx(cplx)> &phi, cplx zeta,
                              std::span<const double> radii, const JuliaOptions &options)
{
    return julia_quotient([&phi](cplx z) { return 1.0 - std::abs(phi(z)); }, zeta, radii, options);
}

std::vector<double> blaschke_gsum(const BlaschkeSpec &spec, cplx zeta, std::size_t terms)
{
    if (terms < 1)
        throw DomainError("blaschke_gsum: need at least one term");
    const double phi = std::arg(zeta);
    std::vector<double> partial;
    partial.reserve(terms);
    double sum = 0.0;
    for (std::size_t n = 1; n <= terms; ++n) {
        const BlaschkeZero a = spec.zero(n);
        sum += a.one_minus_r / a.dist_sq_to_unimodular(phi);
        partial.push_back(sum);
    }
    return partial;
}

} // namespace schlicht
