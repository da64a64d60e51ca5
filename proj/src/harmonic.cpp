#include "schlicht/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "schlicht/parallel.hpp"
#include "schlicht/scalars.hpp"

namespace schlicht {

namespace {

constexpr double hypothesis_slack = 1e-12;
constexpr double asin_hard_limit = 1.0 + 1e-12;

TruncatedSeries derivative_series(const AnalyticMap &H)
{
    // H = z * series, so H' has coefficient (n + 1) series_n at z^n.
    const std::size_t N = H.series.order();
    std::vector<cplx> c(N + 1);
    for (std::size_t n = 0; n <= N; ++n)
        c[n] = static_cast<double>(n + 1) * H.series[n];
    return TruncatedSeries(std::move(c));
}

template <class Body>
void for_each_circle(const SamplingPlan &plan, Body body)
{
    parallel_for(plan.radii.size(), [&](std::size_t c) {
        for (std::size_t k = 0; k < plan.angles_per_circle; ++k)
            body(c, plan.point(c, k));
    });
}

} // namespace

cplx HarmonicMap::G(cplx z) const { return eval(G_series, z); }

cplx HarmonicMap::G_prime(cplx z) const { return dilatation.value(z) * H.derivative(z); }

cplx HarmonicMap::operator()(cplx z) const { return H(z) + std::conj(G(z)); }

HarmonicMap build_harmonic(const AnalyticMap &H, const SchwarzCandidate &omega_F)
{
    if (std::abs(H.a2) > hypothesis_slack)
        throw HypothesisError("build_harmonic: H has a2 != 0, so it is not in U_2(lambda)");
    if (std::abs(omega_F.value(0.0)) > hypothesis_slack)
        throw HypothesisError("build_harmonic: dilatation must vanish at 0");
    const SamplingPlan coarse = SamplingPlan::dyadic(10, 256);
    for (std::size_t c = 0; c < coarse.radii.size(); ++c)
        for (std::size_t k = 0; k < coarse.angles_per_circle; ++k)
            if (std::abs(omega_F.value(coarse.point(c, k))) > 1.0 + hypothesis_slack)
                throw HypothesisError("build_harmonic: dilatation leaves the closed unit disk");

    const std::size_t N = std::min(H.series.order(), omega_F.series.order());
    HarmonicMap F{H, integrate0(mul(omega_F.series.truncate(N), derivative_series(H).truncate(N))),
                  omega_F, H.lambda};
    return F;
}

double jacobian(const HarmonicMap &F, cplx z)
{
    const cplx hp = F.H.derivative(z);
    const cplx gp = F.dilatation.value(z) * hp;
    return std::norm(hp) - std::norm(gp);
}

std::string_view to_string(HarmonicTheorem t) { return t == HarmonicTheorem::T42 ? "T42" : "T43"; }

namespace {

struct CircleStats {
    double sup_omega = 0.0;
    double min_margin = std::numeric_limits<double>::infinity();
    double min_chain = std::numeric_limits<double>::infinity();
    double min_jac = std::numeric_limits<double>::infinity();
    std::size_t clamps = 0;
    bool hard_error = false;
};

HarmonicCertificate finish(HarmonicTheorem thm, double bound, const std::vector<CircleStats> &stats,
                           double tol)
{
    HarmonicCertificate cert;
    cert.theorem = thm;
    cert.bound_used = bound;
    cert.grid_min_margin = std::numeric_limits<double>::infinity();
    cert.chain_min_margin = std::numeric_limits<double>::infinity();
    cert.min_jacobian = std::numeric_limits<double>::infinity();
    for (const CircleStats &s : stats) {
        if (s.hard_error)
            throw NumericalFailure("certify: arcsin argument exceeds 1 + 1e-12");
        cert.sup_dilatation = std::max(cert.sup_dilatation, s.sup_omega);
        cert.grid_min_margin = std::min(cert.grid_min_margin, s.min_margin);
        cert.chain_min_margin = std::min(cert.chain_min_margin, s.min_chain);
        cert.min_jacobian = std::min(cert.min_jacobian, s.min_jac);
        cert.clamp_events += s.clamps;
    }
    const bool hypothesis = cert.sup_dilatation <= bound + tol;
    const bool pointwise = cert.grid_min_margin >= -tol && cert.chain_min_margin >= -tol;
    const bool sense = cert.min_jacobian > 0.0;
    if (!hypothesis)
        cert.notes.push_back(pointwise ? "sampled sup|omega_F| exceeds the admissible bound; "
                                         "the pointwise inequality holds on the grid"
                                       : "sampled sup|omega_F| exceeds the admissible bound");
    if (!pointwise)
        cert.notes.push_back("pointwise inequality violated on the grid");
    if (!sense)
        cert.notes.push_back("jacobian not positive on the grid");
    if (cert.clamp_events > 0)
        cert.notes.push_back("arcsin argument clamped to 1 at " + std::to_string(cert.clamp_events) +
                             " grid points");
    cert.status = hypothesis && pointwise && sense ? CertStatus::CERTIFIED : CertStatus::FAILED;
    return cert;
}

} // namespace

HarmonicCertificate certify_T42(const HarmonicMap &F, const SamplingPlan &plan,
                                std::optional<double> tolerance)
{
    const double l = F.lambda;
    if (!(l > 0.0 && l <= std::sqrt(2.0) - 1.0 + 1e-15))
        throw HypothesisError("certify_T42: lambda must lie in (0, sqrt(2) - 1]");
    plan.validate();
    const double tol = tolerance.value_or(plan.tolerance);
    const double bound = std::max(0.0, A_bound(1.0, std::min(l, std::sqrt(2.0) - 1.0)));
    std::vector<CircleStats> stats(plan.radii.size());
    for_each_circle(plan, [&](std::size_t c, cplx z) {
        CircleStats &s = stats[c];
        const InverseValue inv = F.H.inverse(z);
        const cplx k = (inv.q - z * inv.dq) / inv.q;
        const cplx om = F.dilatation.value(z);
        const double m_om = std::abs(om);
        s.sup_omega = std::max(s.sup_omega, m_om);
        s.min_margin = std::min(s.min_margin, k.real() - m_om * std::abs(k));
        s.min_chain = std::min(s.min_chain, k.real() / std::abs(k) - A_bound(plan.radii[c], l));
        s.min_jac = std::min(s.min_jac, jacobian(F, z));
    });
    HarmonicCertificate cert = finish(HarmonicTheorem::T42, bound, stats, tol);
    cert.notes.insert(cert.notes.begin(),
                      "starlikeness of H is assumed for H in U_2(lambda), lambda <= sqrt(2) - 1");
    return cert;
}

HarmonicCertificate certify_T43(const HarmonicMap &F, const SamplingPlan &plan,
                                std::optional<double> tolerance)
{
    const double l = F.lambda;
    if (!(l > 0.0 && l <= 0.5))
        throw HypothesisError("certify_T43: lambda must lie in (0, 1/2]");
    plan.validate();
    const double tol = tolerance.value_or(plan.tolerance);
    const double bound = B_bound(1.0, l);
    std::vector<CircleStats> stats(plan.radii.size());
    for_each_circle(plan, [&](std::size_t c, cplx z) {
        CircleStats &s = stats[c];
        const double r = plan.radii[c];
        double m_om = std::abs(F.dilatation.value(z));
        s.sup_omega = std::max(s.sup_omega, m_om);
        if (m_om > asin_hard_limit) {
            s.hard_error = true;
            return;
        }
        if (m_om > 1.0) {
            m_om = 1.0;
            ++s.clamps;
        }
        const double margin = pi / 2.0 - std::asin(m_om) - 3.0 * std::asin(l * r * r);
        s.min_margin = std::min(s.min_margin, margin);
        s.min_jac = std::min(s.min_jac, jacobian(F, z));
    });
    for (CircleStats &s : stats)
        s.min_chain = 0.0;
    HarmonicCertificate cert = finish(HarmonicTheorem::T43, bound, stats, tol);
    cert.notes.push_back("the constant bound B(1, lambda) is applied at every radius");
    return cert;
}

} // namespace schlicht
