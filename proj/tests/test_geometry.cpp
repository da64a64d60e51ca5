#include "doctest.h"

#include <cmath>
#include <random>

#include "schlicht/geometry.hpp"
#include "schlicht/scalars.hpp"

using namespace schlicht;

namespace {

std::vector<cplx> unit_circle(std::size_t n, double r = 1.0)
{
    std::vector<cplx> c(n);
    for (std::size_t k = 0; k < n; ++k)
        c[k] = std::polar(r, two_pi * static_cast<double>(k) / static_cast<double>(n));
    return c;
}

} // namespace

TEST_CASE("rz_factor against the expanded quadratic")
{
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> ang(0.0, two_pi), rad(0.0, 0.99);
    for (int i = 0; i < 200; ++i) {
        const double mu = ang(rng), nu = 0.5 * ang(rng), gamma = 0.5 * ang(rng);
        const cplx z = std::polar(rad(rng), ang(rng));
        const cplx expanded = unimodular(mu - gamma) *
                              (1.0 - 2.0 * z * unimodular(-mu) * std::cos(nu) + z * z * unimodular(-2.0 * mu));
        CHECK(std::abs(rz_factor(mu, nu, gamma, z) - expanded) < 1e-14);
    }
}

TEST_CASE("rz_functional closed forms")
{
    const AnalyticMap f = make_f_a(0.3, 0.4);
    CHECK(std::abs(rz_functional(f, 1.0, 0.5, 0.2, 0.0) - unimodular(0.8)) < 1e-15);
    CHECK(std::abs(rz_functional(f, 1.3, 0.5, 1.3, 0.0) - 1.0) < 1e-15);

    // f_theta with mu = gamma = 2 pi - theta, nu = 0.
    const double l = 0.6, th = 0.9;
    const AnalyticMap ft = make_f_theta(l, th);
    for (cplx z : {cplx(0.2, 0.3), cplx(-0.5, 0.5), cplx(0.9, 0.0)}) {
        const cplx expect = (1.0 - l * unimodular(2 * th) * z * z) /
                            ((1.0 - l * unimodular(th) * z) * (1.0 - l * unimodular(th) * z));
        CHECK(std::abs(rz_functional(ft, two_pi - th, 0.0, two_pi - th, z) - expect) < 1e-13);
    }

    // omega_1 = a z^2 with mu = gamma = 2 pi - arg(a)/2, nu = pi/2: P = f'(z)(1 + s^2).
    const cplx a = std::polar(0.8, 1.2);
    const AnalyticMap fa = make_omega1_az2(0.7, a);
    const double m = two_pi - std::arg(a) / 2.0;
    for (cplx z : {cplx(0.2, 0.3), cplx(-0.5, 0.5)}) {
        const cplx s = z * unimodular(std::arg(a) / 2.0);
        CHECK(std::abs(rz_functional(fa, m, pi / 2, m, z) - fa.derivative(z) * (1.0 + s * s)) < 1e-13);
    }
    const std::function<cplx(cplx)> dphi = [&](cplx z) { return ft.derivative(z); };
    CHECK(std::abs(rz_functional(dphi, 1.0, 2.0, 0.5, cplx(0.1, 0.2)) -
                   rz_functional(ft, 1.0, 2.0, 0.5, cplx(0.1, 0.2))) == 0.0);
}

TEST_CASE("certify_direction")
{
    const SamplingPlan plan = SamplingPlan::dyadic(14, 1024);
    const ConvexityCertificate c = certify_direction(make_f_theta(0.5, 0.0), 0.0, plan);
    CHECK(c.status == CertStatus::CERTIFIED);
    CHECK(c.mu == 0.0);
    CHECK(c.nu == 0.0);
    CHECK(c.min_re >= -plan.tolerance);
    CHECK(c.re_p0 > 0.0);

    const ConvexityCertificate d = certify_direction(make_omega1_az2(1.0, 1.0), 0.0, plan);
    CHECK(d.status == CertStatus::CERTIFIED);
    CHECK(std::abs(d.nu - pi / 2) < 1e-15);

    const ConvexityCertificate g = certify_direction(make_g_threefold(), 0.3, plan);
    CHECK(g.status == CertStatus::FAILED);
    CHECK(g.min_re < -1e-3);
    CHECK(g.note == "no certificate found at resolution");

    // A rotated f_theta is convex in direction 2 pi - theta.
    const double th = pi / 4;
    const ConvexityCertificate r =
        certify_direction(make_f_theta(0.7, th), std::fmod(two_pi - th, pi), plan);
    CHECK(r.status == CertStatus::CERTIFIED);

    const double gammas[] = {0.0, 0.3};
    const auto scan = scan_directions(make_f_theta(0.5, 0.0), gammas, plan);
    REQUIRE(scan.size() == 2);
    CHECK(scan[0].mu == c.mu);
    CHECK(scan[0].min_re == c.min_re);
}

TEST_CASE("f_theta: Re{(1 - e^{i theta} z)^2 f'} stays nonnegative")
{
    const SamplingPlan plan = SamplingPlan::dyadic(14, 1024);
    for (double l : {0.3, 0.7, 1.0})
        for (double th : {0.0, pi / 4, pi / 2}) {
            const AnalyticMap f = make_f_theta(l, th);
            double m = 1e300;
            for (std::size_t c = 0; c < plan.radii.size(); ++c)
                for (std::size_t k = 0; k < plan.angles_per_circle; ++k) {
                    const cplx z = plan.point(c, k);
                    const cplx w = 1.0 - unimodular(th) * z;
                    m = std::min(m, (w * w * f.derivative(z)).real());
                }
            CHECK(m >= -1e-9);
        }
}

TEST_CASE("boundary checks")
{
    const BoundaryMinimum n1 = reN_minimum(1.0);
    CHECK(std::abs(n1.min_value) < 1e-15);
    CHECK(n1.analytic_bound == 0.0);
    const BoundaryMinimum n5 = reN_minimum(0.5);
    CHECK(n5.min_value >= 0.125 - 1e-12);
    CHECK(n5.analytic_bound == 0.125);

    const BoundaryMinimum t = thm24_boundary_minimum(1.0, 1.0);
    CHECK(t.min_value == 0.0);
    for (double p : {0.5, 1.0})
        for (double l : {0.5, 1.0})
            CHECK(thm24_boundary_minimum(l, p).min_value >= -1e-12);
    // Spot value by hand: l p = 1/4, x = 0.
    CHECK(std::abs(thm24_boundary_expression(0.5, 0.5, 0.0) - 0.75 * (1.0 + 1.0 + 0.0625)) < 1e-15);
    CHECK_THROWS_AS(thm24_boundary_expression(0.5, 0.5, 1.5), DomainError);
}

TEST_CASE("schwarz_recover")
{
    const SamplingPlan plan = SamplingPlan::dyadic(12, 256);
    for (double l : {0.5, 1.0}) {
        const double th = 0.8;
        const SubordinationVerdict v = schwarz_recover(make_f_theta(l, th), l, plan);
        REQUIRE(v.status == SubordinationStatus::SUBORDINATE);
        CHECK(v.witness == WitnessKind::schwarz_series);
        CHECK(v.max_residual < 1e-8);
        REQUIRE(v.schwarz_series.has_value());
        CHECK(std::abs((*v.schwarz_series)[1] - unimodular(th)) < 1e-12);
        CHECK(std::abs((*v.schwarz_series)[2]) < 1e-12);
        double dev = 0.0;
        for (std::size_t c = 0; c < plan.radii.size(); ++c)
            for (std::size_t k = 0; k < plan.angles_per_circle; ++k)
                dev = std::max(dev, std::abs(v.psi_on_grid[c * plan.angles_per_circle + k] -
                                             unimodular(th) * plan.point(c, k)));
        CHECK(dev < 1e-8);
    }
    const SubordinationVerdict id = schwarz_recover(make_identity(), 0.5, plan);
    CHECK(id.status == SubordinationStatus::SUBORDINATE);
    CHECK(id.max_modulus < 1e-15);

    const SubordinationVerdict e = schwarz_recover(make_example32(0.5, 2), 0.5, plan);
    CHECK(e.status == SubordinationStatus::NOT_SUBORDINATE);
    CHECK(e.witness != WitnessKind::none);
    CHECK(e.witness != WitnessKind::schwarz_series);
    CHECK_THROWS_AS(schwarz_recover(make_identity(), 0.0, plan), DomainError);
}

TEST_CASE("branch point witness")
{
    // z/f = (1 - psi)(1 - l psi) has a discriminant zero where
    // (1 + l)^2 = 4 l (1 - q). For q = 1 - c z with c = (1 + l)^2 / (4 l z0)
    // this happens at z0 inside the disk.
    const double l = 0.5, z0 = 0.75;
    const double c = (1.0 + l) * (1.0 + l) / (4.0 * l * z0);
    const AnalyticMap f = make_from_inverse_polynomial("branch", l, {1.0, -c});
    SamplingPlan plan;
    plan.radii = {0.25, 0.5, 0.7};
    plan.angles_per_circle = 64;
    const SubordinationVerdict v = schwarz_recover(f, l, plan);
    CHECK(v.status == SubordinationStatus::NOT_SUBORDINATE);
    CHECK(v.witness == WitnessKind::branch_point);
    CHECK(std::abs(v.witness_point - z0) < 1e-9);
}

TEST_CASE("boundary_curve and winding containment")
{
    const std::vector<cplx> c = boundary_curve(make_identity(), 0.5, 64);
    for (std::size_t k = 0; k < c.size(); ++k)
        CHECK(std::abs(c[k] - std::polar(0.5, two_pi * k / 64.0)) < 1e-15);
    CHECK_THROWS_AS(boundary_curve(make_identity(), 1.0, 64), DomainError);
    CHECK_THROWS_AS(boundary_curve(make_from_inverse_polynomial("pole", 1.0, {1.0, -2.0}), 0.5, 64),
                    SingularPoint);

    const std::vector<cplx> circle = unit_circle(256);
    CHECK(winding_containment(circle, 0.5) == Containment::INSIDE);
    CHECK(winding_containment(circle, 2.0) == Containment::OUTSIDE);
    CHECK(winding_containment(circle, 1.0) == Containment::ON_BOUNDARY);
    CHECK(winding_number(circle, 0.0) == 1);
    std::vector<cplx> reversed(circle.rbegin(), circle.rend());
    CHECK(winding_number(reversed, 0.0) == -1);
    CHECK_THROWS_AS(winding_containment(std::vector<cplx>{0.0, 1.0}, 0.5), DomainError);

    const double l = 0.5;
    std::vector<cplx> target(4096);
    for (std::size_t k = 0; k < target.size(); ++k) {
        const cplx w = unimodular(two_pi * k / 4096.0);
        target[k] = (1.0 - w) * (1.0 - l * w);
    }
    const AnalyticMap f = make_f_theta(l, 0.0);
    CHECK(winding_containment(target, f.inverse(0.9).q) == Containment::INSIDE);
    CHECK(winding_containment(target, 3.5) == Containment::OUTSIDE);
}

TEST_CASE("figure curves")
{
    // z/(1 + z^2) near the circle collapses onto the real axis, |Re| >= 1/2.
    const std::vector<cplx> c = boundary_curve(make_omega1_az2(1.0, 1.0), 0.9999, 4096);
    for (std::size_t k = 0; k < c.size(); ++k) {
        const double t = two_pi * k / 4096.0;
        if (std::abs(t - pi / 2) > 0.2 && std::abs(t - 3 * pi / 2) > 0.2) {
            CHECK(std::abs(c[k].imag()) < 2e-3);
            CHECK(std::abs(c[k].real()) >= 0.5 - 1e-3);
        }
    }
    // g: the point set is invariant under rotation by 2 pi / 3 when 3 | n.
    const std::vector<cplx> g = boundary_curve(make_g_threefold(), 0.999, 4095);
    const cplx w = unimodular(two_pi / 3.0);
    for (std::size_t k = 0; k < g.size(); ++k)
        CHECK(std::abs(w * g[k] - g[(k + 1365) % 4095]) < 1e-9);
}
