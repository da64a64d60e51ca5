#include "doctest.h"

#include <cmath>
#include <random>

#include "schlicht/blaschke.hpp"
#include "schlicht/membership.hpp"
#include "schlicht/scalars.hpp"

using namespace schlicht;

namespace {

std::vector<double> dyadic_radii(int count)
{
    std::vector<double> r;
    for (int j = 1; j <= count; ++j)
        r.push_back(1.0 - std::ldexp(1.0, -j));
    return r;
}

// U_f = q - z q' - 1 for a polynomial q, coefficient by coefficient.
std::vector<cplx> u_of_polynomial(const std::vector<cplx> &q)
{
    std::vector<cplx> u(q.size());
    for (std::size_t n = 0; n < q.size(); ++n)
        u[n] = (1.0 - static_cast<double>(n)) * q[n];
    u[0] -= 1.0;
    return u;
}

} // namespace

TEST_CASE("u_functional")
{
    CHECK(u_functional(make_f_a(0.3, 0.2), 0.0) == cplx{});
    CHECK(std::abs(u_functional(make_f_theta(0.5, 0.0), 0.5) + 0.125) < 1e-15);
    const cplx z = 0.6;
    CHECK(std::abs(u_functional(make_f_a(0.2, 0.5), z) - (-0.2 * 0.36 * (1.1 / 1.3))) < 1e-14);

    // Second form against the first: (z/f)^2 f' - 1.
    const AnalyticMap g = make_example32(0.5, 3);
    const cplx w(0.3, -0.4);
    const cplx f = g(w);
    CHECK(std::abs(u_functional(g, w) - ((w / f) * (w / f) * g.derivative(w) - 1.0)) < 1e-13);

    const AnalyticMap pole = make_from_inverse_polynomial("pole", 1.0, {1.0, -2.0});
    CHECK_THROWS_AS(u_functional(pole, 0.5), SingularPoint);
}

TEST_CASE("u_series")
{
    CHECK(u_series(make_identity()).max_abs() < 1e-15);
    for (double l : {0.3, 1.0})
        for (double th : {0.0, 0.8}) {
            const TruncatedSeries u = u_series(make_f_theta(l, th));
            const std::vector<cplx> expect =
                u_of_polynomial({1.0, -(1.0 + l) * unimodular(th), l * unimodular(2 * th)});
            for (std::size_t n = 0; n <= u.order(); ++n)
                CHECK(std::abs(u[n] - (n < expect.size() ? expect[n] : 0.0)) < 1e-15);
            CHECK(std::abs(u[2] + l * unimodular(2 * th)) < 1e-15);
        }
}

TEST_CASE("master oracle: U_f = -lambda z^2 omega for random polynomial omega")
{
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0), lam(0.05, 1.0);
    std::uniform_int_distribution<int> deg(0, 12);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<cplx> c(static_cast<std::size_t>(deg(rng)) + 1);
        double total = 0.0;
        for (auto &x : c) {
            x = cplx(u(rng), u(rng));
            total += std::abs(x);
        }
        for (auto &x : c)
            x /= total; // sum |c_n| <= 1 keeps omega in the unit ball
        const double l = lam(rng);
        const cplx a2 = cplx(u(rng), u(rng)) * 0.5;
        const AnalyticMap f = make_from_omega(l, a2, schwarz_polynomial(SchwarzRole::omega, c));
        const TruncatedSeries us = u_series(f);
        for (std::size_t n = 0; n <= us.order(); ++n) {
            const cplx expect = n >= 2 && n - 2 < c.size() ? -l * c[n - 2] : cplx{};
            REQUIRE(std::abs(us[n] - expect) < 1e-12);
        }
    }
}

TEST_CASE("sup_abs_u on closed-form families")
{
    const SamplingPlan plan = SamplingPlan::dyadic(20, 1024);
    for (double l : {0.25, 0.5, 1.0}) {
        const MembershipReport rep = sup_abs_u(make_f_theta(l, 0.7), plan);
        for (const CircleSup &c : rep.per_circle_sup)
            CHECK(std::abs(c.sup - l * c.r * c.r) < 1e-12);
        CHECK(std::abs(rep.sup_estimate - l * plan.r_max() * plan.r_max()) < 1e-12);
        CHECK(rep.verdict == Verdict::UNDECIDED);
    }
    const MembershipReport g = sup_abs_u(make_g_threefold(), plan);
    for (const CircleSup &c : g.per_circle_sup)
        CHECK(std::abs(c.sup - c.r * c.r * c.r) < 1e-12);
    CHECK(sup_abs_u(make_identity(), plan).sup_estimate == 0.0);

    // Maximum modulus: circle suprema never decrease.
    for (const AnalyticMap &f : {make_f_a(0.4, 0.7), make_example32(0.5, 2), make_omega1_az2(1.0, 1.0)}) {
        const MembershipReport rep = sup_abs_u(f, plan);
        for (std::size_t i = 1; i < rep.per_circle_sup.size(); ++i)
            CHECK(rep.per_circle_sup[i].sup >= rep.per_circle_sup[i - 1].sup - 1e-15);
    }
}

TEST_CASE("pole points are skipped and block an IN verdict")
{
    // z/f = 1 - 2z vanishes at z = 1/2, which is the first grid circle at angle 0.
    const AnalyticMap pole = make_from_inverse_polynomial("pole", 1.0, {1.0, -2.0});
    const SamplingPlan plan = SamplingPlan::dyadic(3, 64);
    const MembershipReport rep = sup_abs_u(pole, plan);
    REQUIRE(rep.skipped_points.size() == 1);
    CHECK(std::abs(rep.skipped_points[0] - 0.5) < 1e-15);
    // |U| = 0 for this q; the skipped point still prevents IN.
    const MembershipReport v = membership_verdict(pole, 1.0, plan);
    CHECK(v.verdict == Verdict::UNDECIDED);
}

TEST_CASE("membership_verdict")
{
    const SamplingPlan plan = SamplingPlan::dyadic();
    const MembershipReport in = membership_verdict(make_f_theta(0.5, 0.0), 0.5, plan);
    CHECK(in.verdict == Verdict::IN);
    CHECK(in.margin > 0.0);
    CHECK(in.vanishing_order == 2);

    const MembershipReport out = membership_verdict(make_f_theta(0.4, 0.0), 0.3, plan);
    REQUIRE(out.verdict == Verdict::OUT);
    REQUIRE(out.witness.has_value());
    CHECK(std::abs(u_functional(make_f_theta(0.4, 0.0), *out.witness)) >= 0.3);
    CHECK(std::abs(*out.witness) > 0.866);

    CHECK(membership_verdict(make_g_threefold(), 1.0, plan).verdict == Verdict::IN);
    // f_theta(l) against a larger level is IN; below l r_max^2 it is OUT.
    CHECK(membership_verdict(make_f_theta(0.3, 1.0), 0.6, plan).verdict == Verdict::IN);
    CHECK(membership_verdict(make_f_theta(0.6, 1.0), 0.5, plan).verdict == Verdict::OUT);
    // f_a lies in U(lambda) by construction.
    CHECK(membership_verdict(make_f_a(0.15, 0.5), 0.15, plan).verdict == Verdict::IN);
    CHECK_THROWS_AS(membership_verdict(make_identity(), 0.0, plan), DomainError);
}

TEST_CASE("l_phi")
{
    const SchwarzCandidate id = schwarz_polynomial(SchwarzRole::phi, {0.0, 1.0});
    for (cplx z : {cplx(0.3, 0.4), cplx(-0.7, 0.1)})
        CHECK(std::abs(l_phi(id, 0.6, z) - 0.6 * std::norm(z)) < 1e-15);
    CHECK(l_phi(id, 0.6, 0.0) == 0.0);

    // phi = z^2, lambda = 1/2, z = 1/2: q = (1 - phi)(1 - phi/2) = 0.65625,
    // q' = -1.25, so |q - z q' - 1| = 0.28125.
    const SchwarzCandidate sq = schwarz_polynomial(SchwarzRole::phi, {0.0, 0.0, 1.0});
    CHECK(std::abs(l_phi(sq, 0.5, 0.5) - 0.28125) < 1e-15);
}

TEST_CASE("julia_quotient")
{
    const std::vector<double> radii = dyadic_radii(30);
    const JuliaReport sq = julia_quotient_of([](cplx z) { return z * z; }, 1.0, radii);
    CHECK(sq.classification == JuliaLimit::FINITE);
    CHECK(std::abs(sq.limit - 2.0) < 1e-6);

    const std::vector<double> r40 = dyadic_radii(40);
    const BlaschkeSpec b1 = BlaschkeSpec::b1(40), b2 = BlaschkeSpec::b2(40);
    const JuliaReport j1 = julia_quotient([&](cplx z) { return blaschke_defect(b1, z); }, 1.0, r40);
    const JuliaReport j2 = julia_quotient([&](cplx z) { return blaschke_defect(b2, z); }, 1.0, r40);
    CHECK(j1.classification == JuliaLimit::FINITE);
    CHECK(j1.limit > 1.0);
    CHECK(j2.classification == JuliaLimit::DIVERGENT);
    for (std::size_t i = 0; i < r40.size(); ++i)
        if (r40[i] >= 0.99)
            CHECK(j2.estimates[i].quotient > j1.estimates[i].quotient);

    const JuliaReport ident = julia_quotient_of([](cplx z) { return z; }, unimodular(0.4), radii);
    CHECK(ident.classification == JuliaLimit::FINITE);
    CHECK(std::abs(ident.limit - 1.0) < 1e-12);
    // Growth like (1-r)^{-1/2} crosses the ceiling.
    const JuliaReport blow = julia_quotient([](cplx z) { return std::sqrt(1.0 - std::abs(z)); }, 1.0, r40);
    CHECK(blow.classification == JuliaLimit::DIVERGENT);
    CHECK_THROWS_AS(julia_quotient_of([](cplx z) { return z; }, 2.0, radii), DomainError);
}

TEST_CASE("blaschke_gsum")
{
    const std::vector<double> g1 = blaschke_gsum(BlaschkeSpec::b1(60), 1.0, 60);
    for (std::size_t i = 0; i < g1.size(); ++i) {
        CHECK(g1[i] <= 4.0 * pi * pi / 45.0 + 1e-6);
        if (i > 0)
            CHECK(g1[i] >= g1[i - 1]);
    }
    const std::vector<double> g2 = blaschke_gsum(BlaschkeSpec::b2(50), 1.0, 50);
    for (std::size_t n = 1; n <= 50; ++n)
        CHECK(g2[n - 1] >= static_cast<double>(n));
    // First term by direct arithmetic.
    const cplx a1 = std::polar(1.0 - 1.0 / 16.0, 0.5);
    CHECK(std::abs(g1[0] - (1.0 / 16.0) / std::norm(1.0 - a1)) < 1e-15);
    CHECK_THROWS_AS(blaschke_gsum(BlaschkeSpec::b1(5), 1.0, 0), DomainError);
}

TEST_CASE("lemma31_upper = 1 + 2 t_zero")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> lam(0.01, 1.0), ang(0.0, pi);
    int checked = 0;
    while (checked < 200) {
        const double l = lam(rng), th = ang(rng);
        if (!(std::cos(th) > 2.0 * l / (1.0 + l)))
            continue;
        CHECK(std::abs(lemma31_upper(th, l) - (1.0 + 2.0 * t_zero(th, l))) < 1e-12);
        ++checked;
    }
}

TEST_CASE("sampling plan validation")
{
    SamplingPlan bad;
    bad.radii = {0.5, 0.4};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad.radii = {0.5, 1.0};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad.radii = {0.5};
    bad.angles_per_circle = 32;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    const SamplingPlan d = SamplingPlan::dyadic();
    CHECK(d.radii.size() == 20);
    CHECK(d.r_max() == 1.0 - std::ldexp(1.0, -20));
    CHECK(d.size() == 20 * 4096);
}
