#include "doctest.h"

#include <cmath>

#include "schlicht/harmonic.hpp"
#include "schlicht/scalars.hpp"

using namespace schlicht;

namespace {

AnalyticMap h_from_t(double l)
{
    return make_from_omega(l, 0.0, schwarz_polynomial(SchwarzRole::omega, {0.0, 1.0}));
}

SchwarzCandidate cz(cplx c) { return schwarz_polynomial(SchwarzRole::omega, {0.0, c}); }

} // namespace

TEST_CASE("build_harmonic")
{
    const AnalyticMap H = h_from_t(0.3);
    const HarmonicMap F0 = build_harmonic(H, schwarz_polynomial(SchwarzRole::omega, {0.0}));
    CHECK(F0.G_series.max_abs() == 0.0);
    CHECK(std::abs(F0(cplx(0.3, 0.2)) - H(cplx(0.3, 0.2))) < 1e-15);

    // G' = 0.1 z H'(z) with H' = sum (n + 1) s_n z^n, so G_{n+2} = 0.1 (n + 1) s_n / (n + 2).
    const HarmonicMap F = build_harmonic(H, cz(0.1));
    CHECK(F.G_series[0] == cplx{});
    CHECK(F.G_series[1] == cplx{});
    for (std::size_t n = 0; n + 2 <= 40; ++n)
        CHECK(std::abs(F.G_series[n + 2] - 0.1 * static_cast<double>(n + 1) * H.series[n] /
                                              static_cast<double>(n + 2)) < 1e-15);
    // Series derivative against the closed form G' = omega H'.
    const cplx z(0.2, -0.3);
    CHECK(std::abs(eval(differentiate(F.G_series), z) - F.G_prime(z)) < 1e-12);

    CHECK_THROWS_AS(build_harmonic(make_f_theta(0.3, 0.0), cz(0.1)), HypothesisError);
    CHECK_THROWS_AS(build_harmonic(H, schwarz_polynomial(SchwarzRole::omega, {0.2, 0.1})), HypothesisError);
    CHECK_THROWS_AS(build_harmonic(H, cz(1.5)), HypothesisError);
}

TEST_CASE("jacobian")
{
    const AnalyticMap H = h_from_t(0.3);
    const HarmonicMap F0 = build_harmonic(H, schwarz_polynomial(SchwarzRole::omega, {0.0}));
    const cplx z(0.4, 0.1);
    CHECK(std::abs(jacobian(F0, z) - std::norm(H.derivative(z))) < 1e-14);
    CHECK(std::abs(jacobian(F0, 0.0) - 1.0) < 1e-15);

    // omega = c z has |omega| = c r on |z| = r, so J = (1 - c^2 r^2)|H'|^2 there.
    const double c = 0.6, r = 0.5;
    const HarmonicMap F = build_harmonic(H, cz(c));
    const cplx w = std::polar(r, 1.3);
    CHECK(std::abs(jacobian(F, w) - (1.0 - c * c * r * r) * std::norm(H.derivative(w))) < 1e-14);
    CHECK(std::abs(jacobian(F, 0.0) - 1.0) < 1e-15);
}

TEST_CASE("H' identity from the representation")
{
    // H'(z) = (1 - l z^2 omega(z)) / (1 + l z \int_0^z omega)^2 with omega(t) = t.
    const double l = 0.3;
    const AnalyticMap H = h_from_t(l);
    for (int k = 0; k < 32; ++k) {
        const cplx z = std::polar(0.9, 0.2 * k);
        const cplx expect = (1.0 - l * z * z * z) / ((1.0 + l * z * z * z / 2.0) * (1.0 + l * z * z * z / 2.0));
        CHECK(std::abs(H.derivative(z) - expect) < 1e-10);
    }
}

TEST_CASE("certify_T42")
{
    const SamplingPlan plan = SamplingPlan::dyadic(14, 1024);
    const double l = 0.3;
    const HarmonicMap F = build_harmonic(h_from_t(l), cz(0.18));
    const HarmonicCertificate c = certify_T42(F, plan);
    CHECK(c.status == CertStatus::CERTIFIED);
    CHECK(c.bound_used == doctest::Approx(0.31 / 1.69).epsilon(1e-12));
    CHECK(c.grid_min_margin > 0.0);
    CHECK(c.min_jacobian > 0.0);
    CHECK(c.sup_dilatation <= 0.18 + 1e-15);

    // Above the hypothesis bound: FAILED with a note, even if the pointwise test passes.
    const HarmonicCertificate over = certify_T42(build_harmonic(h_from_t(l), cz(0.19)), plan);
    CHECK(over.status == CertStatus::FAILED);
    CHECK_FALSE(over.notes.empty());

    const double edge = std::sqrt(2.0) - 1.0;
    const HarmonicMap zero = build_harmonic(h_from_t(edge), schwarz_polynomial(SchwarzRole::omega, {0.0}));
    const HarmonicCertificate z = certify_T42(zero, plan);
    CHECK(std::abs(z.bound_used) < 1e-14);
    CHECK(z.status == CertStatus::CERTIFIED);
    CHECK(certify_T42(build_harmonic(h_from_t(edge), cz(0.01)), plan).status == CertStatus::FAILED);

    CHECK_THROWS_AS(certify_T42(build_harmonic(h_from_t(0.45), cz(0.1)), plan), HypothesisError);
}

TEST_CASE("certify_T43")
{
    const SamplingPlan plan = SamplingPlan::dyadic(14, 1024);
    const HarmonicCertificate c = certify_T43(build_harmonic(h_from_t(0.3), cz(0.6)), plan);
    CHECK(c.bound_used == doctest::Approx(std::sqrt(0.91 * 0.4096)).epsilon(1e-12));
    CHECK(c.status == CertStatus::CERTIFIED);
    CHECK(c.min_jacobian > 0.0);

    for (double l : {0.1, 0.3, 0.5}) {
        const HarmonicCertificate z =
            certify_T43(build_harmonic(h_from_t(l), schwarz_polynomial(SchwarzRole::omega, {0.0})), plan);
        CHECK(z.status == CertStatus::CERTIFIED);
    }
    CHECK(std::abs(certify_T43(build_harmonic(h_from_t(0.5), cz(0.0)), plan).bound_used) < 1e-15);
    CHECK(certify_T43(build_harmonic(h_from_t(0.3), cz(0.7)), plan).status == CertStatus::FAILED);
    CHECK_THROWS_AS(certify_T43(build_harmonic(h_from_t(0.6), cz(0.1)), plan), HypothesisError);
}

TEST_CASE("bound formulas")
{
    for (double l : {0.1, 0.3, 0.5})
        for (int i = 0; i <= 1023; ++i) {
            const double r = i / 1023.0;
            const double s = l * r * r;
            if (s <= 0.5)
                CHECK(std::abs(B_bound(r, l) - std::cos(3.0 * std::asin(s))) < 1e-12);
            CHECK(A_bound(r, l) >= A_bound(1.0, l) - 1e-15);
            CHECK(B_bound(r, l) >= B_bound(1.0, l) - 1e-15);
        }
}
