#ifndef SCHLICHT_GEOMETRY_HPP
#define SCHLICHT_GEOMETRY_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schlicht/sampling.hpp"
#include "schlicht/zoo.hpp"

namespace schlicht {

enum class CertStatus { CERTIFIED, FAILED };
std::string_view to_string(CertStatus s);

/// Royster-Ziegler certificate for convexity in direction gamma.
struct ConvexityCertificate {
    double gamma = 0.0;
    double mu = 0.0;
    double nu = 0.0;
    double min_re = 0.0; // grid min of Re P for (mu, nu)
    double re_p0 = 0.0;  // Re P(0)
    CertStatus status = CertStatus::FAILED;
    std::size_t pairs_searched = 0;
    std::size_t radii_count = 0;
    std::size_t angles_per_circle = 0;
    std::string note;
};

/// (mu, nu) search grid: mu_k = 2 pi k / mu_count, nu_j = pi j / (nu_count - 1).
/// Pairs are visited mu-major.
struct DirectionSearch {
    std::size_t mu_count = 128;
    std::size_t nu_count = 65;

    double mu(std::size_t i) const { return two_pi * static_cast<double>(i) / static_cast<double>(mu_count); }
    double nu(std::size_t j) const
    {
        return pi * static_cast<double>(j) / static_cast<double>(nu_count - 1);
    }
    std::size_t pairs() const { return mu_count * nu_count; }
};

/// e^{i(mu-gamma)} (1 - 2 z e^{-i mu} cos nu + z^2 e^{-2 i mu}), evaluated in the
/// factored form (1 - z e^{-i(mu+nu)})(1 - z e^{-i(mu-nu)}) so it keeps
/// relative accuracy next to its zeros.
cplx rz_factor(double mu, double nu, double gamma, cplx z);

/// P_{mu,nu,gamma,phi}(z) = rz_factor * phi'(z).
cplx rz_functional(const AnalyticMap &phi, double mu, double nu, double gamma, cplx z);
cplx rz_functional(const std::function<cplx(cplx)> &phi_prime, double mu, double nu, double gamma,
                   cplx z);

/// First (mu, nu) in search order whose grid minimum of Re P is >= -tolerance
/// (and Re P(0) > 0). A FAILED certificate carries the best pair found and
/// means only "no certificate at this resolution".
ConvexityCertificate certify_direction(const AnalyticMap &phi, double gamma,
                                       const SamplingPlan &plan, const DirectionSearch &search = {},
                                       std::optional<double> tolerance = std::nullopt);

/// certify_direction for every gamma, sharing the grid work. Result i belongs
/// to gammas[i].
std::vector<ConvexityCertificate> scan_directions(const AnalyticMap &phi,
                                                  std::span<const double> gammas,
                                                  const SamplingPlan &plan,
                                                  const DirectionSearch &search = {},
                                                  std::optional<double> tolerance = std::nullopt);

struct BoundaryMinimum {
    double min_value;
    double argmin;         // angle or x at the minimum
    double analytic_bound; // lower bound the expression must respect
};

/// min over theta_k = 2 pi k/angles of Re N(e^{i theta}), with bound (1 - lambda)^3.
BoundaryMinimum reN_minimum(double lambda, std::size_t angles = 4096);

/// (1 - l p)(1 + 4 l p + l^2 p^2 + (1 + l p)^2 x - 2 l p x^2), x = Re(s^2).
double thm24_boundary_expression(double lambda, double p, double x);

/// Minimum of thm24_boundary_expression over `points` equally spaced x in
/// [-1, 1], with bound 0.
BoundaryMinimum thm24_boundary_minimum(double lambda, double p, std::size_t points = 1024);

enum class SubordinationStatus { SUBORDINATE, NOT_SUBORDINATE, UNDECIDED };
std::string_view to_string(SubordinationStatus s);

enum class WitnessKind { none, schwarz_series, modulus_excess, branch_point, containment_violation };
std::string_view to_string(WitnessKind w);

struct SubordinationVerdict {
    SubordinationStatus status = SubordinationStatus::UNDECIDED;
    WitnessKind witness = WitnessKind::none;
    std::optional<TruncatedSeries> schwarz_series;
    cplx witness_point{};
    double witness_value = 0.0; // |psi| for modulus excess, |discriminant| for a branch point
    double max_modulus = 0.0;
    cplx max_modulus_point{};
    double max_residual = 0.0;    // |(1 - psi)(1 - l psi) - z/f| over the tracked points
    double series_mismatch = 0.0; // |psi - series(psi)| on |z| <= 1/2
    bool tracking_failed = false; // root separation lost on some ray
    std::size_t rays = 0;
    std::size_t steps_per_ray = 0;
    // Tracked psi at plan.point(c, k), stored at index c * angles + k; empty
    // when tracking stopped early on some ray.
    std::vector<cplx> psi_on_grid;
    std::vector<std::string> diagnostics;
};

/// Recovers psi with z/f = (1 - psi)(1 - lambda psi), psi(0) = 0, by radial
/// continuation of the quadratic root, and decides whether z/f is subordinate
/// to (1 - z)(1 - lambda z).
SubordinationVerdict schwarz_recover(const AnalyticMap &f, double lambda, const SamplingPlan &plan);

/// Samples f(r e^{2 pi i k/n}), k = 0..n-1 (closing edge implicit). Throws
/// SingularPoint on a pole.
std::vector<cplx> boundary_curve(const AnalyticMap &f, double r, std::size_t n);

enum class Containment { INSIDE, OUTSIDE, ON_BOUNDARY };
std::string_view to_string(Containment c);

/// Winding-number test of w against a closed polyline (last point joins the first).
Containment winding_containment(std::span<const cplx> curve, cplx w);

/// Signed winding number of the closed polyline around w.
int winding_number(std::span<const cplx> curve, cplx w);

} // namespace schlicht

#endif
