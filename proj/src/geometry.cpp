#include "schlicht/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "schlicht/parallel.hpp"
#include "schlicht/scalars.hpp"

namespace schlicht {

std::string_view to_string(CertStatus s)
{
    return s == CertStatus::CERTIFIED ? "CERTIFIED" : "FAILED";
}

std::string_view to_string(SubordinationStatus s)
{
    switch (s) {
    case SubordinationStatus::SUBORDINATE: return "SUBORDINATE";
    case SubordinationStatus::NOT_SUBORDINATE: return "NOT_SUBORDINATE";
    case SubordinationStatus::UNDECIDED: return "UNDECIDED";
    }
    return "?";
}

std::string_view to_string(WitnessKind w)
{
    switch (w) {
    case WitnessKind::none: return "none";
    case WitnessKind::schwarz_series: return "schwarz_series";
    case WitnessKind::modulus_excess: return "modulus_excess";
    case WitnessKind::branch_point: return "branch_point";
    case WitnessKind::containment_violation: return "containment_violation";
    }
    return "?";
}

std::string_view to_string(Containment c)
{
    switch (c) {
    case Containment::INSIDE: return "INSIDE";
    case Containment::OUTSIDE: return "OUTSIDE";
    case Containment::ON_BOUNDARY: return "ON_BOUNDARY";
    }
    return "?";
}

cplx rz_factor(double mu, double nu, double gamma, cplx z)
{
    const cplx c1 = unimodular(-(mu + nu));
    const cplx c2 = unimodular(-(mu - nu));
    return unimodular(mu - gamma) * (1.0 - z * c1) * (1.0 - z * c2);
}

cplx rz_functional(const AnalyticMap &phi, double mu, double nu, double gamma, cplx z)
{
    return rz_factor(mu, nu, gamma, z) * phi.derivative(z);
}

cplx rz_functional(const std::function<cplx(cplx)> &phi_prime, double mu, double nu, double gamma,
                   cplx z)
{
    return rz_factor(mu, nu, gamma, z) * phi_prime(z);
}

namespace {

// phi' sampled on the plan grid, outermost circle first.
struct DerivativeGrid {
    std::vector<std::vector<cplx>> z;
    std::vector<std::vector<cplx>> dphi;
    cplx dphi0;
};

DerivativeGrid sample_derivative(const AnalyticMap &phi, const SamplingPlan &plan)
{
    DerivativeGrid g;
    const std::size_t C = plan.radii.size();
    g.z.resize(C);
    g.dphi.resize(C);
    parallel_for(C, [&](std::size_t c) {
        const std::size_t circle = C - 1 - c;
        auto &zs = g.z[c];
        auto &ds = g.dphi[c];
        zs.resize(plan.angles_per_circle);
        ds.resize(plan.angles_per_circle);
        for (std::size_t k = 0; k < plan.angles_per_circle; ++k) {
            zs[k] = plan.point(circle, k);
            ds[k] = phi.derivative(zs[k]);
        }
    });
    g.dphi0 = phi.derivative(0.0);
    return g;
}

// Q = e^{i mu}(1 - z e^{-i(mu+nu)})(1 - z e^{-i(mu-nu)}) phi'(z); Re P = Re(e^{-i gamma} Q).
void fill_q(const std::vector<cplx> &zs, const std::vector<cplx> &ds, double mu, double nu,
            std::vector<double> &re, std::vector<double> &im)
{
    const cplx e = unimodular(mu);
    const cplx c1 = unimodular(-(mu + nu));
    const cplx c2 = unimodular(-(mu - nu));
    re.resize(zs.size());
    im.resize(zs.size());
    for (std::size_t k = 0; k < zs.size(); ++k) {
        const cplx q = e * (1.0 - zs[k] * c1) * (1.0 - zs[k] * c2) * ds[k];
        re[k] = q.real();
        im[k] = q.imag();
    }
}

double min_re(const std::vector<double> &re, const std::vector<double> &im, double gamma)
{
    const double cg = std::cos(gamma), sg = std::sin(gamma);
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < re.size(); ++k)
        m = std::min(m, cg * re[k] + sg * im[k]);
    return m;
}

} // namespace

std::vector<ConvexityCertificate> scan_directions(const AnalyticMap &phi,
                                                  std::span<const double> gammas,
                                                  const SamplingPlan &plan,
                                                  const DirectionSearch &search,
                                                  std::optional<double> tolerance)
{
    plan.validate();
    if (search.mu_count < 1 || search.nu_count < 2)
        throw DomainError("DirectionSearch: need mu_count >= 1 and nu_count >= 2");
    const double tol = tolerance.value_or(plan.tolerance);
    const DerivativeGrid grid = sample_derivative(phi, plan);
    if (std::abs(grid.dphi0) == 0.0)
        throw DomainError("certify_direction: phi'(0) vanishes");

    const std::size_t P = search.pairs();
    const std::size_t G = gammas.size();
    // outer[p * G + g]: min of Re P over the outermost circle.
    std::vector<double> outer(P * G);
    parallel_for(P, [&](std::size_t p) {
        std::vector<double> re, im;
        fill_q(grid.z[0], grid.dphi[0], search.mu(p / search.nu_count),
               search.nu(p % search.nu_count), re, im);
        for (std::size_t g = 0; g < G; ++g)
            outer[p * G + g] = min_re(re, im, gammas[g]);
    });

    auto full_min = [&](std::size_t p, double gamma) {
        std::vector<double> re, im;
        double m = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < grid.z.size(); ++c) {
            fill_q(grid.z[c], grid.dphi[c], search.mu(p / search.nu_count),
                   search.nu(p % search.nu_count), re, im);
            m = std::min(m, min_re(re, im, gamma));
            if (m < -tol)
                break;
        }
        return m;
    };

    std::vector<ConvexityCertificate> out(G);
    parallel_for(G, [&](std::size_t g) {
        const double gamma = gammas[g];
        ConvexityCertificate best;
        best.gamma = gamma;
        best.min_re = -std::numeric_limits<double>::infinity();
        best.radii_count = plan.radii.size();
        best.angles_per_circle = plan.angles_per_circle;
        for (std::size_t p = 0; p < P; ++p) {
            const double mu = search.mu(p / search.nu_count);
            const double nu = search.nu(p % search.nu_count);
            double m = outer[p * G + g];
            const double re0 = (unimodular(mu - gamma) * grid.dphi0).real();
            if (m >= -tol)
                m = full_min(p, gamma);
            if (m >= -tol && re0 > 0.0) {
                ConvexityCertificate cert = best;
                cert.mu = mu;
                cert.nu = nu;
                cert.min_re = m;
                cert.re_p0 = re0;
                cert.status = CertStatus::CERTIFIED;
                cert.pairs_searched = p + 1;
                out[g] = cert;
                return;
            }
            if (m > best.min_re) {
                best.mu = mu;
                best.nu = nu;
                best.min_re = m;
                best.re_p0 = re0;
            }
        }
        best.status = CertStatus::FAILED;
        best.pairs_searched = P;
        best.note = "no certificate found at resolution";
        out[g] = best;
    });
    return out;
}

ConvexityCertificate certify_direction(const AnalyticMap &phi, double gamma,
                                       const SamplingPlan &plan, const DirectionSearch &search,
                                       std::optional<double> tolerance)
{
    const double g[] = {gamma};
    return scan_directions(phi, g, plan, search, tolerance).front();
}

BoundaryMinimum reN_minimum(double lambda, std::size_t angles)
{
    if (angles < 1)
        throw DomainError("reN_minimum: need at least one angle");
    BoundaryMinimum m{std::numeric_limits<double>::infinity(), 0.0,
                      (1.0 - lambda) * (1.0 - lambda) * (1.0 - lambda)};
    for (std::size_t k = 0; k < angles; ++k) {
        const double t = two_pi * static_cast<double>(k) / static_cast<double>(angles);
        const double v = reN_boundary(lambda, t);
        if (v < m.min_value) {
            m.min_value = v;
            m.argmin = t;
        }
    }
    return m;
}

double thm24_boundary_expression(double lambda, double p, double x)
{
    if (!(lambda > 0.0 && lambda <= 1.0) || !(p > 0.0 && p <= 1.0))
        throw DomainError("thm24_boundary_expression: lambda and p must lie in (0,1]");
    if (!(x >= -1.0 && x <= 1.0))
        throw DomainError("thm24_boundary_expression: x must lie in [-1,1]");
    const double lp = lambda * p;
    return (1.0 - lp) * (1.0 + 4.0 * lp + lp * lp + (1.0 + lp) * (1.0 + lp) * x - 2.0 * lp * x * x);
}

BoundaryMinimum thm24_boundary_minimum(double lambda, double p, std::size_t points)
{
    if (points < 2)
        throw DomainError("thm24_boundary_minimum: need at least two points");
    BoundaryMinimum m{std::numeric_limits<double>::infinity(), 0.0, 0.0};
    for (std::size_t i = 0; i < points; ++i) {
        const double x = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(points - 1);
        const double v = thm24_boundary_expression(lambda, p, x);
        if (v < m.min_value) {
            m.min_value = v;
            m.argmin = x;
        }
    }
    return m;
}

namespace {

constexpr double branch_threshold = 1e-10;
constexpr double modulus_slack = 1e-9;
constexpr double residual_tolerance = 1e-8;

struct RayResult {
    double max_modulus = 0.0;
    cplx max_point{};
    std::optional<cplx> branch_point;
    double branch_value = 0.0;
    bool failed = false;
    double max_residual = 0.0;
    double series_mismatch = 0.0;
};

// Continues the root psi of lambda psi^2 - (1+lambda) psi + (1 - q) = 0 from
// psi(0) = 0. For lambda = 1 the tracked quantity is s = sqrt(q), psi = 1 - s.
class RayTracker {
public:
    RayTracker(const AnalyticMap &f, double lambda, const TruncatedSeries &psi_series)
        : f_(f), lambda_(lambda), psi_series_(psi_series)
    {
    }

    // slot[i] >= 0 marks radii[i] as plan circle slot[i]; psi there goes to grid_out.
    RayResult run(double angle, const std::vector<double> &radii, const std::vector<int> &slot,
                  std::vector<cplx> &grid_out)
    {
        RayResult res;
        const cplx dir = unimodular(angle);
        state_ = unit_lambda() ? cplx{1.0} : cplx{0.0};
        double r_prev = 0.0;
        for (std::size_t i = 0; i < radii.size(); ++i) {
            if (!advance(dir, r_prev, radii[i], 0, res))
                return res;
            if (slot[i] >= 0)
                grid_out[static_cast<std::size_t>(slot[i])] = psi_of(state_);
            r_prev = radii[i];
        }
        return res;
    }

private:
    bool unit_lambda() const { return lambda_ == 1.0; }

    cplx psi_of(cplx state) const { return unit_lambda() ? 1.0 - state : state; }

    // Returns false when the ray must stop (branch point or tracking failure).
    bool advance(cplx dir, double r0, double r1, int depth, RayResult &res)
    {
        const cplx z = r1 * dir;
        const cplx q = f_.inverse(z).q;
        cplx c1, c2;
        double disc_mag;
        if (unit_lambda()) {
            c1 = std::sqrt(q);
            c2 = -c1;
            disc_mag = std::abs(q);
        } else {
            const double l1 = 1.0 + lambda_;
            const cplx disc = l1 * l1 - 4.0 * lambda_ * (1.0 - q);
            const cplx s = std::sqrt(disc);
            c1 = (l1 - s) / (2.0 * lambda_);
            c2 = (l1 + s) / (2.0 * lambda_);
            disc_mag = std::abs(disc);
        }
        // lambda = 1: q -> 0 is a pole of f; only interior ones are genuine.
        const bool near_branch = unit_lambda() ? (disc_mag < branch_threshold && r1 < 0.999)
                                               : disc_mag < branch_threshold;
        if (near_branch) {
            res.branch_point = z;
            res.branch_value = disc_mag;
            return false;
        }
        const double d1 = std::abs(c1 - state_), d2 = std::abs(c2 - state_);
        const double sep = std::abs(c1 - c2);
        const double dmin = std::min(d1, d2);
        if (dmin > sep / 3.0) {
            if (depth >= 40) {
                res.failed = true;
                return false;
            }
            const double rm = 0.5 * (r0 + r1);
            return advance(dir, r0, rm, depth + 1, res) && advance(dir, rm, r1, depth + 1, res);
        }
        state_ = d1 <= d2 ? c1 : c2;
        const cplx psi = psi_of(state_);
        const double m = std::abs(psi);
        if (m > res.max_modulus) {
            res.max_modulus = m;
            res.max_point = z;
        }
        res.max_residual =
            std::max(res.max_residual, std::abs((1.0 - psi) * (1.0 - lambda_ * psi) - q));
        if (r1 <= 0.5)
            res.series_mismatch = std::max(res.series_mismatch, std::abs(psi - eval(psi_series_, z)));
        return true;
    }

    const AnalyticMap &f_;
    double lambda_;
    const TruncatedSeries &psi_series_;
    cplx state_{};
};

TruncatedSeries psi_series_of(const AnalyticMap &f, double lambda)
{
    const TruncatedSeries &q = f.inverse_series;
    const std::size_t N = q.order();
    const TruncatedSeries one = TruncatedSeries::constant(1.0, N);
    if (lambda == 1.0)
        return one - sqrt(q);
    const double l1 = 1.0 + lambda;
    const TruncatedSeries disc =
        TruncatedSeries::constant(l1 * l1, N) - (4.0 * lambda) * (one - q);
    return (1.0 / (2.0 * lambda)) * (TruncatedSeries::constant(l1, N) - sqrt(disc));
}

std::vector<double> ray_radii(const SamplingPlan &plan)
{
    std::vector<double> rs;
    for (int k = 1; k < 1024; ++k)
        rs.push_back(static_cast<double>(k) / 1024.0);
    rs.insert(rs.end(), plan.radii.begin(), plan.radii.end());
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    return rs;
}

} // namespace

SubordinationVerdict schwarz_recover(const AnalyticMap &f, double lambda, const SamplingPlan &plan)
{
    if (!(lambda > 0.0 && lambda <= 1.0))
        throw DomainError("schwarz_recover: lambda must lie in (0,1]");
    plan.validate();
    SubordinationVerdict verdict;
    const TruncatedSeries psi_series = psi_series_of(f, lambda);
    const std::vector<double> radii = ray_radii(plan);
    const std::size_t rays = plan.angles_per_circle;
    verdict.rays = rays;
    verdict.steps_per_ray = radii.size();

    std::vector<int> slot(radii.size(), -1);
    for (std::size_t c = 0; c < plan.radii.size(); ++c) {
        const auto it = std::lower_bound(radii.begin(), radii.end(), plan.radii[c]);
        slot[static_cast<std::size_t>(it - radii.begin())] = static_cast<int>(c);
    }
    std::vector<RayResult> results(rays);
    std::vector<std::vector<cplx>> ray_grid(rays, std::vector<cplx>(plan.radii.size()));
    parallel_for(rays, [&](std::size_t k) {
        RayTracker tracker(f, lambda, psi_series);
        results[k] = tracker.run(plan.angle(k), radii, slot, ray_grid[k]);
    });

    std::optional<std::size_t> branch_ray;
    bool failed = false;
    for (std::size_t k = 0; k < rays; ++k) {
        const RayResult &r = results[k];
        if (r.branch_point && !branch_ray)
            branch_ray = k;
        failed = failed || r.failed;
        if (r.max_modulus > verdict.max_modulus) {
            verdict.max_modulus = r.max_modulus;
            verdict.max_modulus_point = r.max_point;
        }
        verdict.max_residual = std::max(verdict.max_residual, r.max_residual);
        verdict.series_mismatch = std::max(verdict.series_mismatch, r.series_mismatch);
    }

    if (!branch_ray && !failed) {
        verdict.psi_on_grid.resize(plan.size());
        for (std::size_t k = 0; k < rays; ++k)
            for (std::size_t c = 0; c < plan.radii.size(); ++c)
                verdict.psi_on_grid[c * rays + k] = ray_grid[k][c];
    }
    if (branch_ray) {
        verdict.status = SubordinationStatus::NOT_SUBORDINATE;
        verdict.witness = WitnessKind::branch_point;
        verdict.witness_point = *results[*branch_ray].branch_point;
        verdict.witness_value = results[*branch_ray].branch_value;
        verdict.diagnostics.push_back("discriminant vanishes inside the disk");
        return verdict;
    }
    if (verdict.max_modulus > 1.0 + modulus_slack) {
        verdict.status = SubordinationStatus::NOT_SUBORDINATE;
        verdict.witness = WitnessKind::modulus_excess;
        verdict.witness_point = verdict.max_modulus_point;
        verdict.witness_value = verdict.max_modulus;
        verdict.diagnostics.push_back("recovered psi leaves the closed unit disk");
        return verdict;
    }
    if (failed) {
        verdict.tracking_failed = true;
        verdict.diagnostics.push_back("branch tracking failed to separate the two roots");
        return verdict;
    }
    if (verdict.max_residual > residual_tolerance || verdict.series_mismatch > residual_tolerance) {
        verdict.diagnostics.push_back("composition residual or series mismatch above 1e-8");
        return verdict;
    }

    if (lambda < 1.0) {
        // The target is univalent on the closed disk, so subordination forces
        // the image of |z| = 0.9 inside the image of the unit circle.
        std::vector<cplx> target(4096);
        for (std::size_t k = 0; k < target.size(); ++k) {
            const cplx w = unimodular(two_pi * static_cast<double>(k) / 4096.0);
            target[k] = (1.0 - w) * (1.0 - lambda * w);
        }
        for (std::size_t k = 0; k < 512; ++k) {
            const cplx z = std::polar(0.9, two_pi * static_cast<double>(k) / 512.0);
            const cplx q = f.inverse(z).q;
            if (winding_containment(target, q) == Containment::OUTSIDE) {
                verdict.status = SubordinationStatus::NOT_SUBORDINATE;
                verdict.witness = WitnessKind::containment_violation;
                verdict.witness_point = z;
                verdict.witness_value = std::abs(q);
                verdict.diagnostics.push_back("z/f on |z|=0.9 leaves the target region");
                return verdict;
            }
        }
    }
    verdict.status = SubordinationStatus::SUBORDINATE;
    verdict.witness = WitnessKind::schwarz_series;
    verdict.schwarz_series = psi_series;
    return verdict;
}

std::vector<cplx> boundary_curve(const AnalyticMap &f, double r, std::size_t n)
{
    if (!(r > 0.0 && r < 1.0))
        throw DomainError("boundary_curve: r must lie in (0,1)");
    if (n < 3)
        throw DomainError("boundary_curve: need at least 3 samples");
    std::vector<cplx> pts(n);
    for (std::size_t k = 0; k < n; ++k)
        pts[k] = f(std::polar(r, two_pi * static_cast<double>(k) / static_cast<double>(n)));
    return pts;
}

namespace {

double segment_distance(cplx a, cplx b, cplx w)
{
    const cplx ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0)
        return std::abs(w - a);
    const double t = std::clamp(((w - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(w - (a + t * ab));
}

} // namespace

int winding_number(std::span<const cplx> curve, cplx w)
{
    if (curve.size() < 3)
        throw DomainError("winding_number: curve needs at least 3 points");
    double total = 0.0;
    for (std::size_t k = 0; k < curve.size(); ++k) {
        const cplx a = curve[k] - w;
        const cplx b = curve[(k + 1) % curve.size()] - w;
        total += std::arg(b / a);
    }
    return static_cast<int>(std::lround(total / two_pi));
}

Containment winding_containment(std::span<const cplx> curve, cplx w)
{
    if (curve.size() < 3)
        throw DomainError("winding_containment: curve needs at least 3 points");
    for (std::size_t k = 0; k < curve.size(); ++k)
        if (segment_distance(curve[k], curve[(k + 1) % curve.size()], w) < 1e-9)
            return Containment::ON_BOUNDARY;
    return winding_number(curve, w) != 0 ? Containment::INSIDE : Containment::OUTSIDE;
}

} // namespace schlicht
