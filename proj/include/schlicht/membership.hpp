#ifndef SCHLICHT_MEMBERSHIP_HPP
#define SCHLICHT_MEMBERSHIP_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schlicht/blaschke.hpp"
#include "schlicht/sampling.hpp"
#include "schlicht/schwarz.hpp"
#include "schlicht/zoo.hpp"

namespace schlicht {

enum class Verdict { IN, OUT, UNDECIDED };
std::string_view to_string(Verdict v);

struct CircleSup {
    double r;
    double sup;
    cplx arg_max;
};

struct MembershipReport {
    double level = 0.0; // the lambda tested against; 0 for a bare supremum
    double sup_estimate = 0.0;
    cplx arg_max{};
    std::vector<CircleSup> per_circle_sup;
    Verdict verdict = Verdict::UNDECIDED;
    double margin = 0.0;
    std::optional<cplx> witness; // |U_f(witness)| >= level for OUT
    std::size_t vanishing_order = 0;
    double tail_estimate = 0.0;
    std::vector<cplx> skipped_points; // grid points on or next to a pole
    std::vector<std::string> notes;
};

/// U_f(z) = z/f - z (z/f)' - 1 from the closed form of z/f. Throws
/// SingularPoint when |z/f| < pole_threshold.
cplx u_functional(const AnalyticMap &f, cplx z);

/// Series of U_f built from inverse_series.
TruncatedSeries u_series(const AnalyticMap &f);

/// Grid supremum of |U_f|. Pole points are skipped and listed.
MembershipReport sup_abs_u(const AnalyticMap &f, const SamplingPlan &plan);

/// OUT: some grid point has |U_f| >= level (witness recorded).
/// IN: sup < level - tol, every circle obeys sup(r) <= level r^p + tol with p
/// the vanishing order of U_f at 0, and the extrapolated series tail keeps
/// the bound below level. Otherwise UNDECIDED. IN is a statement at the
/// plan's resolution, not a proof.
MembershipReport membership_verdict(const AnalyticMap &f, double level, const SamplingPlan &plan);

/// |-(1+l)(phi - z phi') + l phi (phi - 2 z phi')|: |U_f| for f/z = 1/((1-phi)(1-l phi)).
double l_phi(const SchwarzCandidate &phi, double lambda, cplx z);

enum class JuliaLimit { FINITE, DIVERGENT, UNDECIDED };
std::string_view to_string(JuliaLimit j);

struct JuliaOptions {
    double ceiling = 1e6;
    std::size_t window = 5;
    double stable_rel = 1e-3;
    // Increments per halving of 1 - r that shrink by less than this factor
    // across the whole window count as sustained (divergent) growth.
    double growth_ratio = 0.75;
};

struct JuliaEstimate {
    double r;
    double quotient;
};

struct JuliaReport {
    std::vector<JuliaEstimate> estimates;
    JuliaLimit classification = JuliaLimit::UNDECIDED;
    double limit = 0.0; // last estimate; the limit value when FINITE
};

/// Estimates (1 - |phi(r zeta)|)/(1 - r) along the radius through zeta.
/// `defect(z)` must return 1 - |phi(z)|.
JuliaReport julia_quotient(const std::function<double(cplx)> &defect, cplx zeta,
                           std::span<const double> radii, const JuliaOptions &options = {});

/// Convenience overload computing the defect as 1 - |phi(z)|.
JuliaReport julia_quotient_of(const std::function<cplx(cplx)> &phi, cplx zeta,
                              std::span<const double> radii, const JuliaOptions &options = {});

/// Partial sums of sum_n (1 - |a_n|)/|zeta - a_n|^2 over the first `terms` zeros.
std::vector<double> blaschke_gsum(const BlaschkeSpec &spec, cplx zeta, std::size_t terms);

} // namespace schlicht

#endif
