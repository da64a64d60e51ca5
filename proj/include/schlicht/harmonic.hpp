#ifndef SCHLICHT_HARMONIC_HPP
#define SCHLICHT_HARMONIC_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schlicht/geometry.hpp"
#include "schlicht/sampling.hpp"
#include "schlicht/schwarz.hpp"
#include "schlicht/zoo.hpp"

namespace schlicht {

/// A theorem hypothesis (a2 = 0, omega_F(0) = 0, lambda range) is violated.
class HypothesisError : public DomainError {
public:
    using DomainError::DomainError;
};

/// F = H + conj(G) with dilatation omega_F = G'/H'.
struct HarmonicMap {
    AnalyticMap H;
    TruncatedSeries G_series; // coefficient n belongs to z^n
    SchwarzCandidate dilatation;
    double lambda = 0.0;

    cplx G(cplx z) const;
    cplx G_prime(cplx z) const;
    cplx operator()(cplx z) const;
};

/// Throws HypothesisError when a2(H) != 0, omega_F(0) != 0 or |omega_F| > 1
/// somewhere on a coarse validation grid.
HarmonicMap build_harmonic(const AnalyticMap &H, const SchwarzCandidate &omega_F);

/// |H'(z)|^2 - |G'(z)|^2.
double jacobian(const HarmonicMap &F, cplx z);

enum class HarmonicTheorem { T42, T43 };
std::string_view to_string(HarmonicTheorem t);

struct HarmonicCertificate {
    HarmonicTheorem theorem = HarmonicTheorem::T42;
    double bound_used = 0.0;      // admissible sup of |omega_F|
    double sup_dilatation = 0.0;  // sampled sup of |omega_F|
    double grid_min_margin = 0.0; // min over the grid of the pointwise inequality
    double chain_min_margin = 0.0; // T42 only: min of M(z) - A(|z|, lambda)
    double min_jacobian = 0.0;
    CertStatus status = CertStatus::FAILED;
    std::size_t clamp_events = 0; // arcsin arguments clamped from (1, 1 + 1e-12]
    std::vector<std::string> notes;
};

/// Sense-preserving close-to-convex test with bound (1 - 2l - l^2)/(1 + l)^2
/// and the pointwise condition Re k > |omega_F k|, k = zH'/H. Requires
/// lambda in (0, sqrt2 - 1].
HarmonicCertificate certify_T42(const HarmonicMap &F, const SamplingPlan &plan,
                                std::optional<double> tolerance = std::nullopt);

/// Same with bound sqrt((1 - l^2)(1 - 4 l^2)^2) and the pointwise condition
/// arcsin|omega_F| + 3 arcsin(l r^2) <= pi/2. Requires lambda in (0, 1/2].
HarmonicCertificate certify_T43(const HarmonicMap &F, const SamplingPlan &plan,
                                std::optional<double> tolerance = std::nullopt);

} // namespace schlicht

#endif
