#ifndef SCHLICHT_ZOO_HPP
#define SCHLICHT_ZOO_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schlicht/common.hpp"
#include "schlicht/schwarz.hpp"
#include "schlicht/tps.hpp"

namespace schlicht {

/// q = z/f(z) and q'(z).
struct InverseValue {
    cplx q;
    cplx dq;
};

/// A normalized analytic map f(z) = z + a_2 z^2 + ... on the unit disk.
///
/// Every map carries two independent descriptions: a closed-form rule for
/// q = z/f and its derivative, and the Maclaurin series of f/z and z/f. All
/// pointwise quantities (f, f', U_f) are derived from q so that poles of f
/// appear as zeros of q rather than overflow.
struct AnalyticMap {
    std::string name;
    double lambda = 1.0;
    cplx a2{};
    std::map<std::string, cplx> params;
    TruncatedSeries series;         // f(z)/z
    TruncatedSeries inverse_series; // z/f(z)
    std::function<InverseValue(cplx)> inverse_fn;
    // omega in z/f = 1 - a2 z + lambda z \int_0^z omega, when known.
    std::optional<SchwarzCandidate> omega;

    std::size_t order() const { return series.order(); }
    InverseValue inverse(cplx z) const;
    cplx operator()(cplx z) const;
    cplx derivative(cplx z) const;
    // Taylor coefficient a_n (n >= 1) of f.
    cplx coefficient(std::size_t n) const { return series[n - 1]; }
};

/// |z/f| below this is treated as a pole of f.
inline constexpr double pole_threshold = 1e-13;

// Builds inverse_series/series from polynomial coefficients of z/f; closed
// form is the same polynomial unless inverse_fn is supplied.
AnalyticMap make_from_inverse_polynomial(std::string name, double lambda,
                                         const std::vector<cplx> &q_coeffs,
                                         std::size_t order = default_order,
                                         std::function<InverseValue(cplx)> inverse_fn = {});

AnalyticMap make_identity(std::size_t order = default_order);

/// z / (1 - (1+lambda) e^{i theta} z + lambda e^{2 i theta} z^2).
AnalyticMap make_f_theta(double lambda, double theta, std::size_t order = default_order);

/// z / (1 + z^3/2).
AnalyticMap make_g_threefold(std::size_t order = default_order);

/// z/f = (1 - z)(1 - (lambda z/k) sum_{nu<k} z^nu), 0 < lambda < 1, k >= 2.
AnalyticMap make_example32(double lambda, int k, std::size_t order = default_order);

/// z/f = 1 - z (1 + lambda \int_z^1 (t+a)/(1+at) dt), 0 < lambda, a < 1.
AnalyticMap make_f_a(double lambda, double a, std::size_t order = default_order);

/// z/f = 1 - a2 z + lambda z \int_0^z omega. Order follows omega.series.
AnalyticMap make_from_omega(double lambda, cplx a2, const SchwarzCandidate &omega);

/// z/f = 1 + lambda a z^2 (a2 = 0, omega_1 = a z^2), |a| <= 1.
AnalyticMap make_omega1_az2(double lambda, cplx a, std::size_t order = default_order);

/// Members of the integer-coefficient set: "z", "z/(1-z)^2", "z/(1+z)^2",
/// "z/(1-z)", "z/(1+z)", "z/(1-z^2)", "z/(1+z^2)", "z/(1-z+z^2)", "z/(1+z+z^2)".
AnalyticMap make_sz(const std::string &member, std::size_t order = default_order);
const std::vector<std::string> &sz_members();

/// conj(rho) f(rho z), rho = e^{i alpha}.
AnalyticMap rotate(const AnalyticMap &f, double alpha);

/// Largest defect among the normalization invariants: |series_0 - 1|,
/// |series*inverse_series - 1| coefficientwise, |a2 - series_1|.
double invariant_defect(const AnalyticMap &f);

} // namespace schlicht

#endif
