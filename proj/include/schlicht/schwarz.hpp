#ifndef SCHLICHT_SCHWARZ_HPP
#define SCHLICHT_SCHWARZ_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "schlicht/common.hpp"
#include "schlicht/sampling.hpp"
#include "schlicht/tps.hpp"

namespace schlicht {

// Which slot of the representations the function fills:
//   omega  : z/f = 1 - a2 z + lambda z \int_0^z omega(t) dt   (omega in B)
//   omega1 : z/f = 1 - a2 z + lambda omega1(z)               (omega1(0) = omega1'(0) = 0)
//   phi    : f/z = 1 / ((1 - phi)(1 - lambda phi))            (phi(0) = 0)
enum class SchwarzRole { omega, omega1, phi };

std::string_view to_string(SchwarzRole role);

/// A bounded analytic self-map candidate with a Maclaurin series and optional
/// closed forms. Missing closed forms fall back to the series.
struct SchwarzCandidate {
    SchwarzRole role = SchwarzRole::omega;
    std::string tag;
    TruncatedSeries series;
    std::function<cplx(cplx)> value_fn;
    std::function<cplx(cplx)> derivative_fn;
    std::function<cplx(cplx)> primitive_fn; // \int_0^z

    cplx value(cplx z) const;
    cplx derivative(cplx z) const;
    cplx primitive(cplx z) const;
};

SchwarzCandidate schwarz_polynomial(SchwarzRole role, const std::vector<cplx> &coeffs,
                                    std::size_t order = default_order, std::string tag = {});

/// (z + a)/(1 + a z), 0 < a < 1: the integrand of the a_3 counterexample.
SchwarzCandidate schwarz_mobius(double a, std::size_t order = default_order);

/// Parses the formula grammar used in function descriptors: a sum of
/// monomials "c*z^n" (c real or "(re,im)", "*" and "^n" optional), or the tag
/// "(z+a)/(1+az)" which needs the parameter a.
SchwarzCandidate schwarz_from_formula(std::string_view formula, SchwarzRole role,
                                      std::size_t order = default_order, double a = 0.0);

struct SchwarzCheck {
    bool ok = true;
    double max_modulus = 0.0;
    cplx worst_point{};
    std::string reason;
};

/// Checks the role's vanishing conditions at 0 and |value| <= 1 + 1e-12 on
/// the plan's grid.
SchwarzCheck validate(const SchwarzCandidate &candidate, const SamplingPlan &plan);

} // namespace schlicht

#endif
