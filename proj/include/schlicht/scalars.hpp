#ifndef SCHLICHT_SCALARS_HPP
#define SCHLICHT_SCALARS_HPP

#include "schlicht/common.hpp"

// Closed-form scalar functions attached to the concrete examples: the a_3
// counterexample family, the harmonic-map radius bounds and the
// angular-derivative bounds.
namespace schlicht {

// \int_0^1 (t+a)/(1+at) dt, a in [0,1]; v(0) = 1/2.
double v(double a);
// Same integral by adaptive Gauss-Kronrod quadrature.
double v_quadrature(double a);
double w(double a);       // 2 v(a) - a
double w_prime(double a); // w'(0) = 1/3
double u(double a);       // 6a + 3a^2 - a^3 - 6(1+a) ln(1+a)
double u_prime(double a); // 6a - 3a^2 - 6 ln(1+a)
double delta();           // (3 - 4 ln 2)/(4 ln 2 - 2)

// Threshold (w(a) - 1)/(1 - v(a)^2): a_3 exceeds 1 + lambda + lambda^2 for
// all smaller lambda. Tends to delta() as a -> 1.
double lambda_threshold(double a);

// Third Taylor coefficient of f_a: 1 + lambda (2v - a) + lambda^2 v^2.
double a3_formula(double lambda, double a);
// Same with v supplied by the caller (e.g. from quadrature).
double a3_formula_with_v(double lambda, double a, double v_value);

// \int_0^z (t+a)/(1+at) dt on the principal branch, a in [0,1).
cplx mobius_primitive(double a, cplx z);

double A_bound(double r, double lambda);     // (1 - 2 l r^2 - l^2 r^4)/(1 + l r^2)^2
double B_bound(double r, double lambda);     // sqrt((1 - l^2 r^4)(1 - 4 l^2 r^4)^2)
double R_squared(double theta0, double lambda, double t);
double t_zero(double theta0, double lambda);
double lemma31_upper(double theta0, double lambda);
// Same two functions parameterised by cos(theta0) directly.
double t_zero_cos(double cos_theta0, double lambda);
double lemma31_upper_cos(double cos_theta0, double lambda);
double reN_boundary(double lambda, double theta); // Re N(e^{i theta})

} // namespace schlicht

#endif
