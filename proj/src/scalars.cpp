#include "schlicht/scalars.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace schlicht {

namespace {

constexpr double small_a = 0.05;

void require_unit_interval(double a, const char *who)
{
    if (!(a >= 0.0 && a <= 1.0))
        throw DomainError(std::string(who) + ": a must lie in [0,1]");
}

void require_lambda(double lambda, const char *who)
{
    if (!(lambda > 0.0 && lambda <= 1.0))
        throw DomainError(std::string(who) + ": lambda must lie in (0,1]");
}

void require_radius(double r, const char *who)
{
    if (!(r >= 0.0 && r <= 1.0))
        throw DomainError(std::string(who) + ": r must lie in [0,1]");
}

} // namespace

double v(double a)
{
    require_unit_interval(a, "v");
    if (a < small_a) {
        // 1/2 + sum 2(-1)^{k-1} a^k / (k(k+2)); the 1/a and log terms cancel here.
        double sum = 0.5;
        double pw = 1.0;
        for (int k = 1; k < 24; ++k) {
            pw *= a;
            sum += ((k % 2) ? 2.0 : -2.0) * pw / (k * (k + 2.0));
        }
        return sum;
    }
    return 1.0 / a - (1.0 - a * a) / (a * a) * std::log1p(a);
}

double v_quadrature(double a)
{
    require_unit_interval(a, "v_quadrature");
    auto integrand = [a](double t) { return (t + a) / (1.0 + a * t); };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, 1.0, 15,
                                                                         1e-15);
}

double w(double a) { return 2.0 * v(a) - a; }

double w_prime(double a)
{
    require_unit_interval(a, "w_prime");
    if (a < small_a) {
        // 4 sum_{n>=3} (-1)^{n-1} a^{n-3}/n - 1
        double sum = 0.0;
        double pw = 1.0;
        for (int n = 3; n < 28; ++n) {
            sum += ((n % 2) ? 1.0 : -1.0) * pw / n;
            pw *= a;
        }
        return 4.0 * sum - 1.0;
    }
    return 2.0 / a - 4.0 / (a * a) + 4.0 / (a * a * a) * std::log1p(a) - 1.0;
}

double u(double a)
{
    require_unit_interval(a, "u");
    return 6.0 * a + 3.0 * a * a - a * a * a - 6.0 * (1.0 + a) * std::log1p(a);
}

double u_prime(double a)
{
    require_unit_interval(a, "u_prime");
    return 6.0 * a - 3.0 * a * a - 6.0 * std::log1p(a);
}

double delta()
{
    const double ln2 = std::numbers::ln2;
    return (3.0 - 4.0 * ln2) / (4.0 * ln2 - 2.0);
}

double lambda_threshold(double a)
{
    const double va = v(a);
    return (w(a) - 1.0) / (1.0 - va * va);
}

double a3_formula_with_v(double lambda, double a, double v_value)
{
    return 1.0 + lambda * (2.0 * v_value - a) + lambda * lambda * v_value * v_value;
}

double a3_formula(double lambda, double a) { return a3_formula_with_v(lambda, a, v(a)); }

cplx mobius_primitive(double a, cplx z)
{
    if (!(a >= 0.0 && a < 1.0))
        throw DomainError("mobius_primitive: a must lie in [0,1)");
    if (a < small_a) {
        // a z + (1 - a^2) sum_{k>=1} (-a)^{k-1} z^{k+1}/(k+1)
        cplx sum{};
        cplx zp = z * z;
        double pw = 1.0;
        for (int k = 1; k < 40; ++k) {
            const cplx term = pw * zp / (k + 1.0);
            sum += term;
            if (std::abs(term) < 1e-18)
                break;
            pw *= -a;
            zp *= z;
        }
        return a * z + (1.0 - a * a) * sum;
    }
    return z / a + ((a * a - 1.0) / (a * a)) * std::log(1.0 + a * z);
}

double A_bound(double r, double lambda)
{
    require_radius(r, "A_bound");
    require_lambda(lambda, "A_bound");
    const double s = lambda * r * r;
    return (1.0 - 2.0 * s - s * s) / ((1.0 + s) * (1.0 + s));
}

double B_bound(double r, double lambda)
{
    require_radius(r, "B_bound");
    require_lambda(lambda, "B_bound");
    const double s2 = lambda * lambda * r * r * r * r;
    const double g = 1.0 - 4.0 * s2;
    return std::sqrt((1.0 - s2) * g * g);
}

double R_squared(double theta0, double lambda, double t)
{
    require_lambda(lambda, "R_squared");
    if (!(t >= 0.0))
        throw DomainError("R_squared: t must be nonnegative");
    const double l1 = 1.0 + lambda;
    const double s = 2.0 * t + 1.0;
    return l1 * l1 * t * t + lambda * lambda * s * s - 2.0 * t * s * lambda * l1 * std::cos(theta0);
}

namespace {

double lemma31_denominator(double c, double lambda)
{
    return 5.0 * lambda * lambda + 2.0 * lambda + 1.0 - 4.0 * lambda * (1.0 + lambda) * c;
}

} // namespace

double t_zero_cos(double c, double lambda)
{
    require_lambda(lambda, "t_zero");
    // (1 + l) c - 2 l written around the threshold 2l/(1+l) so that it
    // vanishes exactly when c is that threshold.
    const double threshold = 2.0 * lambda / (1.0 + lambda);
    const double denominator = lemma31_denominator(c, lambda);
    if (denominator == 0.0)
        throw DomainError("t_zero: undefined at lambda = 1, cos(theta0) = 1");
    return lambda * (1.0 + lambda) * (c - threshold) / denominator;
}

double lemma31_upper_cos(double c, double lambda)
{
    require_lambda(lambda, "lemma31_upper");
    return (1.0 + lambda) * (1.0 + lambda - 2.0 * lambda * c) / lemma31_denominator(c, lambda);
}

double t_zero(double theta0, double lambda) { return t_zero_cos(std::cos(theta0), lambda); }

double lemma31_upper(double theta0, double lambda)
{
    return lemma31_upper_cos(std::cos(theta0), lambda);
}

double reN_boundary(double lambda, double theta)
{
    require_lambda(lambda, "reN_boundary");
    const double k = lambda * (1.0 - lambda);
    return 1.0 - lambda * lambda * lambda - 2.0 * k * std::cos(theta) - k * std::cos(2.0 * theta);
}

} // namespace schlicht
