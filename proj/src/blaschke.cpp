#include "schlicht/blaschke.hpp"

#include <cmath>
#include <string>

namespace schlicht {

namespace {

// 2 sin^2(x/2) = 1 - cos x without cancellation.
double one_minus_cos(double x)
{
    const double s = std::sin(0.5 * x);
    return 2.0 * s * s;
}

struct FactorParts {
    cplx numerator;   // e^{-i theta}(a - z)
    cplx denominator; // 1 - conj(a) z
};

// z = rho e^{i phi} with one_minus_rho = 1 - rho supplied separately.
FactorParts factor_parts(const BlaschkeZero &a, double rho, double one_minus_rho, double phi)
{
    const double r = a.modulus();
    const double d = phi - a.theta;
    const double sd = std::sin(d);
    const double omc = one_minus_cos(d);
    const cplx num{one_minus_rho - a.one_minus_r + rho * omc, -rho * sd};
    const double one_minus_r_rho = a.one_minus_r + r * one_minus_rho;
    const cplx den{one_minus_r_rho + r * rho * omc, -r * rho * sd};
    return {num, den};
}

} // namespace

double BlaschkeZero::dist_sq_to_unimodular(double phi) const
{
    const double r = modulus();
    const double s = std::sin(0.5 * (phi - theta));
    return one_minus_r * one_minus_r + 4.0 * r * s * s;
}

BlaschkeSpec BlaschkeSpec::b1(std::size_t factors)
{
    BlaschkeSpec spec;
    spec.kind = BlaschkeKind::B1;
    for (std::size_t n = 1; n <= factors; ++n)
        spec.zeros.push_back(spec.zero(n));
    return spec;
}

BlaschkeSpec BlaschkeSpec::b2(std::size_t factors)
{
    BlaschkeSpec spec;
    spec.kind = BlaschkeKind::B2;
    for (std::size_t n = 1; n <= factors; ++n)
        spec.zeros.push_back(spec.zero(n));
    return spec;
}

BlaschkeSpec BlaschkeSpec::custom(const std::vector<cplx> &zeros)
{
    BlaschkeSpec spec;
    spec.kind = BlaschkeKind::custom;
    for (const cplx &a : zeros) {
        const double m = std::abs(a);
        if (!(m > 0.0 && m < 1.0))
            throw DomainError("BlaschkeSpec::custom: zeros must satisfy 0 < |a| < 1");
        spec.zeros.push_back({1.0 - m, std::arg(a)});
    }
    return spec;
}

BlaschkeZero BlaschkeSpec::zero(std::size_t n) const
{
    if (n == 0)
        throw DomainError("BlaschkeSpec::zero: index is 1-based");
    const int k = static_cast<int>(n);
    switch (kind) {
    case BlaschkeKind::B1: return {std::ldexp(1.0, -4 * k), std::ldexp(1.0, -k)};
    case BlaschkeKind::B2: return {std::ldexp(1.0, -2 * k), std::ldexp(1.0, -k)};
    case BlaschkeKind::custom: break;
    }
    if (n > zeros.size())
        throw DomainError("BlaschkeSpec::zero: custom spec has only " +
                          std::to_string(zeros.size()) + " zeros");
    return zeros[n - 1];
}

double BlaschkeSpec::blaschke_sum() const
{
    double s = 0.0;
    for (const auto &a : zeros)
        s += a.one_minus_r;
    return s;
}

double BlaschkeSpec::tail_bound() const
{
    const int n = static_cast<int>(zeros.size());
    switch (kind) {
    case BlaschkeKind::B1: return std::ldexp(1.0, -4 * n) / 15.0; // sum_{m>n} 16^{-m}
    case BlaschkeKind::B2: return std::ldexp(1.0, -2 * n) / 3.0;  // sum_{m>n} 4^{-m}
    case BlaschkeKind::custom: return 0.0;
    }
    return 0.0;
}

cplx blaschke_eval(const BlaschkeSpec &spec, cplx z)
{
    const double rho = std::abs(z);
    if (rho == 0.0)
        return {};
    const double phi = std::arg(z);
    const double omr = 1.0 - rho;
    cplx b = z;
    for (const auto &a : spec.zeros) {
        const FactorParts p = factor_parts(a, rho, omr, phi);
        b *= p.numerator / p.denominator;
    }
    return b;
}

double blaschke_defect(const BlaschkeSpec &spec, cplx z)
{
    const double rho = std::abs(z);
    if (rho == 0.0)
        return 1.0;
    const double phi = std::arg(z);
    const double omr = 1.0 - rho;
    const double one_minus_rho_sq = omr * (1.0 + rho);
    // log |B|^2 = log rho^2 + sum log(1 - s_n),
    // s_n = (1 - |a|^2)(1 - rho^2)/|1 - conj(a) z|^2.
    double log_mod_sq = std::log1p(-one_minus_rho_sq);
    for (const auto &a : spec.zeros) {
        const FactorParts p = factor_parts(a, rho, omr, phi);
        const double one_minus_a_sq = a.one_minus_r * (2.0 - a.one_minus_r);
        const double s = one_minus_a_sq * one_minus_rho_sq / std::norm(p.denominator);
        log_mod_sq += std::log1p(-std::min(s, 1.0));
    }
    const double defect_sq = -std::expm1(log_mod_sq);
    const double mod = std::sqrt(1.0 - defect_sq);
    return defect_sq / (1.0 + mod);
}

SchwarzCandidate blaschke_candidate(const BlaschkeSpec &spec, std::size_t order)
{
    TruncatedSeries prod = TruncatedSeries::monomial(1.0, 1, order);
    for (const auto &a : spec.zeros) {
        // e^{-i theta}(a - z) * sum (conj(a) z)^n
        const cplx ap = a.point();
        const cplx phase = unimodular(-a.theta);
        std::vector<cplx> geo(order + 1);
        cplx pw{1.0};
        for (std::size_t n = 0; n <= order; ++n) {
            geo[n] = pw;
            pw *= std::conj(ap);
        }
        const TruncatedSeries lin({phase * ap, -phase}, order);
        prod = mul(prod, mul(lin, TruncatedSeries(std::move(geo))));
    }
    SchwarzCandidate s{SchwarzRole::phi, "blaschke", std::move(prod), {}, {}, {}};
    s.value_fn = [spec](cplx z) { return blaschke_eval(spec, z); };
    return s;
}

double zero_inequality_margin(const BlaschkeSpec &spec, std::size_t n)
{
    const BlaschkeZero a = spec.zero(n);
    const double scale = std::ldexp(1.0, -static_cast<int>(n));
    switch (spec.kind) {
    case BlaschkeKind::B1:
        return std::sqrt(a.dist_sq_to_unimodular(0.0)) - std::sqrt(15.0) / two_pi * scale;
    case BlaschkeKind::B2: {
        // |1 - a|^2 = m^2 + 4 r sin^2 x with x = theta/2 and 4 x^2 = theta^2.
        // With theta^2 = 4^{-n} the margin is m (4^{-n} - m) + 4 r (x - sin x)(x + sin x).
        const double m = a.one_minus_r;
        const double x = 0.5 * a.theta;
        double x_minus_sin;
        if (x < 1e-2) {
            const double x2 = x * x;
            x_minus_sin = x * x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0));
        } else {
            x_minus_sin = x - std::sin(x);
        }
        return m * (scale * scale - m) + 4.0 * a.modulus() * x_minus_sin * (x + std::sin(x));
    }
    case BlaschkeKind::custom: break;
    }
    throw DomainError("zero_inequality_margin: only defined for B1 and B2");
}

} // namespace schlicht
