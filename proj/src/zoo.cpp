#include "schlicht/zoo.hpp"

#include <algorithm>
#include <cmath>

#include "schlicht/scalars.hpp"

namespace schlicht {

namespace {

void require_lambda_closed(double lambda, const char *who)
{
    if (!(lambda > 0.0 && lambda <= 1.0))
        throw DomainError(std::string(who) + ": lambda must lie in (0,1]");
}

void require_lambda_open(double lambda, const char *who)
{
    if (!(lambda > 0.0 && lambda < 1.0))
        throw DomainError(std::string(who) + ": lambda must lie in (0,1)");
}

InverseValue polynomial_inverse(const TruncatedSeries &q, const TruncatedSeries &dq, cplx z)
{
    return {eval(q, z), eval(dq, z)};
}

} // namespace

InverseValue AnalyticMap::inverse(cplx z) const
{
    if (inverse_fn)
        return inverse_fn(z);
    return {eval(inverse_series, z), eval(differentiate(inverse_series), z)};
}

cplx AnalyticMap::operator()(cplx z) const
{
    if (z == cplx{})
        return {};
    const InverseValue iv = inverse(z);
    if (std::abs(iv.q) < pole_threshold)
        throw SingularPoint(name + ": pole of f", z);
    return z / iv.q;
}

cplx AnalyticMap::derivative(cplx z) const
{
    const InverseValue iv = inverse(z);
    if (std::abs(iv.q) < pole_threshold)
        throw SingularPoint(name + ": pole of f", z);
    return (iv.q - z * iv.dq) / (iv.q * iv.q);
}

AnalyticMap make_from_inverse_polynomial(std::string name, double lambda,
                                         const std::vector<cplx> &q_coeffs, std::size_t order,
                                         std::function<InverseValue(cplx)> inverse_fn)
{
    if (q_coeffs.empty() || q_coeffs.size() > order + 1)
        throw DomainError(name + ": polynomial degree exceeds truncation order");
    std::vector<cplx> c(order + 1);
    std::copy(q_coeffs.begin(), q_coeffs.end(), c.begin());
    AnalyticMap f;
    f.name = std::move(name);
    f.lambda = lambda;
    f.inverse_series = TruncatedSeries(std::move(c));
    f.series = reciprocal(f.inverse_series);
    f.a2 = -f.inverse_series[1];
    if (inverse_fn) {
        f.inverse_fn = std::move(inverse_fn);
    } else {
        const TruncatedSeries q = f.inverse_series;
        const TruncatedSeries dq = differentiate(q);
        f.inverse_fn = [q, dq](cplx z) { return polynomial_inverse(q, dq, z); };
    }
    return f;
}

AnalyticMap make_identity(std::size_t order)
{
    AnalyticMap f = make_from_inverse_polynomial("identity", 1.0, {1.0}, order,
                                                 [](cplx) { return InverseValue{1.0, 0.0}; });
    f.omega = schwarz_polynomial(SchwarzRole::omega, {0.0}, order, "0");
    return f;
}

AnalyticMap make_f_theta(double lambda, double theta, std::size_t order)
{
    require_lambda_closed(lambda, "make_f_theta");
    const cplx e = unimodular(theta);
    AnalyticMap f = make_from_inverse_polynomial(
        "f_theta", lambda, {1.0, -(1.0 + lambda) * e, lambda * e * e}, order, [lambda, e](cplx z) {
            const cplx w = e * z;
            // (1 - w)(1 - lambda w)
            return InverseValue{(1.0 - w) * (1.0 - lambda * w),
                                -e * (1.0 - lambda * w) - lambda * e * (1.0 - w)};
        });
    f.params["theta"] = theta;
    // lambda e^{2i theta} z^2 = lambda z \int_0^z e^{2i theta} dt
    f.omega = schwarz_polynomial(SchwarzRole::omega, {e * e}, order, "e^{2i theta}");
    return f;
}

AnalyticMap make_g_threefold(std::size_t order)
{
    if (order < 3)
        throw DomainError("make_g_threefold: order must be at least 3");
    AnalyticMap f = make_from_inverse_polynomial("g", 1.0, {1.0, 0.0, 0.0, 0.5}, order,
                                                 [](cplx z) {
                                                     return InverseValue{1.0 + 0.5 * z * z * z,
                                                                         1.5 * z * z};
                                                 });
    f.omega = schwarz_polynomial(SchwarzRole::omega, {0.0, 1.0}, order, "z");
    return f;
}

AnalyticMap make_example32(double lambda, int k, std::size_t order)
{
    require_lambda_open(lambda, "make_example32");
    if (k < 2)
        throw DomainError("make_example32: k must be at least 2");
    if (order < static_cast<std::size_t>(k) + 1)
        throw DomainError("make_example32: order must be at least k+1");
    const double c = lambda / k;
    std::vector<cplx> q(static_cast<std::size_t>(k) + 2);
    q[0] = 1.0;
    q[1] = -(1.0 + c);
    q[static_cast<std::size_t>(k) + 1] = c;
    // Closed form keeps the factored shape (1 - z)(1 - c z sum_{nu<k} z^nu).
    AnalyticMap f = make_from_inverse_polynomial("example32", lambda, q, order, [c, k](cplx z) {
        cplx s{}, ds{};
        cplx zp{1.0};
        for (int nu = 0; nu < k; ++nu) {
            // s = sum z^{nu+1}, ds = sum (nu+1) z^nu
            ds += static_cast<double>(nu + 1) * zp;
            zp *= z;
            s += zp;
        }
        const cplx inner = 1.0 - c * s;
        return InverseValue{(1.0 - z) * inner, -inner - (1.0 - z) * c * ds};
    });
    f.params["k"] = static_cast<double>(k);
    // c z^{k+1} = lambda z \int_0^z t^{k-1} dt
    std::vector<cplx> mono(static_cast<std::size_t>(k));
    mono.back() = 1.0;
    f.omega = schwarz_polynomial(SchwarzRole::omega, mono, order,
                                 "z^" + std::to_string(k - 1));
    return f;
}

AnalyticMap make_from_omega(double lambda, cplx a2, const SchwarzCandidate &omega)
{
    require_lambda_closed(lambda, "make_from_omega");
    if (omega.role != SchwarzRole::omega)
        throw DomainError("make_from_omega: candidate must have role omega");
    const std::size_t N = omega.series.order();
    const TruncatedSeries one = TruncatedSeries::constant(1.0, N);
    const TruncatedSeries lin = TruncatedSeries::monomial(-a2, 1, N);
    const TruncatedSeries tail = lambda * shift_up(integrate0(omega.series));
    AnalyticMap f;
    f.name = "omega";
    f.lambda = lambda;
    f.a2 = a2;
    f.inverse_series = one + lin + tail;
    if (std::abs(f.inverse_series[0] - 1.0) > 1e-15)
        throw NumericalFailure("make_from_omega: constant term of z/f is not 1");
    f.series = reciprocal(f.inverse_series);
    f.omega = omega;
    f.inverse_fn = [lambda, a2, om = omega](cplx z) {
        const cplx prim = om.primitive(z);
        return InverseValue{1.0 - a2 * z + lambda * z * prim,
                            -a2 + lambda * prim + lambda * z * om.value(z)};
    };
    return f;
}

AnalyticMap make_f_a(double lambda, double a, std::size_t order)
{
    require_lambda_open(lambda, "make_f_a");
    if (!(a > 0.0 && a < 1.0))
        throw DomainError("make_f_a: a must lie in (0,1)");
    AnalyticMap f = make_from_omega(lambda, 1.0 + lambda * v(a), schwarz_mobius(a, order));
    f.name = "f_a";
    f.params["a"] = a;
    const double va = v(a);
    // 1 - z (1 + lambda (v(a) - Omega(z))) with Omega the primitive from 0.
    f.inverse_fn = [lambda, a, va](cplx z) {
        const cplx tail = va - mobius_primitive(a, z);
        const cplx h = (z + a) / (1.0 + a * z);
        return InverseValue{1.0 - z * (1.0 + lambda * tail), -(1.0 + lambda * tail) + lambda * z * h};
    };
    return f;
}

AnalyticMap make_omega1_az2(double lambda, cplx a, std::size_t order)
{
    require_lambda_closed(lambda, "make_omega1_az2");
    if (std::abs(a) > 1.0 + 1e-15)
        throw DomainError("make_omega1_az2: |a| must not exceed 1");
    AnalyticMap f = make_from_omega(lambda, 0.0, schwarz_polynomial(SchwarzRole::omega, {a}, order));
    f.name = "omega1_az2";
    f.params["a"] = a;
    f.inverse_fn = [lambda, a](cplx z) {
        return InverseValue{1.0 + lambda * a * z * z, 2.0 * lambda * a * z};
    };
    return f;
}

const std::vector<std::string> &sz_members()
{
    static const std::vector<std::string> members = {
        "z",         "z/(1-z)^2", "z/(1+z)^2",   "z/(1-z)",    "z/(1+z)",
        "z/(1-z^2)", "z/(1+z^2)", "z/(1-z+z^2)", "z/(1+z+z^2)"};
    return members;
}

AnalyticMap make_sz(const std::string &member, std::size_t order)
{
    static const std::map<std::string, std::vector<cplx>> table = {
        {"z", {1.0}},
        {"z/(1-z)^2", {1.0, -2.0, 1.0}},
        {"z/(1+z)^2", {1.0, 2.0, 1.0}},
        {"z/(1-z)", {1.0, -1.0}},
        {"z/(1+z)", {1.0, 1.0}},
        {"z/(1-z^2)", {1.0, 0.0, -1.0}},
        {"z/(1+z^2)", {1.0, 0.0, 1.0}},
        {"z/(1-z+z^2)", {1.0, -1.0, 1.0}},
        {"z/(1+z+z^2)", {1.0, 1.0, 1.0}},
    };
    const auto it = table.find(member);
    if (it == table.end())
        throw DomainError("make_sz: unknown member '" + member + "'");
    AnalyticMap f = make_from_inverse_polynomial(member, 1.0, it->second, order);
    // z/f = 1 + c1 z + c2 z^2 corresponds to the constant omega = c2.
    const cplx c2 = it->second.size() > 2 ? it->second[2] : cplx{};
    f.omega = schwarz_polynomial(SchwarzRole::omega, {c2}, order);
    return f;
}

AnalyticMap rotate(const AnalyticMap &f, double alpha)
{
    const cplx rho = unimodular(alpha);
    AnalyticMap g = f;
    g.name = f.name + "_rotated";
    g.params["rotation"] = alpha;
    g.a2 = rho * f.a2;
    std::vector<cplx> s(f.order() + 1), q(f.order() + 1);
    cplx pw{1.0};
    for (std::size_t n = 0; n <= f.order(); ++n) {
        s[n] = f.series[n] * pw;
        q[n] = f.inverse_series[n] * pw;
        pw *= rho;
    }
    g.series = TruncatedSeries(std::move(s));
    g.inverse_series = TruncatedSeries(std::move(q));
    g.inverse_fn = [inner = f.inverse_fn, rho](cplx z) {
        const InverseValue iv = inner(rho * z);
        return InverseValue{iv.q, rho * iv.dq};
    };
    if (f.omega) {
        // omega_g(s) = rho^2 omega(rho s)
        SchwarzCandidate om = *f.omega;
        std::vector<cplx> c(om.series.order() + 1);
        cplx p = rho * rho;
        for (std::size_t n = 0; n < c.size(); ++n) {
            c[n] = om.series[n] * p;
            p *= rho;
        }
        om.series = TruncatedSeries(std::move(c));
        const SchwarzCandidate base = *f.omega;
        om.value_fn = [base, rho](cplx z) { return rho * rho * base.value(rho * z); };
        om.derivative_fn = [base, rho](cplx z) { return rho * rho * rho * base.derivative(rho * z); };
        om.primitive_fn = [base, rho](cplx z) { return rho * base.primitive(rho * z); };
        g.omega = std::move(om);
    }
    return g;
}

double invariant_defect(const AnalyticMap &f)
{
    double d = std::abs(f.series[0] - 1.0);
    const TruncatedSeries prod = mul(f.series, f.inverse_series);
    for (std::size_t n = 0; n <= prod.order(); ++n)
        d = std::max(d, std::abs(prod[n] - (n == 0 ? 1.0 : 0.0)));
    d = std::max(d, std::abs(f.a2 - f.series[1]));
    return d;
}

} // namespace schlicht
