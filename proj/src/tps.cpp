#include "schlicht/tps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace schlicht {

namespace {

constexpr double singular_threshold = 1e-14;

void require_finite(const std::vector<cplx> &coeffs)
{
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        if (!std::isfinite(coeffs[n].real()) || !std::isfinite(coeffs[n].imag()))
            throw DomainError("TruncatedSeries: non-finite coefficient at index " +
                              std::to_string(n));
    }
}

void require_same_order(const TruncatedSeries &a, const TruncatedSeries &b, const char *op)
{
    if (a.order() != b.order())
        throw OrderMismatch(std::string(op) + ": order mismatch (" + std::to_string(a.order()) +
                            " vs " + std::to_string(b.order()) + ")");
}

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw DomainError("TruncatedSeries: need at least one coefficient");
    require_finite(coeffs_);
}

TruncatedSeries::TruncatedSeries(std::initializer_list<cplx> coeffs, std::size_t order)
    : coeffs_(order + 1)
{
    if (coeffs.size() > order + 1)
        throw DomainError("TruncatedSeries: more coefficients than order allows");
    std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
    require_finite(coeffs_);
}

TruncatedSeries TruncatedSeries::constant(cplx c, std::size_t order)
{
    return monomial(c, 0, order);
}

TruncatedSeries TruncatedSeries::monomial(cplx c, std::size_t power, std::size_t order)
{
    std::vector<cplx> v(order + 1);
    if (power <= order)
        v[power] = c;
    return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::geometric(std::size_t order)
{
    return TruncatedSeries(std::vector<cplx>(order + 1, cplx{1.0}));
}

TruncatedSeries TruncatedSeries::truncate(std::size_t order) const
{
    std::vector<cplx> v(order + 1);
    std::copy_n(coeffs_.begin(), std::min(coeffs_.size(), v.size()), v.begin());
    return TruncatedSeries(std::move(v));
}

double TruncatedSeries::max_abs() const
{
    double m = 0.0;
    for (const auto &c : coeffs_)
        m = std::max(m, std::abs(c));
    return m;
}

TruncatedSeries linear_combine(const TruncatedSeries &a, const TruncatedSeries &b, cplx alpha,
                               cplx beta)
{
    require_same_order(a, b, "linear_combine");
    std::vector<cplx> v(a.order() + 1);
    for (std::size_t n = 0; n < v.size(); ++n)
        v[n] = alpha * a[n] + beta * b[n];
    return TruncatedSeries(std::move(v));
}

TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b)
{
    require_same_order(a, b, "mul");
    const std::size_t N = a.order();
    std::vector<cplx> v(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        cplx acc{};
        for (std::size_t j = 0; j <= n; ++j)
            acc += a[j] * b[n - j];
        v[n] = acc;
    }
    return TruncatedSeries(std::move(v));
}

TruncatedSeries reciprocal(const TruncatedSeries &a)
{
    if (std::abs(a[0]) <= singular_threshold)
        throw SingularInput("reciprocal: constant term vanishes");
    const std::size_t N = a.order();
    std::vector<cplx> v(N + 1);
    v[0] = 1.0 / a[0];
    for (std::size_t n = 1; n <= N; ++n) {
        cplx acc{};
        for (std::size_t j = 1; j <= n; ++j)
            acc += a[j] * v[n - j];
        v[n] = -acc * v[0];
    }
    return TruncatedSeries(std::move(v));
}

TruncatedSeries sqrt(const TruncatedSeries &a)
{
    if (std::abs(a[0]) <= singular_threshold)
        throw SingularInput("sqrt: constant term vanishes");
    const std::size_t N = a.order();
    std::vector<cplx> s(N + 1);
    s[0] = std::sqrt(a[0]);
    for (std::size_t n = 1; n <= N; ++n) {
        cplx acc{};
        for (std::size_t j = 1; j < n; ++j)
            acc += s[j] * s[n - j];
        s[n] = (a[n] - acc) / (2.0 * s[0]);
    }
    return TruncatedSeries(std::move(s));
}

TruncatedSeries compose(const TruncatedSeries &outer, const TruncatedSeries &inner)
{
    require_same_order(outer, inner, "compose");
    if (std::abs(inner[0]) >= singular_threshold)
        throw SingularInput("compose: inner series has nonzero constant term");
    const std::size_t N = outer.order();
    // Horner over series; inner has no constant term so each step raises the
    // valuation and the truncation is exact.
    TruncatedSeries acc = TruncatedSeries::constant(outer[N], N);
    for (std::size_t k = N; k-- > 0;) {
        acc = mul(acc, inner);
        acc = acc + TruncatedSeries::constant(outer[k], N);
    }
    return acc;
}

TruncatedSeries differentiate(const TruncatedSeries &a)
{
    const std::size_t N = a.order();
    std::vector<cplx> v(N + 1);
    for (std::size_t n = 0; n < N; ++n)
        v[n] = static_cast<double>(n + 1) * a[n + 1];
    return TruncatedSeries(std::move(v));
}

TruncatedSeries integrate0(const TruncatedSeries &a)
{
    const std::size_t N = a.order();
    std::vector<cplx> v(N + 1);
    for (std::size_t n = 1; n <= N; ++n)
        v[n] = a[n - 1] / static_cast<double>(n);
    return TruncatedSeries(std::move(v));
}

TruncatedSeries shift_up(const TruncatedSeries &a, std::size_t power)
{
    const std::size_t N = a.order();
    std::vector<cplx> v(N + 1);
    for (std::size_t n = power; n <= N; ++n)
        v[n] = a[n - power];
    return TruncatedSeries(std::move(v));
}

cplx eval(const TruncatedSeries &a, cplx z)
{
    const auto c = a.coeffs();
    cplx acc{};
    for (std::size_t n = c.size(); n-- > 0;)
        acc = acc * z + c[n];
    return acc;
}

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return linear_combine(a, b, 1.0, 1.0);
}

TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return linear_combine(a, b, 1.0, -1.0);
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) { return mul(a, b); }

TruncatedSeries operator*(cplx s, const TruncatedSeries &a)
{
    std::vector<cplx> v(a.coeffs().begin(), a.coeffs().end());
    for (auto &c : v)
        c *= s;
    return TruncatedSeries(std::move(v));
}

} // namespace schlicht
