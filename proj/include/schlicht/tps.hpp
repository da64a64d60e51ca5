#ifndef SCHLICHT_TPS_HPP
#define SCHLICHT_TPS_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "schlicht/common.hpp"

namespace schlicht {

inline constexpr std::size_t default_order = 64;

/// Maclaurin polynomial c_0 + c_1 z + ... + c_N z^N with complex double
/// coefficients. Holds exactly N+1 finite coefficients. Binary operations
/// require equal order; truncate() or extend() first.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order = default_order);
    explicit TruncatedSeries(std::vector<cplx> coeffs);
    TruncatedSeries(std::initializer_list<cplx> coeffs, std::size_t order);

    static TruncatedSeries constant(cplx c, std::size_t order);
    static TruncatedSeries monomial(cplx c, std::size_t power, std::size_t order);
    // 1 + z + z^2 + ... + z^N
    static TruncatedSeries geometric(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    std::span<const cplx> coeffs() const { return coeffs_; }
    cplx operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : cplx{}; }

    // Drop (or zero-pad to) a different order.
    TruncatedSeries truncate(std::size_t order) const;

    // Maximum absolute coefficient.
    double max_abs() const;

    friend TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b);
    friend TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b);
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);
    friend TruncatedSeries operator*(cplx s, const TruncatedSeries &a);

private:
    std::vector<cplx> coeffs_;
};

/// alpha*a + beta*b.
TruncatedSeries linear_combine(const TruncatedSeries &a, const TruncatedSeries &b, cplx alpha,
                               cplx beta);

/// Cauchy product truncated to the common order.
TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b);

/// Multiplicative inverse; requires |a_0| > 1e-14.
TruncatedSeries reciprocal(const TruncatedSeries &a);

/// Principal square root anchored at sqrt(a_0); requires |a_0| > 1e-14.
TruncatedSeries sqrt(const TruncatedSeries &a);

/// Coefficients of outer(inner(z)); requires |inner_0| < 1e-14.
TruncatedSeries compose(const TruncatedSeries &outer, const TruncatedSeries &inner);

/// Term-by-term derivative; the top coefficient of the result is zero.
TruncatedSeries differentiate(const TruncatedSeries &a);

/// Primitive vanishing at 0; the input's top coefficient is dropped.
TruncatedSeries integrate0(const TruncatedSeries &a);

/// z * a(z), truncated.
TruncatedSeries shift_up(const TruncatedSeries &a, std::size_t power = 1);

/// Horner evaluation.
cplx eval(const TruncatedSeries &a, cplx z);

} // namespace schlicht

#endif
