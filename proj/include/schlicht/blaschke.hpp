#ifndef SCHLICHT_BLASCHKE_HPP
#define SCHLICHT_BLASCHKE_HPP

#include <cstddef>
#include <vector>

#include "schlicht/common.hpp"
#include "schlicht/schwarz.hpp"

namespace schlicht {

enum class BlaschkeKind { B1, B2, custom };

/// Zero a = r e^{i theta}, stored through 1 - r so that zeros within one
/// ulp of the circle keep their distance to it.
struct BlaschkeZero {
    double one_minus_r;
    double theta;

    double modulus() const { return 1.0 - one_minus_r; }
    cplx point() const { return std::polar(modulus(), theta); }
    // |e^{i phi} - a|^2 without cancellation.
    double dist_sq_to_unimodular(double phi) const;
};

/// z * prod (|a_n|/a_n)(a_n - z)/(1 - conj(a_n) z), truncated to the
/// retained zeros.
struct BlaschkeSpec {
    BlaschkeKind kind = BlaschkeKind::custom;
    std::vector<BlaschkeZero> zeros;

    /// r_n = 1 - 2^{-4n}, theta_n = 2^{-n}, n = 1..factors.
    static BlaschkeSpec b1(std::size_t factors);
    /// r_n = 1 - 2^{-2n}, theta_n = 2^{-n}, n = 1..factors.
    static BlaschkeSpec b2(std::size_t factors);
    static BlaschkeSpec custom(const std::vector<cplx> &zeros);

    std::size_t truncation() const { return zeros.size(); }
    /// n-th zero of the generating sequence (1-based). B1/B2 follow their
    /// rule beyond the truncation; custom specs only have their listed zeros.
    BlaschkeZero zero(std::size_t n) const;
    /// sum of (1 - r_n) over retained zeros.
    double blaschke_sum() const;
    /// sum of (1 - r_n) over the discarded zeros n > N_B (0 for custom).
    double tail_bound() const;
};

cplx blaschke_eval(const BlaschkeSpec &spec, cplx z);

/// 1 - |B(z)|, accurate when |B(z)| is close to 1.
double blaschke_defect(const BlaschkeSpec &spec, cplx z);

/// Margin of the defining zero-sequence inequality for the n-th zero:
///   B1: |1 - a_n| - (sqrt(15)/(2 pi)) 2^{-n}
///   B2: 2^{-2n} - |1 - a_n|^2 (evaluated without cancellation)
/// Nonnegative when the inequality holds. Throws DomainError for custom specs.
double zero_inequality_margin(const BlaschkeSpec &spec, std::size_t n);

/// Role-phi candidate whose value is blaschke_eval; the series is the
/// truncated product expanded to the given order.
SchwarzCandidate blaschke_candidate(const BlaschkeSpec &spec, std::size_t order = default_order);

} // namespace schlicht

#endif
