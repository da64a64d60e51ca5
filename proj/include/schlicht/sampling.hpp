#ifndef SCHLICHT_SAMPLING_HPP
#define SCHLICHT_SAMPLING_HPP

#include <cstddef>
#include <vector>

#include "schlicht/common.hpp"

namespace schlicht {

/// Polar sampling grid: circles of increasing radius in (0,1), each with the
/// same number of equally spaced angles starting at 0.
struct SamplingPlan {
    std::vector<double> radii;
    std::size_t angles_per_circle = 4096;
    double tolerance = 1e-9;

    /// r_j = 1 - 2^-j, j = 1..radii_count.
    static SamplingPlan dyadic(std::size_t radii_count = 20, std::size_t angles = 4096,
                               double tolerance = 1e-9);

    double r_max() const { return radii.back(); }
    double angle(std::size_t k) const
    {
        return two_pi * static_cast<double>(k) / static_cast<double>(angles_per_circle);
    }
    cplx point(std::size_t circle, std::size_t k) const { return std::polar(radii[circle], angle(k)); }
    std::size_t size() const { return radii.size() * angles_per_circle; }

    /// Throws DomainError unless radii are strictly increasing in (0,1) and
    /// there are at least 64 angles.
    void validate() const;
};

} // namespace schlicht

#endif
