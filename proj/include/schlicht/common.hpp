#ifndef SCHLICHT_COMMON_HPP
#define SCHLICHT_COMMON_HPP

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace schlicht {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

inline cplx unimodular(double angle) { return std::polar(1.0, angle); }

// Parameter outside the documented domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Binary series operation on operands of different truncation order.
class OrderMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Series inversion/composition precondition on the constant term violated.
class SingularInput : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Evaluation hit a pole of f (z/f vanishes numerically).
class SingularPoint : public std::runtime_error {
public:
    SingularPoint(const std::string &what, cplx where)
        : std::runtime_error(what), point(where) {}
    cplx point;
};

// A numerical procedure could not produce a trustworthy answer.
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace schlicht

#endif
