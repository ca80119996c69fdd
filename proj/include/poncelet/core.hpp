#pragma once

/// \file
/// \brief Shared scalar types, tolerances and the library error type.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace poncelet {

/// A point of the plane as a complex number, in units of the unit circumcircle.
using CPoint = std::complex<double>;

/// Kernel-wide degeneracy tolerance on normalized determinants and areas.
inline constexpr double kDegeneracyTol = 1e-10;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_finite(CPoint p) { return std::isfinite(p.real()) && std::isfinite(p.imag()); }

inline CPoint require_finite(CPoint p, const char* what)
{
    if (!is_finite(p))
        throw GeometryError(std::string(what) + ": non-finite point");
    return p;
}

inline double dot(CPoint a, CPoint b) { return a.real() * b.real() + a.imag() * b.imag(); }
inline double cross(CPoint a, CPoint b) { return a.real() * b.imag() - a.imag() * b.real(); }

/// Wraps an angle into (-pi, pi].
inline double wrap_angle(double a)
{
    a = std::remainder(a, kTwoPi);
    if (a <= -kPi)
        a += kTwoPi;
    return a;
}

/// Wraps an angle into [0, 2pi).
inline double wrap_phase(double a)
{
    a = std::fmod(a, kTwoPi);
    if (a < 0)
        a += kTwoPi;
    if (a >= kTwoPi)
        a = 0.0;
    return a;
}

inline bool near(CPoint a, CPoint b, double tol) { return std::abs(a - b) <= tol; }

} // namespace poncelet
