#pragma once

#include <string>

namespace maglap {

inline constexpr double two_pi = 6.283185307179586476925286766559;
inline constexpr double pi = 3.1415926535897932384626433832795;

/// Angle-equality tolerance after mod-2pi reduction.
inline constexpr double eps_angle = 1e-9;
/// Relative eigenpair residual bound.
inline constexpr double eps_eigen = 1e-10;
/// Tolerance for comparing two spectra elementwise.
inline constexpr double eps_spectrum = 1e-8;
/// Strict-clearance margin for certificate inequalities.
inline constexpr double delta_certificate = 1e-6;

/// Reduce to [0, 2pi); values within eps_angle of 2pi collapse to 0.
double normalize_angle(double x);

/// Circle distance between two angles, in [0, pi].
double angle_distance(double a, double b);

/// True when a and b agree mod 2pi within eps_angle.
bool angles_equal(double a, double b, double tol = eps_angle);

/// Parse "1.25", "pi", "-pi/2", "3pi/2", "0.5*pi" and the like, in radians.
double parse_angle(const std::string& text);

} // namespace maglap
