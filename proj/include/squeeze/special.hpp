#pragma once

#include <complex>
#include <cstddef>

namespace squeeze {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// ln(n!). Exact table product up to n = 150, lgamma beyond.
double log_factorial(std::size_t n);

/// 1/sqrt(n!), the single nonzero Taylor coefficient of f+_n.
/// Every place that needs sqrt(n!) divides by this value so that
/// pairings of f-_n with f+_n come out exactly 1.
double inv_sqrt_factorial(std::size_t n);

/// pi^{-1/4}, the vacuum amplitude at the origin.
double vacuum_peak();

}  // namespace squeeze
