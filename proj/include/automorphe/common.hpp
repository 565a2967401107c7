#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace automorphe {

using cplx = std::complex<double>;

inline constexpr double PI = std::numbers::pi;
inline constexpr double TWO_PI = 2.0 * std::numbers::pi;
inline constexpr cplx I_UNIT{0.0, 1.0};

// exp(2 i pi x)
inline cplx e2pi(double x) { return std::polar(1.0, TWO_PI * x); }
inline cplx e2pi(cplx x) { return std::exp(cplx(0.0, TWO_PI) * x); }

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace automorphe
