#pragma once

#include "automorphe/common.hpp"

namespace automorphe {

struct QuadratureSpec {
  int node_count = 64;
  double cutoff = 60.0;  // hard cap on the t-range of the first Bessel integral
  double target_tol = 1e-10;
  void validate() const;
};

// log Gamma on any branch; exp(lgamma_c(z)) == gamma_c(z)
cplx lgamma_c(cplx z);
cplx gamma_c(cplx z);
// 1/Gamma, zero at the poles
cplx rgamma_c(cplx z);

cplx zeta_c(cplx s);
cplx zeta_star(cplx s);
cplx b_delta(int delta, cplx nu);

// K_{i lambda/2}(x) by the cosh integral, cross-checked against the sinh/cos form
double bessel_k_imag(double lambda, double x, const QuadratureSpec& spec = {});
// first representation only, no cross-check (hot paths)
double bessel_k_first(double lambda, double x, const QuadratureSpec& spec = {});
// second representation, sum of half periods with averaging acceleration
double bessel_k_second(double lambda, double x);
// K_nu(x) for complex order by int_0^inf exp(-x cosh t) cosh(nu t) dt
cplx bessel_k(cplx nu, double x);

}  // namespace automorphe
