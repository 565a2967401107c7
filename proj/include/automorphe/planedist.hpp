#pragma once

#include <array>
#include <functional>
#include <vector>

#include "automorphe/gausspoly.hpp"
#include "automorphe/heckewords.hpp"
#include "automorphe/phiblock.hpp"
#include "automorphe/specfun.hpp"

namespace automorphe {

using PlaneFn = std::function<cplx(double, double)>;

GaussPoly euler(const GaussPoly& h);          // x d_x + xi d_xi + 1
GaussPoly euler_natural(const GaussPoly& h);  // x d_x - xi d_xi
// pi^2 E^2 = -(2 i pi E)^2 / 4
GaussPoly pi2_euler2(const GaussPoly& h);
GaussPoly dilate(double t, const GaussPoly& h);          // t h(t x, t xi)
GaussPoly dilate_natural(double t, const GaussPoly& h);  // h(t x, xi / t)
GaussPoly shear(double gamma, const GaussPoly& h);       // h(x + gamma xi, xi)
GaussPoly shear(const Rational& gamma, const GaussPoly& h);
// p^{-r} sum_{b < p^r} shear(b p^{l-r}, h)
GaussPoly sigma_avg(int r, i64 l, i64 p, const GaussPoly& h);
// int h(y, eta) exp(2 i pi (x eta - y xi)) dy deta
GaussPoly symp_fourier(const GaussPoly& h);
// int h(y, xi) exp(2 i pi x y) dy
GaussPoly partial_fourier_inv1(const GaussPoly& h);

// exp(-pi |x - z xi|^2 / Im z) as a GaussPoly
GaussPoly theta_kernel(cplx z);
cplx theta(const GaussPoly& h, cplx z);
cplx theta(const PhiBlock& b, cplx z);
// Theta of the measure exp(2 i pi x) delta(xi - 1), by quadrature of its pairing
cplx theta_s11(cplx z);
// |Theta(pi^2 E^2 h) - (Delta - 1/4) Theta(h)| with a 4th-order difference Laplacian
double transfer_check(const GaussPoly& h, cplx z, double step = 0.0);

// (1/2 pi) int_0^inf theta^{i lambda} h(theta x, theta xi) d theta, homogeneous of degree -1-i lambda
cplx mellin_slice(const GaussPoly& h, double lambda, double x, double xi, double tol = 1e-9);
cplx mellin_slice(const PlaneFn& f, double lambda, double x, double xi, double s_lo, double s_hi, double tol = 1e-9);
// int_{-L}^{L} h_{i lambda}(x, xi) d lambda by reusing one set of samples
cplx mellin_reconstruct(const GaussPoly& h, double x, double xi, double lambda_max = 60.0, double dlambda = 0.125);

struct SpectralWindow {
  double lambda_center = 0.0;
  int N = 1;
  double beta = 0.1;
  void validate() const;
  // Psi_N(t) = (N beta)^{-1/2} exp(-pi t^2 / N beta) exp(-2 i pi lambda_c t)
  cplx psi(double t) const;
  // Phi_N(-i lambda) = exp(-pi N beta (lambda - lambda_c)^2)
  double factor(double lambda) const;
};

struct GridFunction {
  PlaneFn f;
  double L = 3.0;
  int n = 16;
  double eps0 = 0.0;
  int fd_order = 4;
  cplx operator()(double x, double xi) const { return f(x, xi); }
  std::vector<std::array<double, 2>> points() const;
  std::vector<cplx> sample() const;
};

// int Psi_N(t) h(e^{2 pi t} x, e^{2 pi t} xi) e^{2 pi t} dt
GridFunction window_apply(const SpectralWindow& w, const GaussPoly& h, double tol = 1e-8);
GridFunction window_apply(const SpectralWindow& w, const PlaneFn& h, double tol = 1e-8);

cplx bihom_eval(cplx rho, cplx nu, int delta, double x, double xi);
// |t|_delta^s = |t|^s sign(t)^delta
cplx signed_power(double t, cplx s, int delta);

// sum_n h(x + n xi, xi), an Inv(1) function
cplx periodize(const GaussPoly& h, double x, double xi);
// numeric action of a word on a plane function, rightmost generator first
cplx eval_word_numeric(const Word& w, i64 p, const PlaneFn& f, double x, double xi);
// T = R + R^{-1} sigma_1 applied k times numerically
cplx eval_hecke_power_numeric(int k, i64 p, const PlaneFn& f, double x, double xi);

// minimum eigenvalue of Re Q over blocks
double min_decay(const GaussPoly& h);

}  // namespace automorphe
