#pragma once

#include <random>
#include <string>
#include <vector>

#include "automorphe/gausspoly.hpp"
#include "automorphe/halfplane.hpp"
#include "automorphe/pairings.hpp"
#include "automorphe/report.hpp"

namespace automorphe {

// anisotropic Gaussian with polynomial factors; the radial Gaussian pairs to zero with B
GaussPoly default_test_function();
// a few blocks with positive definite Re Q and polynomial degree <= 2
GaussPoly random_gausspoly(std::mt19937_64& rng);

ScanReport exp_theta_s11();
ScanReport exp_eisenstein_eigen(i64 p, const std::vector<double>& lambdas);

struct EnvelopeOptions {
  double eps = 0.1;
  i64 radius = 20;  // rows use radius and 2 radius
};
// tested on h = euler(f); off the image of the Euler operator the ratios need not decay
ScanReport exp_scan_envelope(i64 p, int N, const EulerImage& h, const EnvelopeOptions& opt = {});

// beta with exp(pi (A+1)^2 N beta) = p^{N eps / 2}
double budget_beta(i64 p, double eps, int A);
ScanReport exp_binomial_budget(i64 p, int N, double eps, double norm = 1.0, int A = 4);

ScanReport exp_bm_consistency(const std::vector<i64>& ms, const GaussPoly& f, i64 radius = 100, i64 k_max = 20);

struct WindowTerm {
  std::string name;
  MaassExpansion form;
  double norm = 1.0;
};
// terms[center] fixes lambda_center; h supplies the slices
ScanReport exp_window_localization(const std::vector<WindowTerm>& terms, std::size_t center, i64 p, int N, double beta,
                                   const GaussPoly& h);
ScanReport exp_ramanujan(const MaassExpansion& form);

}  // namespace automorphe
