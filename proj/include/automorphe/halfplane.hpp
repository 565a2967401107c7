#pragma once

#include <functional>
#include <map>
#include <stdexcept>

#include "automorphe/arith.hpp"
#include "automorphe/pairings.hpp"
#include "automorphe/specfun.hpp"

namespace automorphe {

struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// y^{1/2} sum_{0<|k|<=K} b_k K_{i lambda/2}(2 pi |k| y) e(kx), b_{-k} = (-1)^parity b_k
struct MaassExpansion {
  double lambda = 0.0;
  int parity = 0;
  std::map<i64, cplx> coeffs;  // k >= 1
  int K = 40;
  bool hecke_normalized = true;
  double precision = 1e-12;

  void validate() const;
  i64 max_index() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }
  // signed k, zero when not stored
  cplx b(i64 k) const;
};

// b_k = |k|^{-i lambda/2} sigma_{i lambda}(|k|), k <= kmax
MaassExpansion eisenstein_model(double lambda, i64 kmax);

int default_truncation(double y);
cplx eval_eisenstein(cplx nu, cplx z, int K = 0);
// majorant of the omitted terms beyond K
double eisenstein_tail_bound(cplx nu, double y, int K);
cplx eval_maass(const MaassExpansion& e, cplx z);

using HalfPlaneFn = std::function<cplx(cplx)>;
cplx hecke_classical(i64 p, const HalfPlaneFn& f, cplx z);
cplx hecke_minus_one(const HalfPlaneFn& f, cplx z);
MaassExpansion hecke_coeff(i64 p, const MaassExpansion& e);

// (4 pi)^j Gamma(j+1/2)/Gamma(1/2) times 1/2 sum over coprime (n,m) of
// (y/|-mz+n|^2)^{j+1/2} e((m1 z - n1)/(-mz+n))
PairingResult poincare_selberg(int j, cplx z, i64 radius = 80);

cplx spec_coeff_eis(int j, double lambda);
cplx spec_coeff_cusp(int j, double lambda);

enum class LMode { Dirichlet, Euler };
cplx l_func(const MaassExpansion& e, cplx s, LMode mode = LMode::Dirichlet);
cplx lambda_completed(const MaassExpansion& e, cplx s);
// the completed function from the Mellin transform split at y = 1, which assumes modularity
cplx lambda_split(const MaassExpansion& e, cplx s);
// |Lambda(s) - (-1)^delta Lambda(1-s)|, Lambda(s) from the Dirichlet series, Lambda(1-s) from the split integral
double func_eq_residual(const MaassExpansion& e, cplx s);
// 1/2 B_delta((2 - i lambda)/2 - s) psi_1(s + i lambda/2) psi_2(s - i lambda/2), Euler products over the given primes
cplx lnat(const CharacterSpec& ch, double lambda, cplx s);

}  // namespace automorphe
