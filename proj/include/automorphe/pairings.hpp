#pragma once

#include <functional>
#include <vector>

#include "automorphe/arith.hpp"
#include "automorphe/gausspoly.hpp"
#include "automorphe/planedist.hpp"

namespace automorphe {

struct NotInImageError : std::domain_error {
  using std::domain_error::domain_error;
};

// h = euler(f), carrying f as the certificate
class EulerImage {
 public:
  explicit EulerImage(const GaussPoly& f);
  // accepts h only if it matches euler(f) at sample points
  static EulerImage certify(const GaussPoly& h, const GaussPoly& f);
  const GaussPoly& f() const { return f_; }
  const GaussPoly& h() const { return h_; }

 private:
  GaussPoly f_, h_;
};

struct PairingResult {
  cplx value = 0.0;       // truncated sum plus tail corrections
  cplx raw = 0.0;         // truncated sum without corrections
  double tail_estimate = 0.0;
};

struct LatticeOptions {
  i64 radius = 100;        // |m| <= radius
  double n_factor = 10.0;  // explicit |n| <= max(radius, n_factor |m|)
  double tol = 1e-11;
  double alpha = 0.45;
};

// I_{n,m}(h) = int h(n x + n1, m x + m1) e(x) dx
cplx i_nm(const UnimodularRep& rep, const GaussPoly& h);
// int h(t x - 1/m, m x) e(x) dx, smooth in real t; I_{n,m} = e(-m1/m) times this at t = n
cplx i_circ(double t, i64 m, const GaussPoly& h);

// sum over n coprime to m of e(-m1/m) F(n): explicit for |n| <= n_max, Euler-Maclaurin tails per residue class
cplx row_sum(i64 m, const std::function<cplx(double)>& F, i64 n_max, double tol);

// 1/2 sum over coprime (n, m) of e(-m1/m) F_m(n), +-pairs grouped row by row
struct LatticeSummand {
  std::function<cplx(i64, double)> F;  // F(m, t), m != 0
  cplx m_zero = 0.0;                   // contribution of (1,0) plus (-1,0)
};
PairingResult lattice_sum(const LatticeSummand& s, const LatticeOptions& opt);

// <B, h>
PairingResult pair_B(const EulerImage& h, const LatticeOptions& opt = {});
// <B^1, f> = <B, pi^2 E^2 f>
PairingResult pair_B1(const GaussPoly& f, const LatticeOptions& opt = {});
// <B^1, q^{2 i pi E_nat} tau[gamma] f>
PairingResult pair_B_scaled(double q, const Rational& gamma, const GaussPoly& f, const LatticeOptions& opt = {});
PairingResult pair_B_scaled(double q, double gamma, const GaussPoly& f, const LatticeOptions& opt = {});
// <q^{-2 i pi E_nat} sigma_r B^1, f> as p^{-r} sum_b <B^1, q^{2 i pi E_nat} tau[-b/p^r] f>
PairingResult pair_envelope(double q, int r, i64 p, const GaussPoly& f, const LatticeOptions& opt = {});
// <q^{1+2 i pi E_nat} sigma_s B^1... > right side of the transposition identity, s = 2N - 2l + r
PairingResult transposition_rhs(i64 p, int N, int l, int r, const GaussPoly& f, const LatticeOptions& opt = {});
PairingResult transposition_lhs(i64 p, int N, int l, int r, const GaussPoly& f, const LatticeOptions& opt = {});

// fixed-m part: 1/2 sum over n coprime to m of I_{n,m}(h)
PairingResult pair_Bm_direct(i64 m, const EulerImage& h, i64 radius = 100);
struct KloostermanPairing {
  cplx value = 0.0;      // all k with |k| <= k_max plus the axis term
  cplx k_zero = 0.0;     // the k = 0 term alone
  cplx axis_term = 0.0;  // (mu(m)/|m|) int_0^inf W(c) dc / c, W(c) = int_{-c}^{c} h(u - 1/m, 0) du
  double tail_estimate = 0.0;
};
KloostermanPairing pair_Bm_kloosterman(i64 m, const EulerImage& h, i64 k_max = 20);

// int |t|^{-1-nu} (F_1^{-1} h)(k / t, t) dt
cplx phi_block_pairing(cplx nu, i64 k, const GaussPoly& hhat);
PairingResult pair_hecke_dist(const CharacterSpec& ch, const GaussPoly& h, i64 k_max = 40);
PairingResult pair_eis_dist(cplx nu, const GaussPoly& h, i64 k_max = 40);

// fitted C in |I_{n,m}(q^{2 i pi E_nat} h)| <= C (m^2/q^2 + q^2 n^2)^{-a}
struct DecayFit {
  double C = 0.0;
  double exponent = 0.0;
  std::vector<double> per_m;
};
DecayFit fit_i_nm_decay(const GaussPoly& h, double q, double a, i64 box);
// least-squares slope of log |I_{n,n}| against log n over dyadic n
double decay_slope(const GaussPoly& h, int dyadic_max);

}  // namespace automorphe
