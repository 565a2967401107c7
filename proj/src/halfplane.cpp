#include "automorphe/halfplane.hpp"

#include <cmath>

#include "automorphe/quad.hpp"

namespace automorphe {

void MaassExpansion::validate() const {
  if (parity != 0 && parity != 1) throw DomainError("MaassExpansion: parity must be 0 or 1");
  if (K < 1) throw DomainError("MaassExpansion: K must be >= 1");
  for (const auto& [k, v] : coeffs)
    if (k < 1) throw DomainError("MaassExpansion: coefficient index must be >= 1");
  if (hecke_normalized) {
    const auto it = coeffs.find(1);
    if (it == coeffs.end() || std::abs(it->second - 1.0) > precision)
      throw DomainError("MaassExpansion: Hecke normalization needs b_1 = 1");
  }
}

cplx MaassExpansion::b(i64 k) const {
  if (k == 0) return 0.0;
  const auto it = coeffs.find(std::llabs(k));
  if (it == coeffs.end()) return 0.0;
  return (k < 0 && parity == 1) ? -it->second : it->second;
}

MaassExpansion eisenstein_model(double lambda, i64 kmax) {
  MaassExpansion e;
  e.lambda = lambda;
  e.parity = 0;
  e.K = static_cast<int>(std::min<i64>(kmax, 40));
  const cplx nu(0.0, lambda);
  // sigma_{i lambda} by a divisor sieve
  std::vector<cplx> sig(kmax + 1, 0.0);
  for (i64 d = 1; d <= kmax; ++d) {
    const cplx dp = std::exp(nu * std::log(static_cast<double>(d)));
    for (i64 k = d; k <= kmax; k += d) sig[k] += dp;
  }
  for (i64 k = 1; k <= kmax; ++k) e.coeffs[k] = std::exp(-0.5 * nu * std::log(static_cast<double>(k))) * sig[k];
  return e;
}

int default_truncation(double y) {
  return std::max(40, static_cast<int>(std::ceil(10.0 / (TWO_PI * y))));
}

namespace {

cplx bessel_half(cplx nu, double x) {
  if (nu.real() == 0.0) return bessel_k_first(nu.imag(), x);
  return bessel_k(0.5 * nu, x);
}

}  // namespace

cplx eval_eisenstein(cplx nu, cplx z, int K) {
  const double y = z.imag(), x = z.real();
  if (!(y > 0)) throw DomainError("eval_eisenstein: Im z must be positive");
  if (std::abs(nu - 1.0) < 1e-12 || std::abs(nu + 1.0) < 1e-12) throw PoleError("eval_eisenstein: pole at nu = +-1");
  if (K <= 0) K = default_truncation(y);
  cplx v;
  if (std::abs(nu) < 1e-5) {
    // the two poles at nu = 0 cancel
    const double c0 = 0.5 * (0.5772156649015329 - std::log(4.0 * PI));
    v = std::sqrt(y) * (std::log(y) + 2.0 * c0);
  } else {
    v = zeta_star(1.0 - nu) * std::exp(0.5 * (1.0 - nu) * std::log(y)) +
        zeta_star(1.0 + nu) * std::exp(0.5 * (1.0 + nu) * std::log(y));
  }
  cplx s = 0.0;
  for (int k = 1; k <= K; ++k) {
    const double kd = k;
    const cplx c = std::exp(-0.5 * nu * std::log(kd)) * divisor_sigma(nu, k) * bessel_half(nu, TWO_PI * kd * y);
    s += c * 2.0 * std::cos(TWO_PI * kd * x);
  }
  return v + 2.0 * std::sqrt(y) * s;
}

double eisenstein_tail_bound(cplx nu, double y, int K) {
  const double k = K + 1.0;
  const double a = std::abs(nu.real());
  // |sigma_nu(k) k^{-nu/2}| <= d(k) k^{|Re nu|/2}, K_{nu/2}(x) <= K_{Re nu/2}(x) <= sqrt(pi/2x) e^{-x} (1 + |nu|^2/x)
  const double x = TWO_PI * k * y;
  const double term = 2.0 * std::sqrt(k) * std::pow(k, 0.5 * a) * std::sqrt(PI / (2.0 * x)) * std::exp(-x) * (1.0 + std::norm(nu) / x);
  return 4.0 * std::sqrt(y) * term / (1.0 - std::exp(-TWO_PI * y));
}

cplx eval_maass(const MaassExpansion& e, cplx z) {
  const double y = z.imag(), x = z.real();
  if (!(y > 0)) throw DomainError("eval_maass: Im z must be positive");
  const i64 K = std::min<i64>(e.K, e.max_index());
  cplx s = 0.0;
  for (i64 k = 1; k <= K; ++k) {
    const cplx bk = e.b(k);
    if (bk == cplx(0.0)) continue;
    const double kb = bessel_k_first(e.lambda, TWO_PI * static_cast<double>(k) * y);
    const cplx ph = e2pi(static_cast<double>(k) * x);
    const cplx both = e.parity == 0 ? ph + std::conj(ph) : ph - std::conj(ph);
    s += bk * kb * both;
  }
  return std::sqrt(y) * s;
}

cplx hecke_classical(i64 p, const HalfPlaneFn& f, cplx z) {
  if (!is_prime(p)) throw DomainError("hecke_classical: p must be prime");
  if (!(z.imag() > 0)) throw DomainError("hecke_classical: Im z must be positive");
  const double pd = static_cast<double>(p);
  cplx s = f(pd * z);
  for (i64 b = 0; b < p; ++b) s += f((z + static_cast<double>(b)) / pd);
  return s / std::sqrt(pd);
}

cplx hecke_minus_one(const HalfPlaneFn& f, cplx z) { return f(-std::conj(z)); }

MaassExpansion hecke_coeff(i64 p, const MaassExpansion& e) {
  if (!is_prime(p)) throw DomainError("hecke_coeff: p must be prime");
  const i64 top = e.max_index() / p;
  if (top < 1) throw RangeError("hecke_coeff: b_p is not stored");
  MaassExpansion r = e;
  r.coeffs.clear();
  r.hecke_normalized = false;
  for (i64 k = 1; k <= top; ++k) {
    const auto it = e.coeffs.find(p * k);
    if (it == e.coeffs.end()) throw RangeError("hecke_coeff: b_{pk} unavailable for k = " + std::to_string(k));
    cplx v = it->second;
    if (k % p == 0) v += e.b(k / p);
    r.coeffs[k] = v;
  }
  r.K = static_cast<int>(std::min<i64>(e.K, top));
  return r;
}

PairingResult poincare_selberg(int j, cplx z, i64 radius) {
  if (j < 1) throw DomainError("poincare_selberg: j must be >= 1");
  const double y = z.imag();
  if (!(y > 0)) throw DomainError("poincare_selberg: Im z must be positive");
  const double a = j + 0.5;
  LatticeSummand s;
  s.F = [z, y, a](i64 m, double t) {
    const cplx w = t - static_cast<double>(m) * z;
    return std::pow(y / std::norm(w), a) * e2pi(1.0 / (static_cast<double>(m) * w));
  };
  s.m_zero = 2.0 * std::pow(y, a) * e2pi(z);
  LatticeOptions opt;
  opt.radius = radius;
  PairingResult r = lattice_sum(s, opt);
  const double pref = std::pow(4.0 * PI, j) * std::exp(std::lgamma(a) - std::lgamma(0.5));
  r.value *= pref;
  r.raw *= pref;
  r.tail_estimate *= pref;
  return r;
}

cplx spec_coeff_eis(int j, double lambda) {
  if (lambda == 0.0) throw PoleError("spec_coeff_eis: pole at lambda = 0");
  const cplx il(0.0, 0.5 * lambda);
  const double pre = 2.0 * std::exp(std::lgamma(0.5) - std::lgamma(j + 0.5)) * std::pow(4.0 * PI, -j);
  return pre * gamma_c(double(j) + il) * gamma_c(double(j) - il) / zeta_star(cplx(0.0, lambda));
}

cplx spec_coeff_cusp(int j, double lambda) {
  const cplx il(0.0, 0.5 * lambda);
  const double pre = std::pow(4.0 * PI, -j) * std::exp(std::lgamma(0.5) - std::lgamma(j + 0.5));
  return pre * gamma_c(double(j) - il) * gamma_c(double(j) + il);
}

cplx l_func(const MaassExpansion& e, cplx s, LMode mode) {
  if (!(s.real() > 1.5)) throw ConvergenceError("l_func: truncated series need Re s > 3/2");
  if (mode == LMode::Dirichlet) {
    cplx v = 0.0;
    for (const auto& [k, b] : e.coeffs) v += b * std::exp(-s * std::log(static_cast<double>(k)));
    return v;
  }
  cplx v = 1.0;
  for (i64 p : primes_upto(e.max_index())) {
    const auto it = e.coeffs.find(p);
    if (it == e.coeffs.end()) continue;
    const cplx ps = std::exp(-s * std::log(static_cast<double>(p)));
    v /= 1.0 - it->second * ps + ps * ps;
  }
  return v;
}

namespace {

cplx gamma_factor(const MaassExpansion& e, cplx s) {
  const cplx a = 0.5 * (s + static_cast<double>(e.parity));
  const cplx il(0.0, 0.25 * e.lambda);
  return std::exp(-s * std::log(PI) + lgamma_c(a + il) + lgamma_c(a - il));
}

}  // namespace

cplx lambda_completed(const MaassExpansion& e, cplx s) { return gamma_factor(e, s) * l_func(e, s); }

cplx lambda_split(const MaassExpansion& e, cplx s) {
  // N(iy) for even forms, d/dx N(x+iy) at x = 0 for odd ones
  auto M = [&](double y) {
    cplx v = 0.0;
    const i64 K = std::min<i64>(std::max(e.K, default_truncation(1.0)), e.max_index());
    for (i64 k = 1; k <= K; ++k) {
      const cplx bk = e.b(k);
      if (bk == cplx(0.0)) continue;
      const double kb = bessel_k_first(e.lambda, TWO_PI * static_cast<double>(k) * y);
      v += e.parity == 0 ? 2.0 * bk * kb : cplx(0.0, 4.0 * PI * static_cast<double>(k)) * bk * kb;
    }
    return std::sqrt(y) * v;
  };
  auto g = [&](double y) {
    if (e.parity == 0) return M(y) * (std::exp((s - 0.5) * std::log(y)) + std::exp((0.5 - s) * std::log(y))) / y;
    return M(y) * (std::exp((s + 0.5) * std::log(y)) - std::exp((1.5 - s) * std::log(y))) / y;
  };
  const double top = 1.0 + 45.0 / TWO_PI + std::abs(s) / TWO_PI;
  const cplx I = composite_gl<20>(g, 1.0, top, 24);
  return e.parity == 0 ? 2.0 * I : cplx(0.0, -1.0) * I;
}

double func_eq_residual(const MaassExpansion& e, cplx s) {
  const double sign = e.parity == 0 ? 1.0 : -1.0;
  return std::abs(lambda_completed(e, s) - sign * lambda_split(e, 1.0 - s));
}

cplx lnat(const CharacterSpec& ch, double lambda, cplx s) {
  ch.validate();
  const cplx a = s + cplx(0.0, 0.5 * lambda), b = s - cplx(0.0, 0.5 * lambda);
  if (!(a.real() > 1.0)) throw ConvergenceError("lnat: Euler products need Re s > 1");
  cplx psi1 = 1.0, psi2 = 1.0;
  for (const auto& [p, t] : ch.theta) {
    (void)t;
    const cplx c = ch.chi_prime(p);
    const double lp = std::log(static_cast<double>(p));
    psi1 /= 1.0 - c * std::exp(-a * lp);
    psi2 /= 1.0 - std::exp(-b * lp) / c;
  }
  return 0.5 * b_delta(ch.parity, cplx(1.0, -0.5 * lambda) - s) * psi1 * psi2;
}

}  // namespace automorphe
