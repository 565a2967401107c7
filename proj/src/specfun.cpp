#include "automorphe/specfun.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "automorphe/quad.hpp"

namespace automorphe {

namespace {

bool is_nonpos_int(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

// B_{2k} / (2k (2k-1)), k = 1..12
constexpr std::array<double, 12> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
    854513.0 / 63756.0,
    -236364091.0 / 1506960.0,
};

cplx stirling(cplx w) {
  cplx inv = 1.0 / w;
  cplx inv2 = inv * inv;
  cplx series = 0.0;
  for (int k = 11; k >= 0; --k) series = series * inv2 + kStirling[k];
  series *= inv;
  return (w - 0.5) * std::log(w) - w + 0.5 * std::log(TWO_PI) + series;
}

// log sin(pi z) without overflow for large |Im z|
cplx log_sin_pi(cplx z) {
  if (std::abs(z.imag()) < 10.0) return std::log(std::sin(PI * z));
  const cplx ipz = I_UNIT * PI * z;
  if (z.imag() > 0) return -ipz + std::log((std::exp(2.0 * ipz) - 1.0) / (2.0 * I_UNIT));
  return ipz + std::log((1.0 - std::exp(-2.0 * ipz)) / (2.0 * I_UNIT));
}

cplx zeta_euler_maclaurin(cplx s) {
  // B_{2k}, k = 1..12
  static constexpr std::array<double, 12> b2k = {
      1.0 / 6.0,           -1.0 / 30.0,        1.0 / 42.0,          -1.0 / 30.0,
      5.0 / 66.0,          -691.0 / 2730.0,    7.0 / 6.0,           -3617.0 / 510.0,
      43867.0 / 798.0,     -174611.0 / 330.0,  854513.0 / 138.0,    -236364091.0 / 2730.0,
  };
  const int n = 12 + static_cast<int>(std::ceil(std::abs(s)));
  cplx sum = 0.0;
  for (int k = n - 1; k >= 1; --k) sum += std::exp(-s * std::log(static_cast<double>(k)));
  const cplx n_s = std::exp(-s * std::log(static_cast<double>(n)));
  sum += n_s * static_cast<double>(n) / (s - 1.0) + 0.5 * n_s;
  // term_k = B_{2k}/(2k)! * s(s+1)...(s+2k-2) * n^{-s-2k+1}
  cplx factor = s * n_s / static_cast<double>(n) / 2.0;
  for (int k = 1; k <= 12; ++k) {
    sum += b2k[k - 1] * factor;
    const double a = 2.0 * k - 1.0;
    factor *= (s + a) * (s + a + 1.0) / ((a + 2.0) * (a + 3.0) * static_cast<double>(n) * n);
  }
  return sum;
}

cplx zeta_borwein(cplx s) {
  const int n = 60 + static_cast<int>(std::ceil(1.8 * std::abs(s.imag())));
  std::vector<double> d(n + 1);
  double term = 1.0;
  double acc = 1.0;
  d[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    term *= 4.0 * (n + i) * static_cast<double>(n - i) / ((2.0 * i + 1.0) * (2.0 * i + 2.0));
    acc += term;
    d[i + 1] = acc;
  }
  const double dn = d[n];
  cplx sum = 0.0;
  for (int k = n - 1; k >= 0; --k) {
    const double w = (d[k] - dn) / dn;
    const cplx t = w * std::exp(-s * std::log(k + 1.0));
    sum += (k % 2 == 0) ? t : -t;
  }
  const cplx denom = 1.0 - std::exp((1.0 - s) * std::log(2.0));
  return -sum / denom;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (node_count < 8) throw DomainError("QuadratureSpec: node_count must be >= 8");
  if (!(target_tol > 0)) throw DomainError("QuadratureSpec: target_tol must be > 0");
  if (!(cutoff > 0)) throw DomainError("QuadratureSpec: cutoff must be > 0");
}

cplx lgamma_c(cplx z) {
  if (is_nonpos_int(z)) throw PoleError("gamma: pole at non-positive integer");
  if (z.real() < 0.5) return std::log(PI) - log_sin_pi(z) - lgamma_c(1.0 - z);
  cplx w = z;
  cplx prod = 1.0;
  while (w.real() < 10.0) {
    prod *= w;
    w += 1.0;
  }
  return stirling(w) - std::log(prod);
}

cplx gamma_c(cplx z) { return std::exp(lgamma_c(z)); }

cplx rgamma_c(cplx z) {
  if (is_nonpos_int(z)) return 0.0;
  return std::exp(-lgamma_c(z));
}

cplx zeta_c(cplx s) {
  if (s == cplx(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
  if (s.real() <= -2.0) return b_delta(0, s) * zeta_c(1.0 - s);
  const cplx denom = 1.0 - std::exp((1.0 - s) * std::log(2.0));
  if (std::abs(denom) < 0.05) return zeta_euler_maclaurin(s);
  return zeta_borwein(s);
}

cplx zeta_star(cplx s) {
  if (s == cplx(0.0) || s == cplx(1.0)) throw PoleError("zeta_star: pole at s in {0,1}");
  if (is_nonpos_int(0.5 * s) || s.real() < 0.5) {
    const cplx t = 1.0 - s;
    return std::exp(-0.5 * t * std::log(PI) + lgamma_c(0.5 * t)) * zeta_c(t);
  }
  return std::exp(-0.5 * s * std::log(PI) + lgamma_c(0.5 * s)) * zeta_c(s);
}

cplx b_delta(int delta, cplx nu) {
  if (delta != 0 && delta != 1) throw DomainError("b_delta: parity must be 0 or 1");
  const cplx a = 0.5 * (1.0 - nu + static_cast<double>(delta));
  const cplx b = 0.5 * (nu + static_cast<double>(delta));
  if (is_nonpos_int(a)) throw PoleError("b_delta: pole at nu = delta+1+2j");
  if (is_nonpos_int(b)) return 0.0;
  const cplx pref = delta == 0 ? cplx(1.0) : cplx(0.0, -1.0);
  return pref * std::exp((nu - 0.5) * std::log(PI) + lgamma_c(a) - lgamma_c(b));
}

double bessel_k_first(double lambda, double x, const QuadratureSpec& spec) {
  if (!(x > 0)) throw DomainError("bessel_k: x must be positive");
  spec.validate();
  const double t_max = std::min(spec.cutoff, std::acosh(1.0 + 41.45 / x));
  auto f = [&](double t) { return std::exp(-x * std::cosh(t)) * std::cos(0.5 * lambda * t); };
  auto trap = [&](int n) {
    const double h = t_max / n;
    double s = 0.5 * (f(0.0) + f(t_max));
    for (int j = 1; j < n; ++j) s += f(j * h);
    return s * h;
  };
  int n = spec.node_count;
  double prev = trap(n);
  for (int iter = 0; iter < 14; ++iter) {
    n *= 2;
    const double cur = trap(n);
    if (std::abs(cur - prev) <= 0.1 * spec.target_tol) return cur;
    prev = cur;
  }
  throw ConvergenceError("bessel_k_first: trapezoid did not converge");
}

double bessel_k_second(double lambda, double x) {
  if (!(x > 0)) throw DomainError("bessel_k: x must be positive");
  const cplx expo(-1.5, -0.5 * lambda);
  auto amp = [&](double t) { return t * std::exp(expo * std::log1p(t * t)); };
  const double half = PI / x;
  const double t_max = std::max(10.0, 2.0 * std::abs(lambda) * PI / x);
  const int tail = 40;
  const int pieces = static_cast<int>(std::ceil(t_max / half)) + tail;
  const int sub = std::max(1, static_cast<int>(std::ceil(half / 0.25)));
  std::vector<cplx> partial;
  partial.reserve(pieces);
  cplx running = 0.0;
  auto integrand = [&](double t) { return amp(t) * std::sin(x * t); };
  for (int j = 0; j < pieces; ++j) {
    running += composite_gl<16>(integrand, j * half, (j + 1) * half, sub);
    partial.push_back(running);
  }
  std::vector<cplx> s(partial.end() - tail, partial.end());
  for (int round = 1; round < tail; ++round)
    for (int i = 0; i + round < tail; ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
  const cplx nu(0.0, 0.5 * lambda);
  const cplx pref = std::exp(lgamma_c(nu + 0.5) + nu * std::log(2.0 / x)) / std::sqrt(PI) * (2.0 * nu + 1.0) / x;
  return (pref * s[0]).real();
}

double bessel_k_imag(double lambda, double x, const QuadratureSpec& spec) {
  const double a = bessel_k_first(lambda, x, spec);
  const double b = bessel_k_second(lambda, x);
  if (std::abs(a - b) > std::max(spec.target_tol, 1e-8))
    throw ConvergenceError("bessel_k_imag: integral representations disagree");
  return a;
}

cplx bessel_k(cplx nu, double x) {
  if (!(x > 0)) throw DomainError("bessel_k: x must be positive");
  const double g = std::abs(nu.real());
  double t_max = std::acosh(1.0 + 41.45 / x);
  for (int it = 0; it < 50; ++it) t_max = std::acosh(1.0 + (41.45 + g * t_max) / x);
  auto f = [&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); };
  auto trap = [&](int n) {
    const double h = t_max / n;
    cplx s = 0.5 * (f(0.0) + f(t_max));
    for (int j = 1; j < n; ++j) s += f(j * h);
    return s * h;
  };
  int n = 64;
  cplx prev = trap(n);
  for (int iter = 0; iter < 14; ++iter) {
    n *= 2;
    const cplx cur = trap(n);
    if (std::abs(cur - prev) <= 1e-13 * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  throw ConvergenceError("bessel_k: trapezoid did not converge");
}

}  // namespace automorphe
