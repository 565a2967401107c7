#include "automorphe/pairings.hpp"

#include <cmath>

#include "automorphe/parallel.hpp"
#include "automorphe/quad.hpp"

namespace automorphe {

EulerImage::EulerImage(const GaussPoly& f) : f_(f), h_(euler(f)) {}

EulerImage EulerImage::certify(const GaussPoly& h, const GaussPoly& f) {
  EulerImage e(f);
  const double pts[][2] = {{0.3, -0.7}, {1.1, 0.4}, {-0.5, 0.9}, {0.0, 0.2}, {0.8, 1.3}};
  for (const auto& p : pts) {
    const cplx a = h(p[0], p[1]), b = e.h_(p[0], p[1]);
    if (std::abs(a - b) > 1e-10 * (1.0 + std::abs(b)))
      throw NotInImageError("pairing needs h = euler(f); the supplied certificate does not match");
  }
  return e;
}

cplx i_nm(const UnimodularRep& rep, const GaussPoly& h) {
  // shift x by -m1/m (or -n1/n when m = 0) so that the line passes near the origin
  if (rep.m == 0)
    return h.line_integral(static_cast<double>(rep.n), 0.0, 0.0, static_cast<double>(rep.m1), 1.0);
  const double m = static_cast<double>(rep.m);
  return e2pi(-static_cast<double>(rep.m1 % rep.m) / m) * i_circ(static_cast<double>(rep.n), rep.m, h);
}

cplx i_circ(double t, i64 m, const GaussPoly& h) {
  if (m == 0) throw DomainError("i_circ: m must be nonzero");
  return h.line_integral(t, static_cast<double>(m), -1.0 / static_cast<double>(m), 0.0, 1.0);
}

namespace {

cplx unit_phase(i64 n, i64 m) {
  const i64 am = std::llabs(m);
  if (am == 1) return 1.0;
  const i64 m1 = mod_inv(mod_pos(n, am), am);
  return e2pi(-static_cast<double>(m1) / static_cast<double>(m));
}

// Euler-Maclaurin tail over n = sign (n_max + a + |m| k), k >= 0
cplx row_tail(i64 m, int sign, const std::function<cplx(double)>& F, i64 n_max, double tol) {
  const i64 am = std::llabs(m);
  const double w = static_cast<double>(am);
  auto G = [&](double t) { return F(sign * t); };
  const double top = static_cast<double>(n_max) + 0.5 * w;
  const cplx J = integrate_half_line(G, top, std::max(top, 1.0), tol);
  cplx s = 0.0;
  for (i64 a = 1; a <= am; ++a) {
    const i64 n = n_max + a;
    if (gcd64(n, m) != 1) continue;
    const double lo = static_cast<double>(n) - 0.5 * w;
    cplx part = J;
    if (top > lo) part += gauss_legendre<20>(G, lo, top);
    const double d = 0.05 * w;
    const cplx deriv = (G(lo + d) - G(lo - d)) / (2.0 * d);
    s += unit_phase(sign * n, m) * (part / w + w / 24.0 * deriv);
  }
  return s;
}

cplx row_sum_impl(i64 m, const std::function<cplx(double)>& F, i64 n_max, double tol, cplx* raw) {
  if (m == 0) throw DomainError("row_sum: m must be nonzero");
  cplx s = 0.0;
  for (i64 n = -n_max; n <= n_max; ++n) {
    if (gcd64(n, m) != 1) continue;
    s += unit_phase(n, m) * F(static_cast<double>(n));
  }
  if (raw) *raw = s;
  return s + row_tail(m, 1, F, n_max, tol) + row_tail(m, -1, F, n_max, tol);
}

double mobius_partial(i64 R, int power) {
  double s = 0.0;
  for (i64 m = 1; m <= R; ++m) {
    const int mu = mobius(m);
    if (mu != 0) s += mu / std::pow(static_cast<double>(m), power);
  }
  return s;
}

PairingResult shifted_B(const GaussPoly& g, double shift, const LatticeOptions& opt) {
  LatticeSummand s;
  s.F = [g, shift](i64 m, double t) { return i_circ(t + shift * static_cast<double>(m), m, g); };
  const GaussPoly g1 = shift == 0.0 ? g : shear(shift, g);
  s.m_zero = i_nm(complete_column(1, 0), g1) + i_nm(complete_column(-1, 0), g1);
  return lattice_sum(s, opt);
}

}  // namespace

cplx row_sum(i64 m, const std::function<cplx(double)>& F, i64 n_max, double tol) {
  return row_sum_impl(m, F, n_max, tol, nullptr);
}

PairingResult lattice_sum(const LatticeSummand& s, const LatticeOptions& opt) {
  if (opt.radius < 1) throw DomainError("lattice_sum: radius must be >= 1");
  const i64 R = opt.radius;
  std::vector<cplx> rows(2 * R), raws(2 * R);
  parallel_for(2 * R, [&](std::size_t i) {
    const i64 m = (i % 2 == 0 ? 1 : -1) * static_cast<i64>(i / 2 + 1);
    const i64 n_max = std::max<i64>(R, static_cast<i64>(std::ceil(opt.n_factor * std::llabs(m))));
    auto F = [&](double t) { return s.F(m, t); };
    rows[i] = row_sum_impl(m, F, n_max, opt.tol, &raws[i]);
  });
  PairingResult out;
  cplx val = s.m_zero, raw = s.m_zero;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    val += rows[i];
    raw += raws[i];
  }
  out.raw = 0.5 * raw;

  // m-tail: rows beyond R behave like mu(m)/|m| int F_m, with int F_m ~ a + b/m^2
  const double T1 = -mobius_partial(R, 1);
  const double T3 = 1.0 / zeta_c(3.0).real() - mobius_partial(R, 3);
  cplx corr = 0.0;
  double resid = 0.0;
  const double kappa = 1.0 + 2.0 * opt.alpha;
  for (int sign : {1, -1}) {
    auto total = [&](i64 m) {
      auto F = [&](double t) { return s.F(sign * m, t); };
      return integrate_line(F, 0.0, static_cast<double>(m), opt.tol);
    };
    const i64 m2 = R, m1 = std::max<i64>(1, R / 2);
    const cplx A2 = total(m2);
    cplx a = A2, b = 0.0;
    if (m1 < m2) {
      const cplx A1 = total(m1);
      const double d1 = 1.0 / double(m1 * m1), d2 = 1.0 / double(m2 * m2);
      b = (A1 - A2) / (d1 - d2);
      a = A2 - b * d2;
    }
    corr += a * T1 + b * T3;
    for (i64 m = m1 + (m1 < m2 ? 1 : 0); m <= m2; ++m) {
      const std::size_t i = 2 * (m - 1) + (sign > 0 ? 0 : 1);
      const cplx model = static_cast<double>(mobius(m)) / static_cast<double>(m) * (a + b / double(m * m));
      resid = std::max(resid, std::abs(rows[i] - model) * std::pow(static_cast<double>(m), kappa));
    }
  }
  out.value = 0.5 * (val + corr);
  out.tail_estimate = 0.5 * std::abs(corr) + resid * std::pow(static_cast<double>(R), 1.0 - kappa) / (kappa - 1.0);
  return out;
}

PairingResult pair_B(const EulerImage& h, const LatticeOptions& opt) { return shifted_B(h.h(), 0.0, opt); }

PairingResult pair_B1(const GaussPoly& f, const LatticeOptions& opt) { return shifted_B(pi2_euler2(f), 0.0, opt); }

PairingResult pair_B_scaled(double q, double gamma, const GaussPoly& f, const LatticeOptions& opt) {
  if (!(q > 0)) throw DomainError("pair_B_scaled: q must be positive");
  if (q > 1.0) {
    // B is SL(2,Z) invariant: compose with (x, xi) -> (-xi, x) and pass to 1/q, where the lattice sum converges fast
    Eigen::Matrix2d A;
    A << gamma, -1.0, 1.0, 0.0;
    return pair_B_scaled(1.0 / q, 0.0, linear_substitute(f, A), opt);
  }
  return shifted_B(dilate_natural(q, pi2_euler2(f)), gamma / (q * q), opt);
}

PairingResult pair_B_scaled(double q, const Rational& gamma, const GaussPoly& f, const LatticeOptions& opt) {
  return pair_B_scaled(q, static_cast<double>(gamma), f, opt);
}

PairingResult pair_envelope(double q, int r, i64 p, const GaussPoly& f, const LatticeOptions& opt) {
  if (!(q > 0)) throw DomainError("pair_envelope: q must be positive");
  if (r < 0) throw DomainError("pair_envelope: r must be >= 0");
  const GaussPoly g = dilate_natural(q, pi2_euler2(f));
  i64 pr = 1;
  for (int k = 0; k < r; ++k) pr *= p;
  PairingResult out;
  for (i64 b = 0; b < pr; ++b) {
    const PairingResult x = shifted_B(g, -static_cast<double>(b) / static_cast<double>(pr), opt);
    out.value += x.value;
    out.raw += x.raw;
    out.tail_estimate += x.tail_estimate;
  }
  const double inv = 1.0 / static_cast<double>(pr);
  out.value *= inv;
  out.raw *= inv;
  out.tail_estimate *= inv;
  return out;
}

PairingResult transposition_lhs(i64 p, int N, int l, int r, const GaussPoly& f, const LatticeOptions& opt) {
  if (l > N || r > l || r < 0) throw DomainError("transposition: need 0 <= r <= l <= N");
  const double q = std::pow(static_cast<double>(p), l - N);
  PairingResult x = pair_envelope(q, r, p, f, opt);
  x.value *= q;
  x.raw *= q;
  x.tail_estimate *= q;
  return x;
}

PairingResult transposition_rhs(i64 p, int N, int l, int r, const GaussPoly& f, const LatticeOptions& opt) {
  if (l > N || r > l || r < 0) throw DomainError("transposition: need 0 <= r <= l <= N");
  const double q = std::pow(static_cast<double>(p), l - N);
  const int s = 2 * N - 2 * l + r;
  i64 ps = 1;
  for (int k = 0; k < s; ++k) ps *= p;
  PairingResult out;
  for (i64 b = 0; b < ps; ++b) {
    const PairingResult x = pair_B_scaled(q, static_cast<double>(b) / static_cast<double>(ps), f, opt);
    out.value += x.value;
    out.raw += x.raw;
    out.tail_estimate += x.tail_estimate;
  }
  const double c = q / static_cast<double>(ps);
  out.value *= c;
  out.raw *= c;
  out.tail_estimate *= c;
  return out;
}

PairingResult pair_Bm_direct(i64 m, const EulerImage& h, i64 radius) {
  if (m == 0) throw DomainError("pair_Bm_direct: m must be nonzero");
  const GaussPoly& g = h.h();
  auto F = [&](double t) { return i_circ(t, m, g); };
  const i64 n_max = std::max<i64>(radius, 10 * std::llabs(m));
  PairingResult out;
  cplx raw;
  out.value = 0.5 * row_sum_impl(m, F, n_max, 1e-12, &raw);
  out.raw = 0.5 * raw;
  out.tail_estimate = std::abs(out.value - out.raw);
  return out;
}

KloostermanPairing pair_Bm_kloosterman(i64 m, const EulerImage& h, i64 k_max) {
  if (m == 0) throw DomainError("pair_Bm_kloosterman: m must be nonzero");
  const GaussPoly hhat = partial_fourier_inv1(h.h());
  const i64 am = std::llabs(m);
  const double md = static_cast<double>(m);
  KloostermanPairing out;
  for (i64 k = -k_max; k <= k_max; ++k) {
    const double S = kloosterman(k, am);
    if (S == 0.0) continue;
    const double kd = static_cast<double>(k);
    auto g = [&](double xi) {
      return e2pi(xi / md + kd / (md * xi)) * hhat(kd / xi, xi) / (2.0 * static_cast<double>(am) * std::abs(xi));
    };
    auto gneg = [&](double xi) { return g(-xi); };
    const cplx term = S * (integrate_half_line(g, 0.0, 1.0, 1e-13) + integrate_half_line(gneg, 0.0, 1.0, 1e-13));
    out.value += term;
    if (k == 0) out.k_zero = term;
    if (std::llabs(k) == k_max) out.tail_estimate += 2.0 * std::abs(term);
  }
  // the n-sum and x-integral do not commute absolutely near x = 0; h(x, 0) = d/dx (x f(x, 0))
  const int mu = mobius(am);
  if (mu != 0) {
    const double a = 1.0 / md;
    const GaussPoly& f = h.f();
    auto W = [&](double c) { return ((c - a) * f(c - a, 0.0) + (c + a) * f(-c - a, 0.0)) / c; };
    out.axis_term = static_cast<double>(mu) / static_cast<double>(am) * integrate_half_line(W, 0.0, 1.0, 1e-13);
    out.value += out.axis_term;
  }
  return out;
}

namespace {

// regularized int |t|^s g(t) dt for Re s > -3, s != -1
cplx reg_power_integral(const std::function<cplx(double)>& g, cplx s) {
  if (std::abs(s + 1.0) < 1e-12) throw PoleError("power integral: pole at exponent -1");
  const cplx g0 = g(0.0);
  auto ge = [&](double t) { return 0.5 * (g(t) + g(-t)); };
  auto inner = [&](double v) {
    const double t = std::exp(-v);
    const cplx d = ge(t) - g0;
    // guard inf * 0 once t underflows
    return d == 0.0 ? cplx(0.0) : std::exp(-v * (s + 1.0)) * d;
  };
  auto outer = [&](double t) {
    const cplx v = ge(t);
    return v == 0.0 ? cplx(0.0) : std::exp(s * std::log(t)) * v;
  };
  return 2.0 * (integrate_half_line(inner, 0.0, 1.0, 1e-13) + g0 / (s + 1.0) + integrate_half_line(outer, 1.0, 1.0, 1e-13));
}

}  // namespace

cplx phi_block_pairing(cplx nu, i64 k, const GaussPoly& hhat) {
  if (k == 0) return reg_power_integral([&](double t) { return hhat(0.0, t); }, -1.0 - nu);
  const double kd = static_cast<double>(k);
  auto g = [&](double t) {
    const cplx v = hhat(kd / t, t);
    return v == 0.0 ? cplx(0.0) : std::exp((-1.0 - nu) * std::log(t)) * v;
  };
  auto gneg = [&](double t) {
    const cplx v = hhat(-kd / t, -t);
    return v == 0.0 ? cplx(0.0) : std::exp((-1.0 - nu) * std::log(t)) * v;
  };
  return integrate_half_line(g, 0.0, 1.0, 1e-13) + integrate_half_line(gneg, 0.0, 1.0, 1e-13);
}

PairingResult pair_hecke_dist(const CharacterSpec& ch, const GaussPoly& h, i64 k_max) {
  ch.validate();
  const GaussPoly hhat = partial_fourier_inv1(h);
  const cplx nu(0.0, ch.lambda);
  PairingResult out;
  for (i64 k = -k_max; k <= k_max; ++k) {
    if (k == 0) continue;
    const cplx t = 0.25 * phi_coeff(ch, k) * phi_block_pairing(nu, k, hhat);
    out.value += t;
    if (std::llabs(k) == k_max) out.tail_estimate += 2.0 * std::abs(t);
  }
  out.raw = out.value;
  return out;
}

PairingResult pair_eis_dist(cplx nu, const GaussPoly& h, i64 k_max) {
  for (double bad : {1.0, -1.0, 0.0})
    if (std::abs(nu - bad) < 1e-12) throw PoleError("pair_eis_dist: nu must avoid -1, 0, 1");
  const GaussPoly hhat = partial_fourier_inv1(h);
  PairingResult out;
  out.value = zeta_c(-nu) * phi_block_pairing(nu, 0, hhat) +
              zeta_c(1.0 - nu) * reg_power_integral([&](double t) { return h(t, 0.0); }, -nu);
  for (i64 k = -k_max; k <= k_max; ++k) {
    if (k == 0) continue;
    const cplx t = divisor_sigma(nu, k) * phi_block_pairing(nu, k, hhat);
    out.value += t;
    if (std::llabs(k) == k_max) out.tail_estimate += 2.0 * std::abs(t);
  }
  out.raw = out.value;
  return out;
}

DecayFit fit_i_nm_decay(const GaussPoly& h, double q, double a, i64 box) {
  const GaussPoly g = dilate_natural(q, h);
  DecayFit fit;
  fit.exponent = a;
  for (i64 m = 1; m <= box; ++m) {
    double best = 0.0;
    for (i64 n = -box; n <= box; ++n) {
      if (gcd64(n, m) != 1) continue;
      const double v = std::abs(i_nm(complete_column(n, m), g));
      const double w = double(m * m) / (q * q) + q * q * double(n * n);
      best = std::max(best, v * std::pow(w, a));
    }
    fit.per_m.push_back(best);
    fit.C = std::max(fit.C, best);
  }
  return fit;
}

double decay_slope(const GaussPoly& h, int dyadic_max) {
  std::vector<double> xs, ys;
  for (int j = 2; j <= dyadic_max; ++j) {
    const i64 m = i64(1) << j;
    const i64 n = m + 1;
    const double v = std::abs(i_nm(complete_column(n, m), h));
    if (v <= 0.0) continue;
    xs.push_back(0.5 * std::log(double(m * m + n * n)));
    ys.push_back(std::log(v));
  }
  const double k = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace automorphe
