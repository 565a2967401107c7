#include "automorphe/planedist.hpp"

#include <array>
#include <cmath>

#include "automorphe/quad.hpp"

namespace automorphe {

namespace {

Poly2 quad_form(const Eigen::Matrix2cd& Q) {
  Poly2 p;
  p.add_to(2, 0, Q(0, 0));
  p.add_to(1, 1, 2.0 * Q(0, 1));
  p.add_to(0, 2, Q(1, 1));
  return p;
}

// poly * exp(E) for a quadratic exponent polynomial E
GaussBlock block_from_exponent(const Poly2& poly, const Poly2& E) {
  GaussBlock b;
  b.poly = poly * std::exp(E.coeff(0, 0));
  b.Q(0, 0) = -E.coeff(2, 0);
  b.Q(1, 1) = -E.coeff(0, 2);
  b.Q(0, 1) = b.Q(1, 0) = -0.5 * E.coeff(1, 1);
  const cplx tpi(0.0, TWO_PI);
  b.uv = Eigen::Vector2cd(E.coeff(1, 0) / tpi, E.coeff(0, 1) / tpi);
  return b;
}

double trapezoid_until(const std::function<cplx(double)>& g, double a, double b, double tol, int n0, cplx* out) {
  auto trap = [&](int n) {
    const double h = (b - a) / n;
    cplx s = 0.5 * (g(a) + g(b));
    for (int j = 1; j < n; ++j) s += g(a + j * h);
    return s * h;
  };
  int n = n0;
  cplx prev = trap(n);
  for (int it = 0; it < 12; ++it) {
    n *= 2;
    const cplx cur = trap(n);
    const double err = std::abs(cur - prev);
    if (err <= tol) {
      *out = cur;
      return err;
    }
    prev = cur;
  }
  throw ConvergenceError("trapezoid refinement did not converge");
}

}  // namespace

GaussPoly euler(const GaussPoly& h) {
  GaussPoly r;
  const cplx tpi(0.0, TWO_PI);
  for (const auto& b : h.blocks()) {
    const Poly2 lin = Poly2::linear(tpi * b.uv(0), tpi * b.uv(1), 1.0);
    const Poly2 mult = quad_form(b.Q) * cplx(-2.0) + lin;
    const Poly2 p = b.poly.dx().times_x() + b.poly.dxi().times_xi() + b.poly * mult;
    r.add_block({p, b.Q, b.uv});
  }
  return r;
}

GaussPoly euler_natural(const GaussPoly& h) {
  GaussPoly r;
  const cplx tpi(0.0, TWO_PI);
  for (const auto& b : h.blocks()) {
    Poly2 mult;
    mult.add_to(2, 0, -2.0 * b.Q(0, 0));
    mult.add_to(0, 2, 2.0 * b.Q(1, 1));
    mult.add_to(1, 0, tpi * b.uv(0));
    mult.add_to(0, 1, -tpi * b.uv(1));
    const Poly2 p = b.poly.dx().times_x() - b.poly.dxi().times_xi() + b.poly * mult;
    r.add_block({p, b.Q, b.uv});
  }
  return r;
}

GaussPoly pi2_euler2(const GaussPoly& h) { return euler(euler(h)) * cplx(-0.25); }

GaussPoly dilate(double t, const GaussPoly& h) {
  if (!(t > 0)) throw DomainError("dilate: t must be positive");
  Eigen::Matrix2d A = Eigen::Matrix2d::Identity() * t;
  return linear_substitute(h, A, t);
}

GaussPoly dilate_natural(double t, const GaussPoly& h) {
  if (!(t > 0)) throw DomainError("dilate_natural: t must be positive");
  Eigen::Matrix2d A;
  A << t, 0.0, 0.0, 1.0 / t;
  return linear_substitute(h, A);
}

GaussPoly shear(double gamma, const GaussPoly& h) {
  Eigen::Matrix2d A;
  A << 1.0, gamma, 0.0, 1.0;
  return linear_substitute(h, A);
}

GaussPoly shear(const Rational& gamma, const GaussPoly& h) { return shear(static_cast<double>(gamma), h); }

GaussPoly sigma_avg(int r, i64 l, i64 p, const GaussPoly& h) {
  if (r < 0) throw DomainError("sigma_avg: r must be >= 0");
  i64 pr = 1;
  for (int k = 0; k < r; ++k) pr *= p;
  const double step = std::pow(static_cast<double>(p), static_cast<double>(l - r));
  GaussPoly out;
  for (i64 b = 0; b < pr; ++b) out = out + shear(static_cast<double>(b) * step, h);
  return out * cplx(1.0 / static_cast<double>(pr));
}

GaussPoly symp_fourier(const GaussPoly& h) {
  GaussPoly out;
  const cplx tpi(0.0, TWO_PI);
  for (const auto& b : h.blocks()) {
    const Poly2 J1 = Poly2::linear(0.0, -tpi, tpi * b.uv(0));
    const Poly2 J2 = Poly2::linear(tpi, 0.0, tpi * b.uv(1));
    const Eigen::Matrix2cd Qi = b.Q.inverse();
    const Eigen::Matrix2cd H = 0.5 * Qi;
    const int n = std::max(0, b.poly.deg_x()) + std::max(0, b.poly.deg_xi());
    // moment polynomials p[a][c] in (x, xi), normalized by M_00
    std::vector<std::vector<Poly2>> m(n + 2, std::vector<Poly2>(n + 2));
    m[0][0] = Poly2(1.0);
    for (int d = 0; d < n; ++d)
      for (int a = 0; a <= d; ++a) {
        const int c = d - a;
        Poly2 r0 = J1 * m[a][c];
        if (a > 0) r0 += m[a - 1][c] * static_cast<double>(a);
        Poly2 r1 = J2 * m[a][c];
        if (c > 0) r1 += m[a][c - 1] * static_cast<double>(c);
        m[a + 1][c] = r0 * H(0, 0) + r1 * H(0, 1);
        m[a][c + 1] = r0 * H(1, 0) + r1 * H(1, 1);
      }
    Poly2 poly;
    for (int i = 0; i <= b.poly.deg_x(); ++i)
      for (int j = 0; j <= b.poly.deg_xi(); ++j) {
        const cplx c = b.poly.coeff(i, j);
        if (c != cplx(0.0)) poly += m[i][j] * c;
      }
    poly = poly * (PI / sqrt_det(b.Q));
    const Poly2 E = (J1 * (J1 * Qi(0, 0) + J2 * Qi(0, 1)) + J2 * (J1 * Qi(1, 0) + J2 * Qi(1, 1))) * cplx(0.25);
    out.add_block(block_from_exponent(poly, E));
  }
  return out;
}

GaussPoly partial_fourier_inv1(const GaussPoly& h) {
  GaussPoly out;
  const cplx tpi(0.0, TWO_PI);
  for (const auto& b : h.blocks()) {
    const cplx A = b.Q(0, 0);
    const Poly2 B = Poly2::linear(tpi, -2.0 * b.Q(0, 1), tpi * b.uv(0));
    Poly2 C;
    C.add_to(0, 2, -b.Q(1, 1));
    C.add_to(0, 1, tpi * b.uv(1));
    const int n = std::max(0, b.poly.deg_x());
    std::vector<Poly2> m(n + 1);
    m[0] = Poly2(1.0);
    const cplx inv2a = 1.0 / (2.0 * A);
    for (int k = 0; k < n; ++k) {
      Poly2 nx = B * m[k];
      if (k > 0) nx += m[k - 1] * static_cast<double>(k);
      m[k + 1] = nx * inv2a;
    }
    Poly2 poly;
    for (int i = 0; i <= b.poly.deg_x(); ++i) {
      Poly2 row;
      for (int j = 0; j <= b.poly.deg_xi(); ++j) row.add_to(0, j, b.poly.coeff(i, j));
      if (!row.is_zero()) poly += row * m[i];
    }
    poly = poly * std::sqrt(PI / A);
    const Poly2 E = B * B * (0.25 / A) + C;
    out.add_block(block_from_exponent(poly, E));
  }
  return out;
}

GaussPoly theta_kernel(cplx z) {
  const double y = z.imag(), a = z.real();
  if (!(y > 0)) throw DomainError("theta: Im z must be positive");
  Eigen::Matrix2cd K;
  K << 1.0, -a, -a, a * a + y * y;
  K *= PI / y;
  return GaussPoly::term(1.0, 0, 0, K);
}

cplx theta(const GaussPoly& h, cplx z) { return (h * theta_kernel(z)).integral(); }

cplx signed_power(double t, cplx s, int delta) {
  const cplx v = std::exp(s * std::log(std::abs(t)));
  return (delta == 1 && t < 0) ? -v : v;
}

cplx theta(const PhiBlock& b, cplx z) {
  const double y = z.imag(), x = z.real();
  if (!(y > 0)) throw DomainError("theta: Im z must be positive");
  if (b.delta == 1) return 0.0;
  const double c = static_cast<double>(b.c);
  if (c == 0.0) {
    if (!(b.nu.real() < 0)) throw DomainError("theta: c = 0 block needs Re nu < 0");
    return std::sqrt(y) * gamma_c(-0.5 * b.nu) * std::exp(0.5 * b.nu * std::log(PI * y));
  }
  const double arg = TWO_PI * std::abs(c) * y;
  const cplx half = 0.5 * b.nu;
  const cplx k = half.real() == 0.0 ? cplx(bessel_k_first(2.0 * half.imag(), arg)) : bessel_k(half, arg);
  return 2.0 * std::sqrt(y) * std::exp(-half * std::log(std::abs(c))) * k * e2pi(c * x);
}

cplx theta_s11(cplx z) {
  const double y = z.imag(), a = z.real();
  if (!(y > 0)) throw DomainError("theta: Im z must be positive");
  auto f = [&](double x) {
    const double d = x - a;
    return e2pi(x) * std::exp(-PI * (d * d + y * y) / y);
  };
  const double w = 7.0 * std::sqrt(y);
  return composite_gl<20>(f, a - w, a + w, 40);
}

double transfer_check(const GaussPoly& h, cplx z, double step) {
  const double y = z.imag();
  if (!(y > 0)) throw DomainError("transfer_check: Im z must be positive");
  if (h.is_zero()) return 0.0;
  const double s = step > 0 ? step : 0.01 * y;
  auto th = [&](double dx, double dy) { return theta(h, z + cplx(dx, dy)); };
  const cplx f0 = th(0, 0);
  const cplx fxx = (-th(2 * s, 0) + 16.0 * th(s, 0) - 30.0 * f0 + 16.0 * th(-s, 0) - th(-2 * s, 0)) / (12.0 * s * s);
  const cplx fyy = (-th(0, 2 * s) + 16.0 * th(0, s) - 30.0 * f0 + 16.0 * th(0, -s) - th(0, -2 * s)) / (12.0 * s * s);
  const cplx lap = -y * y * (fxx + fyy);
  return std::abs(theta(pi2_euler2(h), z) - (lap - 0.25 * f0));
}

double min_decay(const GaussPoly& h) {
  double mu = std::numeric_limits<double>::infinity();
  for (const auto& b : h.blocks()) {
    const Eigen::Matrix2d re = b.Q.real();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(re);
    mu = std::min(mu, es.eigenvalues()(0));
  }
  return mu;
}

namespace {

std::pair<double, double> mellin_range(const GaussPoly& h, double x, double xi) {
  const double r2 = x * x + xi * xi;
  if (r2 == 0.0) throw DomainError("mellin_slice: (x, xi) must be nonzero");
  const double mu = min_decay(h);
  return {-40.0, 0.5 * std::log(90.0 / (mu * r2)) + 1.0};
}

}  // namespace

cplx mellin_slice(const PlaneFn& f, double lambda, double x, double xi, double s_lo, double s_hi, double tol) {
  if (x == 0.0 && xi == 0.0) throw DomainError("mellin_slice: (x, xi) must be nonzero");
  auto g = [&](double s) {
    const double e = std::exp(s);
    return std::exp(cplx(s, lambda * s)) * f(e * x, e * xi);
  };
  const double edge = std::max(std::abs(g(s_lo)), std::abs(g(s_hi)));
  if (edge > 1e-3 * tol) throw ConvergenceError("mellin_slice: tail bound fails at the integration limits");
  cplx v;
  trapezoid_until(g, s_lo, s_hi, tol * TWO_PI, 256, &v);
  return v / TWO_PI;
}

cplx mellin_slice(const GaussPoly& h, double lambda, double x, double xi, double tol) {
  const auto [lo, hi] = mellin_range(h, x, xi);
  return mellin_slice([&](double a, double b) { return h(a, b); }, lambda, x, xi, lo, hi, tol);
}

cplx mellin_reconstruct(const GaussPoly& h, double x, double xi, double lambda_max, double dlambda) {
  const auto [lo, hi] = mellin_range(h, x, xi);
  const double ds = 0.01;
  const int ns = static_cast<int>(std::ceil((hi - lo) / ds));
  const double hs = (hi - lo) / ns;
  std::vector<cplx> g(ns + 1);
  for (int k = 0; k <= ns; ++k) {
    const double s = lo + k * hs;
    const double e = std::exp(s);
    g[k] = e * h(e * x, e * xi) * ((k == 0 || k == ns) ? 0.5 : 1.0);
  }
  const int nl = static_cast<int>(std::round(lambda_max / dlambda));
  cplx total = 0.0;
  for (int j = -nl; j <= nl; ++j) {
    const double lam = j * dlambda;
    cplx ph = std::exp(cplx(0.0, lam * lo));
    const cplx step = std::exp(cplx(0.0, lam * hs));
    cplx acc = 0.0;
    for (int k = 0; k <= ns; ++k) {
      acc += g[k] * ph;
      ph *= step;
    }
    const cplx slice = acc * hs / TWO_PI;
    total += slice * ((j == -nl || j == nl) ? 0.5 : 1.0);
  }
  return total * dlambda;
}

void SpectralWindow::validate() const {
  if (!(beta > 0)) throw DomainError("SpectralWindow: beta must be positive");
  if (N < 1) throw DomainError("SpectralWindow: N must be >= 1");
}

cplx SpectralWindow::psi(double t) const {
  const double nb = N * beta;
  return std::exp(-PI * t * t / nb) / std::sqrt(nb) * e2pi(-lambda_center * t);
}

double SpectralWindow::factor(double lambda) const {
  const double d = lambda - lambda_center;
  return std::exp(-PI * N * beta * d * d);
}

std::vector<std::array<double, 2>> GridFunction::points() const {
  std::vector<std::array<double, 2>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double x = -L + 2.0 * L * (i + 0.5) / n;
      const double xi = -L + 2.0 * L * (j + 0.5) / n;
      if (std::abs(x) < eps0 || std::abs(xi) < eps0) continue;
      out.push_back({x, xi});
    }
  return out;
}

std::vector<cplx> GridFunction::sample() const {
  std::vector<cplx> out;
  for (const auto& p : points()) out.push_back(f(p[0], p[1]));
  return out;
}

GridFunction window_apply(const SpectralWindow& w, const PlaneFn& h, double tol) {
  w.validate();
  GridFunction g;
  g.f = [w, h, tol](double x, double xi) {
    const double span = std::sqrt(w.N * w.beta * 46.0 / PI);
    auto integrand = [&](double t) {
      const double e = std::exp(TWO_PI * t);
      return w.psi(t) * e * h(e * x, e * xi);
    };
    cplx v;
    trapezoid_until(integrand, -span, span, tol, 256, &v);
    return v;
  };
  return g;
}

GridFunction window_apply(const SpectralWindow& w, const GaussPoly& h, double tol) {
  return window_apply(w, PlaneFn([h](double a, double b) { return h(a, b); }), tol);
}

cplx bihom_eval(cplx rho, cplx nu, int delta, double x, double xi) {
  if (x == 0.0 || xi == 0.0) throw DomainError("bihom_eval: x and xi must be nonzero");
  return signed_power(x, 0.5 * (rho + nu - 2.0), delta) * signed_power(xi, 0.5 * (-rho + nu), delta);
}

cplx periodize(const GaussPoly& h, double x, double xi) {
  if (xi == 0.0) throw DomainError("periodize: xi must be nonzero");
  const double mu = min_decay(h);
  const i64 n = static_cast<i64>(std::ceil((std::abs(x) + 9.0 / std::sqrt(mu)) / std::abs(xi))) + 2;
  cplx s = 0.0;
  for (i64 k = -n; k <= n; ++k) s += h(x + static_cast<double>(k) * xi, xi);
  return s;
}

cplx eval_word_numeric(const Word& w, i64 p, const PlaneFn& f, double x, double xi) {
  std::function<cplx(std::size_t, double, double)> ev = [&](std::size_t i, double a, double b) -> cplx {
    if (i == w.size()) return f(a, b);
    const Generator& g = w[i];
    const double pd = static_cast<double>(p);
    switch (g.kind) {
      case Generator::Kind::RPow: {
        const double t = std::pow(pd, 0.5 * static_cast<double>(g.j));
        return ev(i + 1, t * a, b / t) / t;
      }
      case Generator::Kind::Sigma:
      case Generator::Kind::SigmaUpper: {
        const i64 l = g.kind == Generator::Kind::Sigma ? 0 : g.l;
        i64 pr = 1;
        for (int k = 0; k < g.r; ++k) pr *= p;
        const double step = std::pow(pd, static_cast<double>(l - g.r));
        cplx s = 0.0;
        for (i64 c = 0; c < pr; ++c) s += ev(i + 1, a + static_cast<double>(c) * step * b, b);
        return s / static_cast<double>(pr);
      }
      case Generator::Kind::Tau: return ev(i + 1, a + static_cast<double>(g.gamma) * b, b);
    }
    return 0.0;
  };
  return ev(0, x, xi);
}

cplx eval_hecke_power_numeric(int k, i64 p, const PlaneFn& f, double x, double xi) {
  if (k == 0) return f(x, xi);
  const Word a = {Generator::R(1)};
  const Word b = {Generator::R(-1), Generator::S(1)};
  PlaneFn inner = [&](double u, double v) { return eval_hecke_power_numeric(k - 1, p, f, u, v); };
  return eval_word_numeric(a, p, inner, x, xi) + eval_word_numeric(b, p, inner, x, xi);
}

}  // namespace automorphe
