#include <doctest.h>

#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "automorphe/lab.hpp"
#include "automorphe/planedist.hpp"
#include "automorphe/quad.hpp"

using namespace automorphe;

namespace {

const std::vector<std::pair<double, double>> kPoints = {{0.3, 0.7}, {-0.5, 0.4}, {0.8, -0.6}, {-0.2, -1.1}, {1.0, 0.25}};

double max_diff(const GaussPoly& a, const GaussPoly& b) {
  double m = 0.0;
  for (auto [x, xi] : kPoints) m = std::max(m, std::abs(a(x, xi) - b(x, xi)));
  return m;
}

// central differences of h along x and xi
cplx d_x(const GaussPoly& h, double x, double xi) {
  const double e = 1e-4;
  return (-h(x + 2 * e, xi) + 8.0 * h(x + e, xi) - 8.0 * h(x - e, xi) + h(x - 2 * e, xi)) / (12 * e);
}
cplx d_xi(const GaussPoly& h, double x, double xi) {
  const double e = 1e-4;
  return (-h(x, xi + 2 * e) + 8.0 * h(x, xi + e) - 8.0 * h(x, xi - e) + h(x, xi - 2 * e)) / (12 * e);
}

template <class F>
cplx quad_line(F f, double a, double b) {
  using gk = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double re = gk::integrate([&](double t) { return f(t).real(); }, a, b, 15, 1e-14);
  const double im = gk::integrate([&](double t) { return f(t).imag(); }, a, b, 15, 1e-14);
  return {re, im};
}

}  // namespace

TEST_SUITE("planedist") {
  TEST_CASE("gausspoly evaluation and integral") {
    const GaussPoly g = GaussPoly::gaussian();
    CHECK(std::abs(g(0.3, 0.4) - std::exp(-PI * 0.25)) < 1e-15);
    CHECK(std::abs(g.integral() - 1.0) < 1e-14);
    const GaussPoly h = default_test_function();
    const cplx num = quad_line([&](double x) { return quad_line([&](double xi) { return h(x, xi); }, -8, 8); }, -8, 8);
    CHECK(std::abs(h.integral() - num) < 1e-9);
    CHECK(GaussPoly().is_zero());
    CHECK(h.parity() == Parity::Even);
  }

  TEST_CASE("euler operators") {
    const GaussPoly g = GaussPoly::gaussian();
    for (auto [x, xi] : kPoints) {
      const double r2 = x * x + xi * xi;
      CHECK(std::abs(euler(g)(x, xi) - (1.0 - TWO_PI * r2) * std::exp(-PI * r2)) < 1e-14);
    }
    CHECK(euler(GaussPoly()).is_zero());
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
      const GaussPoly h = random_gausspoly(rng);
      CHECK(max_diff(euler(euler_natural(h)), euler_natural(euler(h))) < 1e-10);
      for (auto [x, xi] : kPoints) {
        const cplx e = x * d_x(h, x, xi) + xi * d_xi(h, x, xi);
        CHECK(std::abs(euler(h)(x, xi) - (e + h(x, xi))) < 1e-7);
        CHECK(std::abs(euler_natural(h)(x, xi) - (x * d_x(h, x, xi) - xi * d_xi(h, x, xi))) < 1e-7);
      }
      // pi^2 E^2 = -(E')^2 / 4 with E' = 2 i pi E
      CHECK(max_diff(pi2_euler2(h), euler(euler(h)) * (-0.25)) < 1e-10);
    }
  }

  TEST_CASE("dilations and shears") {
    const GaussPoly h = default_test_function();
    CHECK(max_diff(dilate(1.0, h), h) < 1e-15);
    CHECK(max_diff(dilate(0.5, dilate(3.0, h)), dilate(1.5, h)) < 1e-13);
    CHECK(max_diff(dilate(2.0, dilate_natural(0.7, h)), dilate_natural(0.7, dilate(2.0, h))) < 1e-13);
    for (auto [x, xi] : kPoints) {
      CHECK(std::abs(dilate(1.7, h)(x, xi) - 1.7 * h(1.7 * x, 1.7 * xi)) < 1e-14);
      CHECK(std::abs(dilate_natural(1.7, h)(x, xi) - h(1.7 * x, xi / 1.7)) < 1e-14);
      CHECK(std::abs(shear(Rational(3, 4), h)(x, xi) - h(x + 0.75 * xi, xi)) < 1e-14);
    }
    const GaussPoly g = GaussPoly::gaussian();
    const double n0 = (g * g.conj()).integral().real();
    for (double t : {0.3, 2.5}) {
      const GaussPoly d = dilate(t, g);
      CHECK((d * d.conj()).integral().real() == doctest::Approx(n0).epsilon(1e-13));
    }
  }

  TEST_CASE("sigma averages") {
    const GaussPoly h = default_test_function();
    CHECK(max_diff(sigma_avg(0, 0, 2, h), h) < 1e-15);
    for (i64 p : {2, 3}) {
      const GaussPoly twice = sigma_avg(1, 0, p, sigma_avg(1, 0, p, h));
      for (auto [x, xi] : kPoints) {
        cplx direct = 0.0;
        for (i64 b = 0; b < p; ++b)
          for (i64 c = 0; c < p; ++c) direct += h(x + double(b + c) / double(p) * xi, xi);
        CHECK(std::abs(twice(x, xi) - direct / double(p * p)) < 1e-13);
      }
    }
    // on a Phi block with c = k the average keeps k only when p^r | k
    const cplx nu(0.0, 1.3);
    for (int k : {1, 2, 4, 6, 8}) {
      const PlaneFn phi = [&](double x, double xi) { return std::exp((-1.0 - nu) * std::log(std::abs(xi))) * e2pi(k * x / xi); };
      for (int r = 0; r <= 3; ++r) {
        const cplx v = eval_word_numeric(parse_word("s" + std::to_string(r)), 2, phi, 0.37, 0.81);
        const double keep = (k % (1 << r) == 0) ? 1.0 : 0.0;
        CHECK(std::abs(v - keep * phi(0.37, 0.81)) < 1e-12);
      }
    }
  }

  TEST_CASE("symplectic Fourier transform") {
    const GaussPoly g = GaussPoly::gaussian();
    CHECK(max_diff(symp_fourier(g), g) < 1e-14);
    const GaussPoly h = default_test_function();
    CHECK(max_diff(symp_fourier(symp_fourier(h)), h) < 1e-12);
    std::mt19937_64 rng(5);
    const GaussPoly a = random_gausspoly(rng), b = random_gausspoly(rng);
    CHECK(max_diff(symp_fourier(a * 2.0 + b), symp_fourier(a) * 2.0 + symp_fourier(b)) < 1e-12);
    // quadrature oracle at one point
    const double x = 0.4, xi = -0.3;
    const cplx num = quad_line(
        [&](double y) {
          return quad_line([&](double eta) { return h(y, eta) * e2pi(x * eta - y * xi); }, -7, 7);
        },
        -7, 7);
    CHECK(std::abs(symp_fourier(h)(x, xi) - num) < 1e-9);
  }

  TEST_CASE("partial Fourier transform in the first variable") {
    const GaussPoly h = default_test_function();
    const GaussPoly f = partial_fourier_inv1(h);
    for (auto [x, xi] : kPoints) {
      const cplx num = quad_line([&](double y) { return h(y, xi) * e2pi(x * y); }, -8, 8);
      CHECK(std::abs(f(x, xi) - num) < 1e-10);
    }
  }

  TEST_CASE("theta transform") {
    const GaussPoly h = default_test_function();
    for (cplx z : {cplx(0, 1), cplx(0.3, 1.4), cplx(-0.45, 0.7)}) {
      CHECK(std::abs(theta(symp_fourier(h), z) - theta(h, z)) < 1e-9);
      const GaussPoly k = theta_kernel(z);
      CHECK(std::abs(theta(h, z) - (h * k).integral()) < 1e-13);
    }
    CHECK_THROWS_AS(theta(h, cplx(0.2, -1.0)), DomainError);
    CHECK_THROWS_AS(theta(h, cplx(0.2, 0.0)), DomainError);
    for (cplx z : {cplx(0, 1), cplx(0.2, 0.6), cplx(-1.3, 2.0)}) {
      const cplx want = std::sqrt(z.imag()) * std::exp(cplx(0, TWO_PI) * z);
      CHECK(std::abs(theta_s11(z) - want) < 1e-8);
    }
  }

  TEST_CASE("theta of a Phi block matches direct integration") {
    for (double lam : {0.0, 2.0, 7.5})
      for (int k : {1, -2, 3}) {
        PhiBlock b;
        b.nu = cplx(0.0, lam);
        b.c = k;
        const cplx z(0.2, 0.9);
        const double y = z.imag();
        // the x integral is a Gaussian; what remains is a xi integral
        const cplx num = 2.0 * quad_line(
                                   [&](double t) {
                                     return std::sqrt(y) * std::exp((-1.0 - b.nu) * std::log(t)) *
                                            std::exp(-PI * y * (t * t + double(k * k) / (t * t)));
                                   },
                                   0.0, 40.0) *
                         e2pi(k * z.real());
        CHECK(std::abs(theta(b, z) - num) < 1e-9);
      }
  }

  TEST_CASE("transfer identity") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 4; ++i) {
      const GaussPoly h = random_gausspoly(rng);
      for (cplx z : {cplx(0, 1), cplx(0.5, 1), cplx(0, 2)}) CHECK(transfer_check(h, z) < 1e-6);
    }
    CHECK(transfer_check(GaussPoly(), cplx(0, 1)) == 0.0);
  }

  TEST_CASE("Mellin slices") {
    const GaussPoly g = GaussPoly::gaussian();
    for (double lam : {0.0, 1.5, -4.0})
      for (auto [x, xi] : kPoints) {
        const double r = std::hypot(x, xi);
        const cplx s(1.0, lam);
        const cplx want = gamma_c(0.5 * s) * std::exp(-0.5 * s * std::log(PI)) * std::exp(-s * std::log(r)) / (4.0 * PI);
        CHECK(std::abs(mellin_slice(g, lam, x, xi) - want) < 1e-9);
      }
    const GaussPoly h = default_test_function();
    for (double lam : {0.0, 2.0, 6.0}) {
      const cplx a = mellin_slice(h, lam, 0.6, -0.2), b = mellin_slice(h, lam, 1.2, -0.4);
      CHECK(std::abs(b - std::exp(cplx(-1.0, -lam) * std::log(2.0)) * a) < 1e-8);
      // the Euler dilation acts on a slice by a scalar
      const cplx d = mellin_slice(dilate(1.8, h), lam, 0.6, -0.2);
      CHECK(std::abs(d - std::exp(cplx(0.0, -lam) * std::log(1.8)) * a) < 1e-8);
    }
    CHECK_THROWS_AS(mellin_slice(h, 1.0, 0.0, 0.0), DomainError);
    CHECK(std::abs(mellin_reconstruct(h, 1.0, 1.0) - h(1.0, 1.0)) < 1e-6);
  }

  TEST_CASE("spectral window") {
    const GaussPoly h = default_test_function();
    SpectralWindow w{2.0, 2, 0.1};
    CHECK(w.factor(2.0) == 1.0);
    CHECK(w.factor(3.0) == doctest::Approx(std::exp(-PI * 0.2)));
    // Psi integrates to the multiplier at lambda = 0
    const cplx tot = adaptive_gl([&](double t) { return w.psi(t); }, -4.0, 4.0, 1e-13);
    CHECK(std::abs(tot - std::exp(-PI * 0.2 * 4.0)) < 1e-10);
    const GridFunction g = window_apply(w, h, 1e-12);
    const double hi = 0.5 * std::log(90.0 / (min_decay(h) * 0.49)) + 1.0 + TWO_PI * std::sqrt(12.0 * 0.2);
    for (double lam : {-3.0, 0.0, 2.0, 4.5}) {
      const cplx a = mellin_slice(g.f, -lam, 0.6, 0.35, -40.0, hi, 1e-12);
      const cplx b = mellin_slice(h, -lam, 0.6, 0.35, 1e-12);
      CHECK(std::abs(a - w.factor(lam) * b) < 1e-6 * std::max(1.0, std::abs(b)));
    }
    const GaussPoly h2 = GaussPoly::gaussian();
    const GridFunction sum = window_apply(w, h + h2 * 2.0, 1e-12), g2 = window_apply(w, h2, 1e-12);
    for (auto [x, xi] : kPoints) CHECK(std::abs(sum(x, xi) - g(x, xi) - 2.0 * g2(x, xi)) < 1e-10);
    CHECK(g.points().size() == 256);
    CHECK(g.sample().size() == 256);
    SpectralWindow bad{0.0, 0, 0.1};
    CHECK_THROWS_AS(bad.validate(), DomainError);
  }

  TEST_CASE("bihomogeneous functions") {
    const cplx rho(0.3, 1.1), nu(-0.2, 2.0);
    for (int delta : {0, 1}) {
      const cplx v = bihom_eval(rho, nu, delta, 0.7, -1.3);
      CHECK(std::abs(bihom_eval(rho, nu, delta, 1.4, -2.6) - std::pow(2.0, nu - 1.0) * v) < 1e-13);
      CHECK(std::abs(bihom_eval(rho, nu, delta, 1.4, -0.65) - std::pow(2.0, rho - 1.0) * v) < 1e-13);
    }
    CHECK(std::abs(bihom_eval(rho, nu, 1, -0.7, 1.3) + bihom_eval(rho, nu, 1, 0.7, 1.3)) < 1e-14);
    CHECK_THROWS_AS(bihom_eval(rho, nu, 0, 0.0, 1.0), DomainError);
    CHECK(signed_power(-2.0, 1.0, 1) == cplx(-2.0));
  }

  TEST_CASE("periodization is shear invariant") {
    const GaussPoly h = default_test_function();
    for (auto [x, xi] : kPoints) CHECK(std::abs(periodize(h, x + xi, xi) - periodize(h, x, xi)) < 1e-13);
  }
}
