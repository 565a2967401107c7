#include <doctest.h>

#include "automorphe/halfplane.hpp"
#include "automorphe/pairings.hpp"

using namespace automorphe;

TEST_SUITE("halfplane") {
  TEST_CASE("Eisenstein series symmetries") {
    const cplx z(0.3, 1.1);
    for (cplx nu : {cplx(0.0, 2.0), cplx(0.0, 9.0), cplx(0.4, 1.5)}) {
      const cplx v = eval_eisenstein(nu, z, 40);
      CHECK(std::abs(eval_eisenstein(nu, z + 1.0, 40) - v) < 1e-12);
      CHECK(std::abs(eval_eisenstein(nu, -1.0 / z, 40) - v) < 1e-6);
      CHECK(std::abs(eval_eisenstein(-nu, z, 40) - v) < 1e-8);
    }
    CHECK_THROWS_AS(eval_eisenstein(1.0, z), PoleError);
    CHECK_THROWS_AS(eval_eisenstein(-1.0, z), PoleError);
    CHECK_THROWS_AS(eval_eisenstein(cplx(0, 1), cplx(0.2, -1.0)), DomainError);
  }

  TEST_CASE("Eisenstein truncation majorant") {
    const cplx nu(0.0, 3.0), z(0.1, 0.4);
    for (int K : {3, 6, 10}) {
      const double diff = std::abs(eval_eisenstein(nu, z, K) - eval_eisenstein(nu, z, 4 * K));
      CHECK(diff <= eisenstein_tail_bound(nu, z.imag(), K));
    }
  }

  TEST_CASE("Maass expansions") {
    MaassExpansion e;
    e.lambda = 5.0;
    e.coeffs = {{1, 1.0}, {2, cplx(0.3, -0.2)}, {3, -0.7}};
    e.K = 3;
    const cplx z(0.21, 0.9);
    for (int delta : {0, 1}) {
      e.parity = delta;
      const double sign = delta == 0 ? 1.0 : -1.0;
      CHECK(std::abs(eval_maass(e, -std::conj(z)) - sign * eval_maass(e, z)) < 1e-14);
    }
    MaassExpansion one;
    one.lambda = 5.0;
    one.coeffs = {{1, 1.0}};
    one.K = 1;
    const double y = 0.8;
    const double k = bessel_k_imag(one.lambda, TWO_PI * y);
    CHECK(std::abs(eval_maass(one, cplx(0.0, y)) - 2.0 * std::sqrt(y) * k) < 1e-13);
    one.parity = 1;
    CHECK(std::abs(eval_maass(one, cplx(0.0, y))) < 1e-15);
    MaassExpansion bad;
    bad.coeffs = {{1, 2.0}};
    CHECK_THROWS_AS(bad.validate(), DomainError);
  }

  TEST_CASE("classical Hecke operators") {
    for (i64 p : {2, 3, 5}) {
      const cplx v = hecke_classical(p, [](cplx) { return cplx(1.0); }, cplx(0.1, 1.2));
      CHECK(std::abs(v - double(p + 1) / std::sqrt(double(p))) < 1e-14);
      for (double lam : {2.0, 10.0}) {
        const cplx nu(0.0, lam), z(0.15, 1.05);
        const HalfPlaneFn f = [&](cplx w) { return eval_eisenstein(nu, w); };
        const cplx eig = std::pow(double(p), 0.5 * nu) + std::pow(double(p), -0.5 * nu);
        CHECK(std::abs(hecke_classical(p, f, z) - eig * f(z)) < 1e-6);
      }
    }
    const HalfPlaneFn g = [](cplx w) { return w * w; };
    CHECK(hecke_minus_one(g, cplx(0.3, 1.0)) == g(cplx(-0.3, 1.0)));
    CHECK_THROWS_AS(hecke_classical(4, g, cplx(0, 1)), DomainError);
  }

  TEST_CASE("coefficient Hecke operators") {
    for (double lam : {0.0, 2.0, 10.0})
      for (i64 p : {2, 3, 5}) {
        const MaassExpansion e = eisenstein_model(lam, 60 * p);
        const MaassExpansion t = hecke_coeff(p, e);
        CHECK(t.coeffs.at(1) == e.coeffs.at(p));
        const cplx eig = std::pow(double(p), cplx(0.0, 0.5 * lam)) + std::pow(double(p), cplx(0.0, -0.5 * lam));
        double worst = 0.0;
        for (const auto& [k, v] : t.coeffs) worst = std::max(worst, std::abs(v - eig * e.b(k)));
        CHECK(worst < 1e-12);
      }
    const MaassExpansion e = eisenstein_model(4.0, 90);
    const MaassExpansion a = hecke_coeff(2, hecke_coeff(3, e)), b = hecke_coeff(3, hecke_coeff(2, e));
    for (const auto& [k, v] : a.coeffs)
      if (b.coeffs.count(k)) CHECK(std::abs(v - b.coeffs.at(k)) < 1e-12);
    MaassExpansion gap = eisenstein_model(4.0, 20);
    gap.coeffs.erase(14);
    CHECK_THROWS_AS(hecke_coeff(2, gap), RangeError);
    MaassExpansion tiny;
    tiny.coeffs = {{1, 1.0}};
    CHECK_THROWS_AS(hecke_coeff(2, tiny), RangeError);
  }

  TEST_CASE("classical and coefficient actions agree") {
    for (i64 p : {2, 3}) {
      MaassExpansion e = eisenstein_model(6.0, 60 * p);
      e.K = static_cast<int>(60 * p);
      const MaassExpansion t = hecke_coeff(p, e);
      const cplx z(0.1, 1.1);
      const cplx lhs = hecke_classical(p, [&](cplx w) { return eval_maass(e, w); }, z);
      CHECK(std::abs(lhs - eval_maass(t, z)) < 1e-6);
    }
  }

  TEST_CASE("Selberg Poincare series") {
    const cplx z(0.2, 1.3);
    const cplx v = poincare_selberg(1, z).value;
    CHECK(std::abs(poincare_selberg(1, z + 1.0).value - v) < 1e-8);
    CHECK(std::abs(poincare_selberg(1, -1.0 / z).value - v) < 1e-5);
    CHECK_THROWS_AS(poincare_selberg(0, z), DomainError);
    for (cplx w : {cplx(0.0, 1.0), cplx(0.25, 1.1), cplx(-0.4, 0.9), cplx(0.1, 1.6), cplx(0.5, 1.2)})
      CHECK(std::abs(pair_B1(theta_kernel(w)).value - poincare_selberg(1, w).value) < 1e-4);
  }

  TEST_CASE("spectral coefficients") {
    CHECK(std::abs(spec_coeff_eis(1, 1e-3)) < 1e-2);
    CHECK_THROWS_AS(spec_coeff_eis(1, 0.0), PoleError);
    for (double lam : {0.5, 3.0, 9.2}) {
      CHECK(std::abs(spec_coeff_cusp(1, lam) - std::conj(spec_coeff_cusp(1, -lam))) < 1e-15);
      const cplx ratio = spec_coeff_cusp(2, lam) / spec_coeff_cusp(1, lam);
      CHECK(std::abs(ratio - (1.0 + lam * lam / 4.0) * (2.0 / 3.0) / (4.0 * PI)) < 1e-12);
      const cplx er = spec_coeff_eis(2, lam) / spec_coeff_eis(1, lam);
      CHECK(std::abs(er - (1.0 + lam * lam / 4.0) * (2.0 / 3.0) / (4.0 * PI)) < 1e-12);
    }
  }

  TEST_CASE("L-functions") {
    for (double lam : {0.0, 3.0}) {
      const MaassExpansion e = eisenstein_model(lam, 60000);
      const cplx want = zeta_c(cplx(3.0, 0.5 * lam)) * zeta_c(cplx(3.0, -0.5 * lam));
      CHECK(std::abs(l_func(e, 3.0) - want) < 1e-8);
      CHECK(std::abs(l_func(e, 3.0, LMode::Euler) - l_func(e, 3.0)) < 1e-8);
    }
    MaassExpansion one;
    one.coeffs = {{1, 1.0}};
    CHECK(l_func(one, 2.5) == cplx(1.0));
    CHECK_THROWS_AS(l_func(one, 1.2), ConvergenceError);
    const MaassExpansion e = eisenstein_model(3.0, 200);
    CHECK(std::isfinite(func_eq_residual(e, cplx(2.0, 0.5))));
    CHECK(std::isfinite(std::abs(lambda_completed(e, 2.0))));
  }
}
