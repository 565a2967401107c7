#include <doctest.h>

#include <cmath>

#include "automorphe/arith.hpp"
#include "automorphe/phiblock.hpp"

using namespace automorphe;

namespace {

// double loop over all (x, y) with x y = 1 mod m
cplx kloosterman_pairs(i64 k, i64 m) {
  cplx s = 0.0;
  for (i64 x = 0; x < m; ++x)
    for (i64 y = 0; y < m; ++y)
      if ((x * y) % m == 1 % m) s += e2pi(-static_cast<double>((y + mod_pos(k, m) * x) % m) / m);
  return s;
}

i64 gcd_loop(i64 a, i64 b) {
  a = std::llabs(a), b = std::llabs(b);
  for (i64 d = std::max(a, b); d >= 1; --d)
    if (a % d == 0 && b % d == 0) return d;
  return 0;
}

}  // namespace

TEST_SUITE("arith") {
  TEST_CASE("mod_inv") {
    CHECK(mod_inv(3, 7) == 5);
    for (i64 m : {2, 9, 100, 997}) CHECK(mod_inv(1, m) == 1);
    CHECK_THROWS_AS(mod_inv(2, 4), DomainError);
    for (i64 m = 2; m < 60; ++m)
      for (i64 a = 1; a < m; ++a)
        if (gcd64(a, m) == 1) CHECK(mod_pos(a * mod_inv(a, m), m) == 1);
  }

  TEST_CASE("kloosterman examples") {
    CHECK(std::abs(kloosterman(1, 2) - 1.0) < 1e-12);
    CHECK(std::abs(kloosterman(1, 3) + 1.0) < 1e-12);
    CHECK(std::abs(kloosterman(2, 3) - 2.0) < 1e-12);
    CHECK(std::abs(kloosterman(5, 1) - 1.0) < 1e-12);
  }

  TEST_CASE("kloosterman matches the pair loop") {
    for (i64 m = 1; m <= 60; ++m)
      for (i64 k = -6; k <= 6; ++k) {
        const cplx ref = kloosterman_pairs(k, m);
        CHECK(std::abs(ref.imag()) < 1e-9);
        CHECK(std::abs(kloosterman(k, m) - ref.real()) < 1e-9);
      }
  }

  TEST_CASE("kloosterman periodic in k and within the Weil bound") {
    for (i64 m = 1; m <= 300; ++m)
      for (i64 k : {-7, 1, 2, 12, 49}) {
        CHECK(std::abs(kloosterman(k, m) - kloosterman(mod_pos(k, m), m)) < 1e-9);
        const double weil = divisor_count(m) * std::sqrt(double(gcd64(k, m))) * std::sqrt(double(m));
        CHECK(std::abs(kloosterman(k, m)) <= weil + 1e-9);
      }
  }

  TEST_CASE("divisor_sigma") {
    CHECK(std::abs(divisor_sigma(1.0, 6) - 12.0) < 1e-12);
    for (i64 p : {2, 3, 13, 101}) CHECK(std::abs(divisor_sigma(0.0, p) - 2.0) < 1e-12);
    CHECK(std::abs(divisor_sigma(cplx(0.3, 4.0), 1) - 1.0) < 1e-14);
    CHECK(std::abs(divisor_sigma(2.0, -10) - 130.0) < 1e-10);
    // sigma_{-nu}(k) = k^{-nu} sigma_nu(k)
    const cplx nu(0.2, 3.0);
    for (i64 k : {12, 30, 64}) CHECK(std::abs(divisor_sigma(-nu, k) - std::pow(double(k), -nu) * divisor_sigma(nu, k)) < 1e-12);
  }

  TEST_CASE("phi coefficients") {
    CharacterSpec triv;
    triv.theta = {{2, 1.0}, {3, 1.0}, {5, 1.0}};
    CHECK(std::abs(phi_coeff(triv, 1) - 2.0) < 1e-14);
    CHECK(std::abs(phi_coeff(triv, 2) - 4.0) < 1e-14);
    CharacterSpec ch;
    ch.parity = 1;
    ch.lambda = 3.7;
    ch.theta = {{2, cplx(1.5, 0.0)}, {3, std::polar(1.0, 0.4)}, {5, cplx(0.3, 0.8)}};
    CHECK(std::abs(phi_coeff(ch, 1) - 2.0) < 1e-14);
    for (i64 p : {2, 3, 5}) {
      const cplx bp = 0.5 * phi_coeff(ch, p) * std::exp(cplx(0.0, -0.5 * ch.lambda * std::log(double(p))));
      CHECK(std::abs(bp - (ch.theta[p] + 1.0 / ch.theta[p])) < 1e-12);
    }
    // multiplicative across coprime arguments, phi(mn) = phi(m) phi(n) / 2 because phi(1) = 2
    CHECK(std::abs(phi_coeff(ch, 8 * 9) - 0.5 * phi_coeff(ch, 8) * phi_coeff(ch, 9)) < 1e-11);
    CHECK(std::abs(phi_coeff(ch, 4 * 25) - 0.5 * phi_coeff(ch, 4) * phi_coeff(ch, 25)) < 1e-11);
    CHECK_THROWS_AS(phi_coeff(ch, 7), DomainError);
    CHECK_THROWS_AS(phi_coeff(ch, 0), DomainError);
  }

  TEST_CASE("unimodular completion") {
    const UnimodularRep a = complete_column(1, 0);
    CHECK(a.n1 == 0);
    CHECK(a.m1 == 1);
    const UnimodularRep b = complete_column(0, 1);
    CHECK(b.n1 == -1);
    CHECK(b.m1 == 0);
    for (const auto& r : coprime_reps(40)) {
      const BigInt det = BigInt(r.n) * r.m1 - BigInt(r.m) * r.n1;
      CHECK(det == 1);
      CHECK(gcd_loop(r.n, r.m) == 1);
    }
  }

  TEST_CASE("coprime count density") {
    const auto reps = coprime_reps(100);
    std::size_t brute = 0;
    for (i64 n = -100; n <= 100; ++n)
      for (i64 m = -100; m <= 100; ++m)
        if ((n != 0 || m != 0) && gcd64(n, m) == 1) ++brute;
    CHECK(reps.size() == brute);
    CHECK(std::abs(double(reps.size()) / (200.0 * 200.0) - 6.0 / (PI * PI)) < 0.01);
  }

  TEST_CASE("kloosterman zeta") {
    const TruncatedSum t = kloosterman_zeta(2.0, 1, 100);
    cplx brute = 0.0;
    for (i64 m = 1; m <= 100; ++m) brute += kloosterman_pairs(1, m) * std::pow(double(m), -4.0);
    CHECK(std::abs(t.value - brute) < 1e-12);
    const TruncatedSum a = kloosterman_zeta(2.0, 1, 200), b = kloosterman_zeta(2.0, 1, 400);
    CHECK(std::abs(a.value - b.value) <= a.tail_bound);
    CHECK(a.tail_bound > 0);
    CHECK_THROWS_AS(kloosterman_zeta(0.7, 1, 10), DomainError);
  }

  TEST_CASE("arithmetic helpers") {
    CHECK(mobius(30) == -1);
    CHECK(mobius(12) == 0);
    CHECK(divisor_count(36) == 9);
    CHECK(primes_upto(30).size() == 10);
    CHECK(is_prime(997));
    CHECK_FALSE(is_prime(1));
  }
}
