#include "automorphe/arith.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace automorphe {

i64 gcd64(i64 a, i64 b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    const i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<i64> primes_upto(i64 n) {
  std::vector<i64> out;
  if (n < 2) return out;
  std::vector<bool> comp(static_cast<std::size_t>(n + 1), false);
  for (i64 i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (i64 j = i * i; j <= n; j += i) comp[j] = true;
  }
  return out;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  n = std::llabs(n);
  std::vector<std::pair<i64, int>> out;
  for (i64 p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int divisor_count(i64 n) {
  int d = 1;
  for (auto [p, e] : factorize(n)) d *= e + 1;
  return d;
}

int mobius(i64 n) {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

i64 mod_inv(i64 a, i64 m) {
  if (m < 2) throw DomainError("mod_inv: modulus must be >= 2");
  i64 r0 = mod_pos(a, m), r1 = m;
  i64 s0 = 1, s1 = 0;
  while (r1 != 0) {
    const i64 q = r0 / r1;
    i64 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw DomainError("mod_inv: not invertible");
  return mod_pos(s0, m);
}

double kloosterman(i64 k, i64 m) {
  if (m < 1) throw DomainError("kloosterman: m must be >= 1");
  if (m == 1) return 1.0;
  const i64 kr = mod_pos(k, m);
  double re = 0.0, im = 0.0;
  for (i64 n0 = 1; n0 < m; ++n0) {
    if (gcd64(n0, m) != 1) continue;
    const i64 r = mod_pos(mod_inv(n0, m) + kr * n0, m);
    const double ang = -TWO_PI * static_cast<double>(r) / static_cast<double>(m);
    re += std::cos(ang);
    im += std::sin(ang);
  }
  if (std::abs(im) > 1e-9) throw ConvergenceError("kloosterman: imaginary part did not vanish");
  return re;
}

cplx divisor_sigma(cplx nu, i64 n) {
  if (n == 0) throw DomainError("divisor_sigma: n must be nonzero");
  n = std::llabs(n);
  cplx s = 0.0;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += std::exp(nu * std::log(static_cast<double>(d)));
    const i64 e = n / d;
    if (e != d) s += std::exp(nu * std::log(static_cast<double>(e)));
  }
  return s;
}

void CharacterSpec::validate() const {
  if (parity != 0 && parity != 1) throw DomainError("CharacterSpec: parity must be 0 or 1");
  for (const auto& [p, t] : theta) {
    if (!is_prime(p)) throw DomainError("CharacterSpec: theta key " + std::to_string(p) + " is not prime");
    if (t == cplx(0.0)) throw DomainError("CharacterSpec: theta_p must be nonzero");
  }
}

cplx CharacterSpec::chi_prime(i64 p) const {
  const auto it = theta.find(p);
  if (it == theta.end()) throw DomainError("CharacterSpec: missing theta for prime " + std::to_string(p));
  return std::exp(cplx(0.0, 0.5 * lambda) * std::log(static_cast<double>(p))) * it->second;
}

cplx CharacterSpec::chi(i64 n) const {
  if (n == 0) throw DomainError("CharacterSpec: chi(0) undefined");
  cplx v = (n < 0 && parity == 1) ? cplx(-1.0) : cplx(1.0);
  for (auto [p, e] : factorize(n)) {
    const cplx c = chi_prime(p);
    for (int j = 0; j < e; ++j) v *= c;
  }
  return v;
}

cplx phi_coeff(const CharacterSpec& ch, i64 k) {
  if (k == 0) throw DomainError("phi_coeff: k must be nonzero");
  const i64 ak = std::llabs(k);
  for (auto [p, e] : factorize(ak)) (void)ch.chi_prime(p);
  cplx s = 0.0;
  for (i64 d = 1; d <= ak; ++d) {
    if (ak % d != 0) continue;
    const i64 b = k / d;
    for (i64 sign : {1, -1}) {
      const i64 ma = sign * d, nb = sign * b;
      const cplx pw = std::exp(cplx(0.0, ch.lambda) * std::log(static_cast<double>(std::llabs(nb))));
      s += ch.chi(ma) / ch.chi(nb) * pw;
    }
  }
  return s;
}

UnimodularRep complete_column(i64 n, i64 m) {
  if (gcd64(n, m) != 1) throw DomainError("complete_column: (n,m) not coprime");
  UnimodularRep r;
  r.n = n;
  r.m = m;
  if (m == 0) {
    r.m1 = n;
    r.n1 = 0;
    return r;
  }
  const i64 am = std::llabs(m);
  r.m1 = am == 1 ? 0 : mod_inv(n, am);
  r.n1 = (n * r.m1 - 1) / m;
  return r;
}

std::vector<UnimodularRep> coprime_reps(i64 radius) {
  if (radius < 1) throw DomainError("coprime_reps: radius must be >= 1");
  std::vector<UnimodularRep> out;
  for (i64 m = -radius; m <= radius; ++m)
    for (i64 n = -radius; n <= radius; ++n)
      if (gcd64(n, m) == 1) out.push_back(complete_column(n, m));
  return out;
}

TruncatedSum kloosterman_zeta(cplx s, i64 k, i64 m_max) {
  if (!(s.real() > 0.75)) throw DomainError("kloosterman_zeta: requires Re s > 3/4");
  if (k == 0) throw DomainError("kloosterman_zeta: k must be nonzero");
  if (m_max < 1) throw DomainError("kloosterman_zeta: m_max must be >= 1");
  cplx v = 0.0;
  for (i64 m = 1; m <= m_max; ++m)
    v += kloosterman(k, m) * std::exp(-2.0 * s * std::log(static_cast<double>(m)));
  // Weil majorant d(m) gcd(k,m)^{1/2} m^{1/2-2 sigma}: explicit up to m2, then partial summation
  const double a = 2.0 * s.real() - 0.5;
  const i64 m2 = std::max<i64>(4 * m_max, 1000);
  double tail = 0.0;
  for (i64 m = m_max + 1; m <= m2; ++m)
    tail += divisor_count(m) * std::sqrt(static_cast<double>(gcd64(k, m))) * std::pow(static_cast<double>(m), -a);
  const double lm = std::log(static_cast<double>(m2));
  const double b = a - 1.0;
  tail += std::sqrt(static_cast<double>(std::llabs(k))) * a * std::pow(static_cast<double>(m2), -b) *
          (lm / b + 1.0 / (b * b) + 1.0 / b);
  return {v, tail};
}

}  // namespace automorphe
