#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "automorphe/common.hpp"

namespace automorphe {

using i64 = std::int64_t;

i64 gcd64(i64 a, i64 b);
bool is_prime(i64 n);
std::vector<i64> primes_upto(i64 n);
// prime factorization of |n|, ascending
std::vector<std::pair<i64, int>> factorize(i64 n);
int divisor_count(i64 n);
int mobius(i64 n);

i64 mod_inv(i64 a, i64 m);
// least non-negative residue
inline i64 mod_pos(i64 a, i64 m) {
  const i64 r = a % m;
  return r < 0 ? r + m : r;
}

double kloosterman(i64 k, i64 m);
cplx divisor_sigma(cplx nu, i64 n);

struct CharacterSpec {
  int parity = 0;
  double lambda = 0.0;
  std::map<i64, cplx> theta;
  void validate() const;
  // chi(p) = p^{i lambda/2} theta_p
  cplx chi_prime(i64 p) const;
  // multiplicative extension with chi(-1) = (-1)^parity
  cplx chi(i64 n) const;
};

cplx phi_coeff(const CharacterSpec& ch, i64 k);

struct UnimodularRep {
  i64 n = 1, m = 0, n1 = 0, m1 = 1;
};

// canonical completion of a coprime column (n, m)
UnimodularRep complete_column(i64 n, i64 m);
std::vector<UnimodularRep> coprime_reps(i64 radius);

struct TruncatedSum {
  cplx value;
  double tail_bound;
};

TruncatedSum kloosterman_zeta(cplx s, i64 k, i64 m_max);

}  // namespace automorphe
