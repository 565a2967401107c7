#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "automorphe/arith.hpp"
#include "automorphe/phiblock.hpp"

namespace automorphe {

struct Generator {
  enum class Kind { RPow, Sigma, SigmaUpper, Tau };
  Kind kind = Kind::RPow;
  i64 j = 0;  // RPow exponent
  int r = 0;  // Sigma / SigmaUpper
  i64 l = 0;  // SigmaUpper level
  Rational gamma = 0;

  static Generator R(i64 j) { return {Kind::RPow, j, 0, 0, 0}; }
  static Generator S(int r) { return {Kind::Sigma, 0, r, 0, 0}; }
  static Generator SU(int r, i64 l) { return {Kind::SigmaUpper, 0, r, l, 0}; }
  static Generator T(const Rational& g) { return {Kind::Tau, 0, 0, 0, g}; }

  bool operator==(const Generator& o) const;
  bool operator<(const Generator& o) const;
};

// left-to-right as written; the rightmost generator acts first
using Word = std::vector<Generator>;

std::string to_string(const Generator& g);
std::string to_string(const Word& w);
Word parse_word(const std::string& text);

struct OperatorSum {
  std::map<Word, Rational> terms;
  void add(const Word& w, const Rational& c);
  OperatorSum operator*(const OperatorSum& o) const;
  OperatorSum operator+(const OperatorSum& o) const;
  bool operator==(const OperatorSum& o) const { return terms == o.terms; }
};
std::string to_string(const OperatorSum& s);

enum class Strategy { Leftmost, Rightmost };

struct IrreducibleWord : std::runtime_error {
  Word word;
  IrreducibleWord(const Word& w, const std::string& msg) : std::runtime_error(msg), word(w) {}
};

struct RewriteContext {
  std::optional<i64> prime;  // needed only for Tau rules
};

// R^j sigma_r with an optional trailing sigma^(l)
bool is_normal_shape(const Word& w);
// one rewrite at each applicable position; used by exhaustive exploration
std::vector<Word> rewrite_successors(const Word& w, const RewriteContext& ctx = {});
// deterministic normalization; result may fail is_normal_shape
Word rewrite_word(const Word& w, Strategy st = Strategy::Leftmost, const RewriteContext& ctx = {});
// all terminal words reachable from w
std::set<Word> exhaustive_terminals(const Word& w, const RewriteContext& ctx = {});
// throws IrreducibleWord when some word gets stuck outside normal shape
OperatorSum normal_form(const OperatorSum& s, Strategy st = Strategy::Leftmost, const RewriteContext& ctx = {});

struct HeckePowerTable {
  int k = 0;
  std::vector<std::vector<BigInt>> alpha;  // alpha[l][r], 0 <= r <= l <= k
  const BigInt& at(int l, int r) const { return alpha.at(l).at(r); }
  bool operator==(const HeckePowerTable& o) const { return k == o.k && alpha == o.alpha; }
};

HeckePowerTable hecke_power(int k);
// all tables 0..k_max by one sweep of the recursion
std::vector<HeckePowerTable> hecke_power_all(int k_max);
OperatorSum expand_pow_symbolic(int k);
// reads alpha off a normal-form expansion of T^k
HeckePowerTable table_from_sum(const OperatorSum& s, int k);
std::string hecke_table_csv(const HeckePowerTable& t, bool header = true);

ScaledPhi apply_to_phi(i64 l, i64 N, int r, const PhiBlock& block, i64 p);

}  // namespace automorphe
