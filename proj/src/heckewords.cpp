#include "automorphe/heckewords.hpp"

#include <functional>
#include <sstream>

namespace automorphe {

using Kind = Generator::Kind;

bool Generator::operator==(const Generator& o) const {
  return kind == o.kind && j == o.j && r == o.r && l == o.l && gamma == o.gamma;
}

bool Generator::operator<(const Generator& o) const {
  if (kind != o.kind) return kind < o.kind;
  if (j != o.j) return j < o.j;
  if (r != o.r) return r < o.r;
  if (l != o.l) return l < o.l;
  return gamma < o.gamma;
}

std::string to_string(const Generator& g) {
  std::ostringstream os;
  switch (g.kind) {
    case Kind::RPow: os << "R^" << g.j; break;
    case Kind::Sigma: os << "s" << g.r; break;
    case Kind::SigmaUpper: os << "s" << g.r << "(" << g.l << ")"; break;
    case Kind::Tau: os << "t[" << g.gamma << "]"; break;
  }
  return os.str();
}

std::string to_string(const Word& w) {
  if (w.empty()) return "I";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w[i]);
  }
  return out;
}

Word parse_word(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  Word w;
  while (is >> tok) {
    if (tok == "I") continue;
    if (tok == "R") {
      w.push_back(Generator::R(1));
    } else if (tok.rfind("R^", 0) == 0) {
      w.push_back(Generator::R(std::stoll(tok.substr(2))));
    } else if (tok[0] == 's') {
      const auto paren = tok.find('(');
      if (paren == std::string::npos) {
        w.push_back(Generator::S(std::stoi(tok.substr(1))));
      } else {
        const int r = std::stoi(tok.substr(1, paren - 1));
        const i64 l = std::stoll(tok.substr(paren + 1, tok.size() - paren - 2));
        w.push_back(Generator::SU(r, l));
      }
    } else if (tok.rfind("t[", 0) == 0 && tok.back() == ']') {
      w.push_back(Generator::T(Rational(tok.substr(2, tok.size() - 3))));
    } else {
      throw DomainError("parse_word: bad token '" + tok + "'");
    }
  }
  return w;
}

void OperatorSum::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

OperatorSum OperatorSum::operator*(const OperatorSum& o) const {
  OperatorSum out;
  for (const auto& [w1, c1] : terms)
    for (const auto& [w2, c2] : o.terms) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      out.add(w, c1 * c2);
    }
  return out;
}

OperatorSum OperatorSum::operator+(const OperatorSum& o) const {
  OperatorSum out = *this;
  for (const auto& [w, c] : o.terms) out.add(w, c);
  return out;
}

std::string to_string(const OperatorSum& s) {
  if (s.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : s.terms) {
    if (!first) out += " + ";
    first = false;
    std::ostringstream os;
    os << c;
    out += (c == 1 ? std::string() : os.str() + "*") + to_string(w);
  }
  return out;
}

namespace {

// invariance level of the output of w[from..] applied to an Inv(1) input; nullopt = unknown
std::optional<i64> level_from(const Word& w, std::size_t from) {
  std::optional<i64> lev = 0;
  for (std::size_t k = w.size(); k-- > from;) {
    if (!lev) return std::nullopt;
    const Generator& g = w[k];
    switch (g.kind) {
      case Kind::RPow: lev = *lev - g.j; break;
      case Kind::Sigma:
        if (*lev > 0) return std::nullopt;
        lev = std::min<i64>(*lev, -g.r);
        break;
      case Kind::SigmaUpper:
        if (*lev > g.l) return std::nullopt;
        lev = std::min<i64>(*lev, g.l - g.r);
        break;
      case Kind::Tau: break;
    }
  }
  return lev;
}

Word splice(const Word& w, std::size_t i, std::size_t len, const Word& repl) {
  Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(i + len), w.end());
  return out;
}

bool divisible_by_power(const Rational& g, i64 p, i64 e) {
  // g in p^e Z
  Rational q = g;
  if (e >= 0) {
    for (i64 k = 0; k < e; ++k) q /= p;
  } else {
    for (i64 k = 0; k < -e; ++k) q *= p;
  }
  return boost::multiprecision::denominator(q) == 1;
}

enum class RuleClass { Cleanup, Sim, Merge };

// rewrite at position i using rules of one class
std::optional<Word> try_rule(const Word& w, std::size_t i, RuleClass cls, const RewriteContext& ctx) {
  const Generator& g = w[i];
  const bool has1 = i + 1 < w.size();
  const bool has2 = i + 2 < w.size();
  switch (cls) {
    case RuleClass::Cleanup: {
      if ((g.kind == Kind::RPow && g.j == 0) || (g.kind == Kind::Sigma && g.r == 0) ||
          (g.kind == Kind::SigmaUpper && g.r == 0) || (g.kind == Kind::Tau && g.gamma == 0))
        return splice(w, i, 1, {});
      if (g.kind == Kind::SigmaUpper && g.l == 0) return splice(w, i, 1, {Generator::S(g.r)});
      if (g.kind == Kind::Tau) {
        const auto lev = level_from(w, i + 1);
        if (lev && *lev == 0 && boost::multiprecision::denominator(g.gamma) == 1) return splice(w, i, 1, {});
        if (lev && ctx.prime && divisible_by_power(g.gamma, *ctx.prime, *lev)) return splice(w, i, 1, {});
        if (ctx.prime && has1) {
          const Generator& h = w[i + 1];
          if (h.kind == Kind::RPow) {
            Rational ng = g.gamma;
            for (i64 k = 0; k < std::abs(h.j); ++k) {
              if (h.j > 0) ng *= *ctx.prime;
              else ng /= *ctx.prime;
            }
            return splice(w, i, 2, {h, Generator::T(ng)});
          }
          if (h.kind == Kind::Sigma || h.kind == Kind::SigmaUpper) return splice(w, i, 2, {h, g});
        }
      }
      return std::nullopt;
    }
    case RuleClass::Sim: {
      // sigma_r R^l ~ R sigma_{r-1} R^{l-1}
      if (g.kind == Kind::Sigma && g.r >= 1 && has1 && w[i + 1].kind == Kind::RPow && w[i + 1].j >= 1) {
        const auto lev = level_from(w, i + 2);
        if (lev && *lev - (w[i + 1].j - 1) <= 0)
          return splice(w, i, 2, {Generator::R(1), Generator::S(g.r - 1), Generator::R(w[i + 1].j - 1)});
      }
      // sigma_r R^{-1} sigma_1 ~ R^{-1} sigma_{r+1}
      if (g.kind == Kind::Sigma && has2 && w[i + 1].kind == Kind::RPow && w[i + 1].j == -1 &&
          w[i + 2].kind == Kind::Sigma && w[i + 2].r == 1) {
        const auto lev = level_from(w, i + 3);
        if (lev && *lev <= 0) return splice(w, i, 3, {Generator::R(-1), Generator::S(g.r + 1)});
      }
      // sigma_r^{(l)} R^{-l} = R^{-l} sigma_r
      if (g.kind == Kind::SigmaUpper && g.l >= 1 && has1 && w[i + 1].kind == Kind::RPow && w[i + 1].j == -g.l)
        return splice(w, i, 2, {w[i + 1], Generator::S(g.r)});
      return std::nullopt;
    }
    case RuleClass::Merge: {
      if (!has1) return std::nullopt;
      const Generator& h = w[i + 1];
      if (g.kind == Kind::RPow && h.kind == Kind::RPow) return splice(w, i, 2, {Generator::R(g.j + h.j)});
      if (g.kind == Kind::Tau && h.kind == Kind::Tau) return splice(w, i, 2, {Generator::T(g.gamma + h.gamma)});
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<Word> step(const Word& w, Strategy st, const RewriteContext& ctx) {
  for (RuleClass cls : {RuleClass::Cleanup, RuleClass::Sim, RuleClass::Merge}) {
    const std::size_t n = w.size();
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t i = st == Strategy::Leftmost ? t : n - 1 - t;
      if (auto out = try_rule(w, i, cls, ctx)) return out;
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_normal_shape(const Word& w) {
  std::size_t i = 0;
  if (i < w.size() && w[i].kind == Kind::RPow) ++i;
  if (i < w.size() && w[i].kind == Kind::Sigma) ++i;
  if (i < w.size() && w[i].kind == Kind::SigmaUpper) ++i;
  return i == w.size();
}

std::vector<Word> rewrite_successors(const Word& w, const RewriteContext& ctx) {
  std::vector<Word> out;
  for (RuleClass cls : {RuleClass::Cleanup, RuleClass::Sim, RuleClass::Merge})
    for (std::size_t i = 0; i < w.size(); ++i)
      if (auto nw = try_rule(w, i, cls, ctx)) out.push_back(*nw);
  return out;
}

Word rewrite_word(const Word& w, Strategy st, const RewriteContext& ctx) {
  Word cur = w;
  for (int guard = 0; guard < 100000; ++guard) {
    auto nxt = step(cur, st, ctx);
    if (!nxt) return cur;
    cur = std::move(*nxt);
  }
  throw IrreducibleWord(w, "rewrite_word: no termination");
}

std::set<Word> exhaustive_terminals(const Word& w, const RewriteContext& ctx) {
  std::set<Word> seen, terminals;
  std::function<void(const Word&)> dfs = [&](const Word& cur) {
    if (!seen.insert(cur).second) return;
    auto succ = rewrite_successors(cur, ctx);
    if (succ.empty()) {
      terminals.insert(cur);
      return;
    }
    for (const auto& s : succ) dfs(s);
  };
  dfs(w);
  return terminals;
}

OperatorSum normal_form(const OperatorSum& s, Strategy st, const RewriteContext& ctx) {
  OperatorSum out;
  for (const auto& [w, c] : s.terms) {
    Word nw = rewrite_word(w, st, ctx);
    if (!is_normal_shape(nw))
      throw IrreducibleWord(nw, "normal_form: irreducible word '" + to_string(nw) + "' from '" + to_string(w) + "'");
    out.add(nw, c);
  }
  return out;
}

std::vector<HeckePowerTable> hecke_power_all(int k_max) {
  if (k_max < 0) throw DomainError("hecke_power: k must be >= 0");
  std::vector<HeckePowerTable> out;
  HeckePowerTable t;
  t.k = 0;
  t.alpha = {{BigInt(1)}};
  out.push_back(t);
  for (int k = 0; k < k_max; ++k) {
    const auto& a = out.back().alpha;
    auto get = [&](int l, int r) -> BigInt {
      if (l < 0 || l > k || r < 0 || r > l) return 0;
      return a[l][r];
    };
    HeckePowerTable n;
    n.k = k + 1;
    n.alpha.resize(k + 2);
    for (int l = 0; l <= k + 1; ++l) {
      n.alpha[l].resize(l + 1);
      n.alpha[l][0] = get(l, 0) + get(l, 1);
      for (int r = 1; r <= l; ++r) n.alpha[l][r] = get(l, r + 1) + get(l - 1, r - 1);
    }
    out.push_back(std::move(n));
  }
  return out;
}

HeckePowerTable hecke_power(int k) { return hecke_power_all(k).back(); }

OperatorSum expand_pow_symbolic(int k) {
  if (k < 0) throw DomainError("expand_pow_symbolic: k must be >= 0");
  if (k > 12) throw DomainError("expand_pow_symbolic: size limit k <= 12");
  const Word a = {Generator::R(1)};
  const Word b = {Generator::R(-1), Generator::S(1)};
  OperatorSum raw;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    Word w;
    for (int f = 0; f < k; ++f) {
      const Word& piece = (mask >> f) & 1u ? b : a;
      w.insert(w.end(), piece.begin(), piece.end());
    }
    raw.add(w, 1);
  }
  return normal_form(raw);
}

HeckePowerTable table_from_sum(const OperatorSum& s, int k) {
  HeckePowerTable t;
  t.k = k;
  t.alpha.resize(k + 1);
  for (int l = 0; l <= k; ++l) t.alpha[l].assign(l + 1, BigInt(0));
  for (const auto& [w, c] : s.terms) {
    if (!is_normal_shape(w)) throw DomainError("table_from_sum: word not in normal shape");
    i64 j = 0;
    int r = 0;
    for (const auto& g : w) {
      if (g.kind == Kind::RPow) j = g.j;
      else if (g.kind == Kind::Sigma) r = g.r;
      else throw DomainError("table_from_sum: unexpected generator");
    }
    if ((k - j) % 2 != 0) throw DomainError("table_from_sum: parity mismatch");
    const i64 l = (k - j) / 2;
    if (l < 0 || l > k || r > l) throw DomainError("table_from_sum: index out of range");
    if (boost::multiprecision::denominator(c) != 1) throw DomainError("table_from_sum: non-integer coefficient");
    t.alpha[l][r] = boost::multiprecision::numerator(c);
  }
  return t;
}

std::string hecke_table_csv(const HeckePowerTable& t, bool header) {
  std::ostringstream os;
  if (header) os << "k,l,r,alpha\n";
  for (int l = 0; l <= t.k; ++l)
    for (int r = 0; r <= l; ++r) os << t.k << ',' << l << ',' << r << ',' << t.alpha[l][r] << '\n';
  return os.str();
}

ScaledPhi apply_to_phi(i64 l, i64 N, int r, const PhiBlock& block, i64 p) {
  if (l < N) throw DomainError("apply_to_phi: requires l >= N");
  if (!is_prime(p)) throw DomainError("apply_to_phi: p must be prime");
  if (boost::multiprecision::denominator(block.c) != 1) throw DomainError("apply_to_phi: c must be an integer");
  const BigInt c = boost::multiprecision::numerator(block.c);
  BigInt pr = 1;
  for (int k = 0; k < r; ++k) pr *= p;
  ScaledPhi out;
  out.block = block;
  if (c % pr != 0) return out;
  BigInt scale = 1;
  for (i64 k = 0; k < 2 * (l - N); ++k) scale *= p;
  out.block.c = Rational(c, scale);
  out.coeff = std::exp(-block.nu * (static_cast<double>(l - N) * std::log(static_cast<double>(p))));
  return out;
}

}  // namespace automorphe
