#include "automorphe/lab.hpp"

#include <cmath>
#include <cstdio>

#include "automorphe/heckewords.hpp"
#include "automorphe/pairings.hpp"
#include "automorphe/parallel.hpp"
#include "automorphe/planedist.hpp"

namespace automorphe {

namespace {

ReportRow asserted(std::vector<std::pair<std::string, double>> params, cplx value, double err, double bound) {
  ReportRow r;
  r.params = std::move(params);
  r.value = value;
  r.bound = bound;
  r.ratio = err / bound;
  r.pass = err < bound;
  return r;
}

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

}  // namespace

GaussPoly default_test_function() {
  Eigen::Matrix2cd Q;
  Q << 1.3 * PI, 0.2 * PI, 0.2 * PI, 0.8 * PI;
  return GaussPoly::term(1.0, 0, 0, Q) + GaussPoly::term(0.5, 1, 1, Q) + GaussPoly::term(0.3, 2, 0, Q);
}

GaussPoly random_gausspoly(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto in = [&](double a, double b) { return a + (b - a) * u(rng); };
  GaussPoly h;
  const int nb = 1 + static_cast<int>(rng() % 2);
  for (int b = 0; b < nb; ++b) {
    const double a = in(0.6, 1.6), d = in(0.6, 1.6), c = in(-0.3, 0.3);
    Eigen::Matrix2cd Q;
    Q << cplx(a, in(-0.2, 0.2)), c, c, cplx(d, in(-0.2, 0.2));
    Q *= PI;
    const cplx uu(in(-0.3, 0.3), 0.0), vv(in(-0.3, 0.3), 0.0);
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; i + j <= 2; ++j) h = h + GaussPoly::term(cplx(in(-1, 1), in(-1, 1)), i, j, Q, uu, vv);
  }
  return h;
}

ScanReport exp_theta_s11() {
  ScanReport rep;
  rep.experiment = "theta_s11";
  const double bound = 1e-8;
  std::vector<cplx> zs;
  for (int i = 0; i < 20; ++i) {
    const double x = -0.5 + 0.05 * ((7 * i) % 20);
    const double y = 0.6 + 0.1 * i;
    zs.emplace_back(x, y);
  }
  zs[0] = cplx(0.0, 1.0);
  zs[1] = cplx(0.0, 2.0);
  std::vector<ReportRow> rows(zs.size());
  parallel_for(zs.size(), [&](std::size_t i) {
    const cplx z = zs[i];
    const cplx v = theta_s11(z);
    const cplx exact = std::sqrt(z.imag()) * e2pi(z);
    rows[i] = asserted({{"x", z.real()}, {"y", z.imag()}}, v, std::abs(v - exact), bound);
  });
  rep.rows = std::move(rows);
  double worst = 0.0;
  for (const auto& r : rep.rows) worst = std::max(worst, r.ratio * bound);
  rep.metadata["max_abs_error"] = worst;
  rep.metadata["tolerance"] = bound;
  return rep;
}

ScanReport exp_eisenstein_eigen(i64 p, const std::vector<double>& lambdas) {
  if (!is_prime(p)) throw DomainError("exp_eisenstein_eigen: p must be prime");
  ScanReport rep;
  rep.experiment = "eisenstein_eigen";
  const double bound = 1e-6;
  const std::vector<cplx> zs = {{0.1, 1.1}, {-0.3, 0.8}, {0.25, 1.7}};
  const std::size_t per = 1 + zs.size();
  std::vector<ReportRow> rows(lambdas.size() * per);
  parallel_for(rows.size(), [&](std::size_t idx) {
    const double lam = lambdas[idx / per];
    const std::size_t kind = idx % per;
    const double lp = std::log(static_cast<double>(p));
    const cplx ev = 2.0 * std::cos(0.5 * lam * lp);
    if (kind == 0) {
      const MaassExpansion e = eisenstein_model(lam, 40 * p);
      const MaassExpansion t = hecke_coeff(p, e);
      double err = 0.0;
      for (const auto& [k, v] : t.coeffs) err = std::max(err, std::abs(v - ev * e.b(k)));
      ReportRow r = asserted({{"lambda", lam}, {"p", double(p)}, {"pointwise", 0}}, ev, err, bound);
      r.note = "coefficient level";
      rows[idx] = r;
      return;
    }
    const cplx z = zs[kind - 1];
    const cplx nu(0.0, lam);
    const HalfPlaneFn E = [nu](cplx w) { return eval_eisenstein(nu, w); };
    const cplx Ez = E(z), TEz = hecke_classical(p, E, z);
    const double err = std::abs(TEz - ev * Ez) / std::max(1.0, std::abs(Ez));
    ReportRow r = asserted({{"lambda", lam}, {"p", double(p)}, {"pointwise", 1}, {"x", z.real()}, {"y", z.imag()}},
                           TEz / Ez, err, bound);
    r.note = "pointwise";
    rows[idx] = r;
  });
  rep.rows = std::move(rows);
  rep.metadata["tolerance"] = bound;
  return rep;
}

ScanReport exp_scan_envelope(i64 p, int N, const EulerImage& h, const EnvelopeOptions& opt) {
  if (!is_prime(p)) throw DomainError("exp_scan_envelope: p must be prime");
  if (N < 1) throw DomainError("exp_scan_envelope: N must be >= 1");
  if (!(opt.eps > 0 && opt.eps < 1)) throw DomainError("exp_scan_envelope: eps must lie in (0, 1)");
  if (opt.radius < 10) throw DomainError("exp_scan_envelope: radius must be >= 10");
  struct Cell {
    int l, r;
  };
  std::vector<Cell> cells;
  for (int l = 0; l <= N; ++l)
    for (int r = 0; r <= l; ++r) cells.push_back({l, r});
  std::vector<PairingResult> coarse(cells.size()), fine(cells.size());
  parallel_for(2 * cells.size(), [&](std::size_t idx) {
    const Cell c = cells[idx / 2];
    const double q = std::pow(static_cast<double>(p), c.l - N);
    LatticeOptions lo;
    lo.radius = idx % 2 == 0 ? opt.radius : 2 * opt.radius;
    (idx % 2 == 0 ? coarse : fine)[idx / 2] = pair_envelope(q, c.r, p, h.h(), lo);
  });
  ScanReport rep;
  rep.experiment = "scan_envelope";
  double norm_c = 0.0, norm_f = 0.0;
  std::vector<double> rc(cells.size()), rf(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const double q = std::pow(static_cast<double>(p), cells[i].l - N);
    const double scale = std::pow(q, 1.0 - opt.eps);
    rc[i] = std::abs(coarse[i].value) / scale;
    rf[i] = std::abs(fine[i].value) / scale;
    norm_c = std::max(norm_c, rc[i]);
    norm_f = std::max(norm_f, rf[i]);
  }
  // rows far below the fitted norm carry no stability information
  const double floor = 1e-8 * std::max(norm_c, norm_f);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const double q = std::pow(static_cast<double>(p), cells[i].l - N);
    ReportRow row;
    row.params = {{"l", double(cells[i].l)},
                  {"r", double(cells[i].r)},
                  {"q", q},
                  {"ratio_coarse", rc[i]},
                  {"tail_fine", fine[i].tail_estimate}};
    row.value = fine[i].value;
    row.ratio = rf[i];
    row.bound = 2.0;
    const double lo = std::min(rc[i], rf[i]), hi = std::max(rc[i], rf[i]);
    const bool finite = std::isfinite(rc[i]) && std::isfinite(rf[i]);
    row.pass = finite && (hi < floor || hi < 2.0 * lo);
    row.note = fmt("change factor %.6g", lo > 0 ? hi / lo : 1.0);
    rep.rows.push_back(row);
  }
  rep.metadata["p"] = static_cast<double>(p);
  rep.metadata["N"] = N;
  rep.metadata["eps"] = opt.eps;
  rep.metadata["radius_coarse"] = static_cast<double>(opt.radius);
  rep.metadata["radius_fine"] = static_cast<double>(2 * opt.radius);
  rep.metadata["fitted_norm_coarse"] = norm_c;
  rep.metadata["fitted_norm_fine"] = norm_f;
  ReportRow summary;
  summary.params = {{"l", -1.0}, {"r", -1.0}};
  summary.value = norm_f;
  summary.bound = 2.0;
  const double lo = std::min(norm_c, norm_f), hi = std::max(norm_c, norm_f);
  summary.ratio = lo > 0 ? hi / lo : 0.0;
  summary.pass = std::isfinite(hi) && lo > 0 && hi < 2.0 * lo;
  summary.note = "fitted norm (max ratio), fine radius";
  rep.rows.push_back(summary);
  return rep;
}

double budget_beta(i64 p, double eps, int A) {
  const double a1 = A + 1.0;
  return eps * std::log(static_cast<double>(p)) / (2.0 * PI * a1 * a1);
}

ScanReport exp_binomial_budget(i64 p, int N, double eps, double norm, int A) {
  if (!is_prime(p)) throw DomainError("exp_binomial_budget: p must be prime");
  if (N < 1) throw DomainError("exp_binomial_budget: N must be >= 1");
  if (!(norm > 0)) throw DomainError("exp_binomial_budget: norm must be positive");
  const int k = 2 * N;
  const HeckePowerTable t = hecke_power(k);
  ScanReport rep;
  rep.experiment = "binomial_budget";
  BigInt total = 0, binom = 1;
  bool support = true;
  const double pe = std::pow(static_cast<double>(p), N * eps);
  for (int l = 0; l <= k; ++l) {
    BigInt row = 0;
    for (int r = 0; r <= l; ++r) {
      const BigInt& a = t.at(l, r);
      row += a;
      if (a != 0 && 2 * l - k - r > 0) support = false;
    }
    total += row;
    ReportRow rr;
    rr.params = {{"l", double(l)}, {"binomial", binom.convert_to<double>()}};
    rr.value = row.convert_to<double>();
    rr.bound = binom.convert_to<double>();
    rr.ratio = 1.0;
    rr.pass = row == binom;
    // each term contributes at most alpha p^{N eps} norm
    rr.note = "row sum " + row.str() + " term budget " + fmt("%.17g", row.convert_to<double>() * pe * norm);
    rep.rows.push_back(rr);
    binom = binom * (k - l) / (l + 1);
  }
  const BigInt two_k = BigInt(1) << k;
  const double assembled = total.convert_to<double>() * pe * norm;
  const double closed = two_k.convert_to<double>() * pe * norm;
  ReportRow tot;
  tot.params = {{"l", -1.0}, {"binomial", two_k.convert_to<double>()}};
  tot.value = assembled;
  tot.bound = closed;
  tot.ratio = assembled / closed;
  tot.pass = total == two_k && support && std::abs(assembled - closed) <= 1e-12 * closed;
  tot.note = "total " + total.str() + (support ? "" : " support condition violated");
  rep.rows.push_back(tot);
  rep.metadata["p"] = static_cast<double>(p);
  rep.metadata["N"] = N;
  rep.metadata["eps"] = eps;
  rep.metadata["norm"] = norm;
  rep.metadata["A"] = A;
  rep.metadata["beta"] = budget_beta(p, eps, A);
  rep.metadata["budget"] = assembled;
  rep.metadata["budget_per_unit_N"] = 4.0 * std::pow(static_cast<double>(p), eps);
  return rep;
}

ScanReport exp_bm_consistency(const std::vector<i64>& ms, const GaussPoly& f, i64 radius, i64 k_max) {
  const EulerImage h(f);
  ScanReport rep;
  rep.experiment = "bm_consistency";
  const double bound = 1e-4;
  std::vector<ReportRow> rows(ms.size());
  parallel_for(ms.size(), [&](std::size_t i) {
    const i64 m = ms[i];
    const PairingResult d = pair_Bm_direct(m, h, radius);
    const KloostermanPairing k = pair_Bm_kloosterman(m, h, k_max);
    ReportRow r = asserted({{"m", double(m)},
                            {"kloosterman_re", k.value.real()},
                            {"kloosterman_im", k.value.imag()},
                            {"k_zero_abs", std::abs(k.k_zero)},
                            {"axis_term_abs", std::abs(k.axis_term)}},
                           d.value, std::abs(d.value - k.value), bound);
    r.note = fmt("direct tail %.3g", d.tail_estimate);
    rows[i] = r;
  });
  rep.rows = std::move(rows);
  rep.metadata["radius"] = static_cast<double>(radius);
  rep.metadata["k_max"] = static_cast<double>(k_max);
  rep.metadata["tolerance"] = bound;
  return rep;
}

ScanReport exp_window_localization(const std::vector<WindowTerm>& terms, std::size_t center, i64 p, int N, double beta,
                                   const GaussPoly& h) {
  if (center >= terms.size()) throw DomainError("exp_window_localization: center index out of range");
  if (!is_prime(p)) throw DomainError("exp_window_localization: p must be prime");
  SpectralWindow w;
  w.lambda_center = terms[center].form.lambda;
  w.N = N;
  w.beta = beta;
  w.validate();
  const GridFunction wh = window_apply(w, h, 1e-12);
  // a distribution homogeneous of degree -1 - i lambda sees the h_{-i lambda} slice
  const double x = 0.6, xi = 0.35;
  // the window spreads dilations over |t| <~ sqrt(12 N beta), widen the upper limit to match
  const double lo = -40.0,
               hi = 0.5 * std::log(90.0 / (min_decay(h) * (x * x + xi * xi))) + 1.0 + TWO_PI * std::sqrt(12.0 * N * beta);
  std::vector<cplx> weight(terms.size());
  parallel_for(terms.size(), [&](std::size_t s) {
    const double lam = terms[s].form.lambda;
    const cplx plain = mellin_slice(h, -lam, x, xi, 1e-12);
    const cplx windowed = mellin_slice(wh.f, -lam, x, xi, lo, hi, 1e-12);
    weight[s] = windowed / plain;
  });
  ScanReport rep;
  rep.experiment = "window_localization";
  for (std::size_t s = 0; s < terms.size(); ++s) {
    const MaassExpansion& e = terms[s].form;
    const double lam = e.lambda;
    const double gauss = w.factor(lam);
    const cplx rel = weight[s] / weight[center];
    const cplx bp = e.coeffs.count(p) ? e.coeffs.at(p) : cplx(0.0);
    const double gam = std::abs(gamma_c(cplx(1.0, -0.5 * lam)) * gamma_c(cplx(1.0, 0.5 * lam)));
    const double term = gauss * std::pow(std::abs(bp), 2.0 * N) * gam / terms[s].norm;
    ReportRow r = asserted({{"term", double(s)}, {"lambda", lam}, {"gaussian", gauss}, {"assembled", term}}, rel,
                           std::abs(rel - gauss), 0.05 * gauss);
    r.note = terms[s].name;
    rep.rows.push_back(r);
  }
  rep.metadata["lambda_center"] = w.lambda_center;
  rep.metadata["N"] = N;
  rep.metadata["beta"] = beta;
  rep.metadata["p"] = static_cast<double>(p);
  return rep;
}

ScanReport exp_ramanujan(const MaassExpansion& e) {
  ScanReport rep;
  rep.experiment = "ramanujan";
  const double prec = e.precision;
  int violations = 0;
  for (i64 p : primes_upto(e.max_index())) {
    const auto it = e.coeffs.find(p);
    if (it == e.coeffs.end()) continue;
    const cplx bp = it->second;
    // b_p b_{p^k} = b_{p^{k+1}} + b_{p^{k-1}}
    cplx prev = 1.0, cur = bp;
    i64 pk = p;
    for (int k = 1; pk <= e.max_index() / p; ++k) {
      const auto nx = e.coeffs.find(pk * p);
      if (nx == e.coeffs.end()) break;
      const double res = std::abs(bp * cur - nx->second - prev);
      ReportRow r = asserted({{"p", double(p)}, {"k", double(k)}}, res, res, prec);
      r.note = "Hecke recursion";
      rep.rows.push_back(r);
      prev = cur;
      cur = nx->second;
      pk *= p;
    }
    ReportRow b;
    b.params = {{"p", double(p)}, {"k", 0.0}};
    b.value = bp;
    b.bound = 2.0 + prec;
    b.ratio = std::abs(bp) / b.bound;
    if (std::abs(bp) > 2.0 + prec) {
      ++violations;
      b.note = "Ramanujan bound violated at p = " + std::to_string(p);
    } else {
      b.note = "|b_p| <= 2";
    }
    rep.rows.push_back(b);
  }
  rep.metadata["lambda"] = e.lambda;
  rep.metadata["precision"] = prec;
  rep.metadata["ramanujan_violations"] = violations;
  return rep;
}

}  // namespace automorphe
