#include "automorphe/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "automorphe/fixture.hpp"
#include "automorphe/heckewords.hpp"
#include "automorphe/lab.hpp"

namespace automorphe {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// report text plus whether every assertion held
struct Output {
  std::string text;
  bool ok = true;
};

Output emit(const ScanReport& rep, const std::string& format) {
  rep.validate();
  return {format == "json" ? rep.to_json() : rep.to_csv(), rep.passed()};
}

// single values as a one-row table
Output emit_values(const std::string& name, const std::vector<std::pair<std::string, std::string>>& cols,
                   const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = REPORT_SCHEMA_VERSION;
    j["command"] = name;
    for (const auto& [k, v] : cols) j[k] = std::stod(v);
    return {j.dump(2) + "\n", true};
  }
  std::string head, row;
  for (const auto& [k, v] : cols) {
    head += (head.empty() ? "" : ",") + k;
    row += (row.empty() ? "" : ",") + v;
  }
  return {head + "\n" + row + "\n", true};
}

void write_out(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    out.flush();
    return;
  }
  // write then rename so a failure leaves no partial file
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
    if (!f) throw std::runtime_error("cannot write " + path);
  }
  std::filesystem::rename(tmp, path);
}

std::vector<i64> parse_list(const std::string& s) {
  std::vector<i64> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad integer list '" + s + "'");
    }
    if (used != item.size()) throw UsageError("bad integer list '" + s + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (!is_prime(p)) throw UsageError("--p must be prime");
  if (N < 1) throw UsageError("--N must be >= 1");
  if (!(eps > 0 && eps < 1)) throw UsageError("--eps must lie in (0, 1)");
  if (radius < 10) throw UsageError("--radius must be >= 10");
  if (beta && !(*beta > 0)) throw UsageError("--beta must be positive");
  if (!(tol > 0)) throw UsageError("--tol must be positive");
  if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
}

cplx parse_complex(const std::string& text) {
  static const std::regex full(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i)?\s*$)");
  static const std::regex pure_imag(R"(^\s*([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pure_imag)) {
    const double mag = m[2].matched ? std::stod(m[2].str()) : 1.0;
    return {0.0, m[1].str() == "-" ? -mag : mag};
  }
  if (std::regex_match(text, m, full) && (m[1].matched || m[2].matched)) {
    const double re = m[1].matched ? std::stod(m[1].str()) : 0.0;
    double im = 0.0;
    if (m[2].matched) {
      im = m[3].matched ? std::stod(m[3].str()) : 1.0;
      if (m[2].str() == "-") im = -im;
    }
    return {re, im};
  }
  throw std::invalid_argument("not a complex number: '" + text + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"automorphe: automorphic distribution laboratory"};
  app.require_subcommand(1);
  app.allow_windows_style_options(false);
  RunConfig cfg;
  std::string out_path;

  auto common = [&](CLI::App* s) {
    s->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    s->add_option("--out", out_path, "write the report here instead of stdout");
  };

  int k = 12;
  auto* c_table = app.add_subcommand("hecke-table", "alpha coefficients of (R + R^-1 sigma_1)^k");
  c_table->add_option("--k", k)->check(CLI::Range(0, 4096));

  long long km = 1, mm = 1;
  std::string s_text;
  auto* c_kl = app.add_subcommand("kloosterman", "S(1,k;m), optionally the series sum S(1,k;m) m^-2s");
  c_kl->add_option("--m", mm)->required()->check(CLI::PositiveNumber);
  c_kl->add_option("--k", km)->required();
  c_kl->add_option("--s", s_text, "complex s for the truncated series up to --m");

  std::string nu_text = "0", z_text = "i";
  int kt = 0;
  auto* c_eis = app.add_subcommand("eval-eisenstein", "truncated Eisenstein expansion");
  c_eis->add_option("--nu", nu_text);
  c_eis->add_option("--z", z_text)->required();
  c_eis->add_option("--K", kt, "number of Fourier terms, 0 picks a default");

  auto* c_maass = app.add_subcommand("eval-maass", "fixture expansion at a point");
  c_maass->add_option("--fixture", cfg.fixture)->required();
  c_maass->add_option("--z", z_text)->required();

  int j = 1;
  long long p_radius = 80;
  auto* c_poin = app.add_subcommand("poincare", "Selberg-Poincare series by the lattice-sum engine");
  c_poin->add_option("--j", j)->check(CLI::Range(1, 50));
  c_poin->add_option("--z", z_text)->required();
  c_poin->add_option("--radius", p_radius)->check(CLI::Range(10LL, 100000LL));

  auto* c_theta = app.add_subcommand("theta-check", "Theta of the elementary measure at 20 points");

  auto* c_env = app.add_subcommand("scan-envelope", "envelope ratios over (l, r)");
  c_env->add_option("--p", cfg.p);
  c_env->add_option("--N", cfg.N);
  c_env->add_option("--eps", cfg.eps);
  c_env->add_option("--radius", cfg.radius, "coarse radius; the fine radius is twice this");

  std::string m_list = "1,2,3";
  long long bm_radius = 100, k_max = 20;
  auto* c_bm = app.add_subcommand("bm-check", "direct versus Kloosterman pairings of B_m");
  c_bm->add_option("--m", m_list, "comma separated");
  c_bm->add_option("--radius", bm_radius)->check(CLI::Range(10LL, 100000LL));
  c_bm->add_option("--k-max", k_max)->check(CLI::Range(1LL, 10000LL));

  double norm = 1.0;
  int A = 4;
  auto* c_bud = app.add_subcommand("budget", "binomial budget of the 2N-th Hecke power");
  c_bud->add_option("--p", cfg.p);
  c_bud->add_option("--N", cfg.N);
  c_bud->add_option("--eps", cfg.eps);
  c_bud->add_option("--norm", norm)->check(CLI::PositiveNumber);
  c_bud->add_option("--A", A)->check(CLI::Range(0, 100));

  auto* c_ram = app.add_subcommand("ramanujan", "Hecke recursion residuals and |b_p| <= 2 per prime");
  c_ram->add_option("--fixture", cfg.fixture)->required();

  for (auto* s : {c_table, c_kl, c_eis, c_maass, c_poin, c_theta, c_env, c_bm, c_bud, c_ram}) common(s);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return EXIT_OK;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return EXIT_OK;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return EXIT_USAGE;
  }

  Output o;
  try {
    cfg.validate();
    if (c_table->parsed()) {
      const HeckePowerTable t = hecke_power(k);
      bool ok = true;
      BigInt binom = 1;
      for (int l = 0; l <= k; ++l) {
        BigInt row = 0;
        for (int r = 0; r <= l; ++r) row += t.at(l, r);
        ok = ok && row == binom;
        binom = binom * (k - l) / (l + 1);
      }
      if (cfg.format == "json") {
        nlohmann::ordered_json js;
        js["schema_version"] = REPORT_SCHEMA_VERSION;
        js["k"] = k;
        js["rows"] = nlohmann::ordered_json::array();
        for (int l = 0; l <= k; ++l)
          for (int r = 0; r <= l; ++r) js["rows"].push_back({{"l", l}, {"r", r}, {"alpha", t.at(l, r).str()}});
        js["row_sums_binomial"] = ok;
        o = {js.dump(2) + "\n", ok};
      } else {
        o = {hecke_table_csv(t), ok};
      }
    } else if (c_kl->parsed()) {
      if (s_text.empty()) {
        o = emit_values("kloosterman", {{"k", std::to_string(km)}, {"m", std::to_string(mm)}, {"value", num(kloosterman(km, mm))}},
                        cfg.format);
      } else {
        const cplx s = parse_complex(s_text);
        const TruncatedSum t = kloosterman_zeta(s, km, mm);
        o = emit_values("kloosterman", {{"k", std::to_string(km)}, {"m_max", std::to_string(mm)}, {"s_re", num(s.real())},
                                        {"s_im", num(s.imag())}, {"value_re", num(t.value.real())},
                                        {"value_im", num(t.value.imag())}, {"tail_bound", num(t.tail_bound)}},
                        cfg.format);
      }
    } else if (c_eis->parsed()) {
      const cplx nu = parse_complex(nu_text), z = parse_complex(z_text);
      const int K = kt > 0 ? kt : default_truncation(z.imag());
      const cplx v = eval_eisenstein(nu, z, K);
      o = emit_values("eval-eisenstein", {{"value_re", num(v.real())}, {"value_im", num(v.imag())}, {"K", std::to_string(K)},
                                          {"tail_bound", num(eisenstein_tail_bound(nu, z.imag(), K))}},
                      cfg.format);
    } else if (c_maass->parsed()) {
      const MaassExpansion e = load_fixture(cfg.fixture);
      const cplx z = parse_complex(z_text);
      const cplx v = eval_maass(e, z);
      o = emit_values("eval-maass", {{"value_re", num(v.real())}, {"value_im", num(v.imag())}, {"K", std::to_string(e.K)}},
                      cfg.format);
    } else if (c_poin->parsed()) {
      const cplx z = parse_complex(z_text);
      const PairingResult r = poincare_selberg(j, z, p_radius);
      o = emit_values("poincare", {{"value_re", num(r.value.real())}, {"value_im", num(r.value.imag())},
                                   {"tail_estimate", num(r.tail_estimate)}, {"radius", std::to_string(p_radius)}},
                      cfg.format);
    } else if (c_theta->parsed()) {
      o = emit(exp_theta_s11(), cfg.format);
    } else if (c_env->parsed()) {
      EnvelopeOptions eo;
      eo.eps = cfg.eps;
      eo.radius = cfg.radius;
      o = emit(exp_scan_envelope(cfg.p, cfg.N, EulerImage(default_test_function()), eo), cfg.format);
    } else if (c_bm->parsed()) {
      o = emit(exp_bm_consistency(parse_list(m_list), default_test_function(), bm_radius, k_max), cfg.format);
    } else if (c_bud->parsed()) {
      o = emit(exp_binomial_budget(cfg.p, cfg.N, cfg.eps, norm, A), cfg.format);
    } else if (c_ram->parsed()) {
      const MaassExpansion e = load_fixture(cfg.fixture);
      const ScanReport rep = exp_ramanujan(e);
      o = emit(rep, cfg.format);
      for (const auto& r : rep.rows)
        if (r.note.rfind("Ramanujan bound violated", 0) == 0) err << r.note << "\n";
    }
    write_out(out_path, o.text, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return EXIT_USAGE;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return EXIT_USAGE;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return EXIT_USAGE;
  } catch (const SchemaError& e) {
    err << "data error: " << e.what() << "\n";
    return EXIT_DATA;
  } catch (const NormalizationError& e) {
    err << "data error: " << e.what() << "\n";
    return EXIT_DATA;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return EXIT_DATA;
  }
  return o.ok ? EXIT_OK : EXIT_ASSERTION;
}

}  // namespace automorphe
