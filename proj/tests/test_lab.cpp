#include <doctest.h>

#include "automorphe/fixture.hpp"
#include "automorphe/lab.hpp"
#include "automorphe/pairings.hpp"

using namespace automorphe;

namespace {

const ReportRow* find_row(const ScanReport& r, const std::string& key, double v) {
  for (const auto& row : r.rows)
    for (const auto& [k, x] : row.params)
      if (k == key && x == v) return &row;
  return nullptr;
}

ScanReport sample_report() {
  ScanReport r;
  r.experiment = "sample";
  ReportRow a;
  a.params = {{"l", 0}, {"q", 0.125}};
  a.value = cplx(1.0 / 3.0, -2e-300);
  a.bound = 2.0;
  a.ratio = 0.1;
  a.pass = true;
  a.note = "has, comma and \"quotes\"";
  ReportRow b;
  b.params = {{"l", -1}};
  b.value = 7.0;
  b.bound = 1.0;
  b.ratio = 7.0;
  b.note = "";
  r.rows = {a, b};
  r.metadata["radius"] = 20;
  return r;
}

}  // namespace

TEST_SUITE("lab") {
  TEST_CASE("report round trips") {
    const ScanReport r = sample_report();
    CHECK(ScanReport::from_json(r.to_json()) == r);
    CHECK(ScanReport::from_csv(r.to_csv(), "sample").rows == r.rows);
    CHECK(r.to_json().find("\"schema_version\": 1") != std::string::npos);
    const ScanReport t = exp_theta_s11();
    CHECK(ScanReport::from_json(t.to_json()) == t);
    CHECK(ScanReport::from_csv(t.to_csv(), t.experiment).rows == t.rows);
  }

  TEST_CASE("report validation") {
    ScanReport r = sample_report();
    CHECK_NOTHROW(r.validate());
    CHECK_FALSE(r.passed() == false);
    r.rows[0].bound = 0.0;
    CHECK_THROWS(r.validate());
    r = sample_report();
    r.rows[1].ratio = std::nan("");
    CHECK_THROWS(r.validate());
    r = sample_report();
    r.rows[0].pass = false;
    CHECK_FALSE(r.passed());
  }

  TEST_CASE("theta of the elementary measure") {
    const ScanReport t = exp_theta_s11();
    CHECK(t.rows.size() == 20);
    CHECK(t.passed());
    CHECK(t.metadata.at("max_abs_error") < 1e-8);
    CHECK(std::abs(t.rows[0].value - std::exp(-TWO_PI)) < 1e-8);
    CHECK(std::abs(t.rows[1].value - std::sqrt(2.0) * std::exp(-2.0 * TWO_PI)) < 1e-8);
    const cplx shifted = theta_s11(cplx(0.3, 1.0));
    CHECK(std::abs(shifted / t.rows[0].value - e2pi(0.3)) < 1e-6);
  }

  TEST_CASE("Eisenstein eigenvalues") {
    const ScanReport a = exp_eisenstein_eigen(2, {0.0});
    CHECK(a.passed());
    CHECK(std::abs(a.rows[0].value - 2.0) < 1e-15);
    const ScanReport b = exp_eisenstein_eigen(3, {2.0});
    CHECK(b.passed());
    CHECK(std::abs(b.rows[0].value - 2.0 * std::cos(std::log(3.0))) < 1e-15);
    // pointwise rows carry the measured ratio T E / E
    for (std::size_t i = 1; i < b.rows.size(); ++i) CHECK(std::abs(b.rows[i].value - b.rows[0].value) < 1e-6);
  }

  TEST_CASE("envelope scan") {
    const EulerImage h(default_test_function());
    EnvelopeOptions opt;
    const ScanReport r = exp_scan_envelope(2, 2, h, opt);
    CHECK(r.passed());
    CHECK(r.rows.size() == 7);
    const ReportRow* top = nullptr;
    for (const auto& row : r.rows)
      if (row.params[0].second == 2 && row.params[1].second == 0) top = &row;
    REQUIRE(top != nullptr);
    LatticeOptions lo;
    lo.radius = 2 * opt.radius;
    CHECK(std::abs(std::abs(top->value) - std::abs(pair_B1(h.h(), lo).value)) < 1e-12);
    CHECK(r.metadata.at("fitted_norm_fine") > 0);
    CHECK_THROWS_AS(exp_scan_envelope(2, 2, h, EnvelopeOptions{1.5, 20}), DomainError);
    CHECK_THROWS_AS(exp_scan_envelope(2, 2, h, EnvelopeOptions{0.1, 5}), DomainError);
  }

  TEST_CASE("binomial budget") {
    const ScanReport r = exp_binomial_budget(2, 3, 0.1);
    CHECK(r.passed());
    const ReportRow* tot = find_row(r, "l", -1.0);
    REQUIRE(tot != nullptr);
    CHECK(tot->params[1].second == 64.0);
    for (int N = 1; N <= 16; ++N) CHECK(exp_binomial_budget(3, N, 0.1, 2.5).passed());
    const double b5 = exp_binomial_budget(2, 5, 0.1).metadata.at("budget");
    const double b6 = exp_binomial_budget(2, 6, 0.1).metadata.at("budget");
    CHECK(b6 / b5 == doctest::Approx(4.0 * std::pow(2.0, 0.1)).epsilon(1e-13));
    // beta keeps exp(pi (A+1)^2 N beta) at p^{N eps / 2}
    const double beta = budget_beta(2, 0.1, 4);
    CHECK(std::exp(PI * 25.0 * 3 * beta) == doctest::Approx(std::pow(2.0, 0.15)).epsilon(1e-13));
  }

  TEST_CASE("B_m consistency") {
    const ScanReport r = exp_bm_consistency({1}, default_test_function());
    CHECK(r.passed());
    CHECK(r.rows.size() == 1);
  }

  TEST_CASE("window localization") {
    std::vector<WindowTerm> terms;
    for (double lam : {5.0, 6.0, 7.0}) terms.push_back({"eisenstein", eisenstein_model(lam, 10), 1.0});
    const ScanReport r = exp_window_localization(terms, 1, 2, 1, 1.0, default_test_function());
    CHECK(r.passed());
    CHECK(std::abs(std::abs(r.rows[0].value) - std::exp(-PI)) < 0.05 * std::exp(-PI));
    CHECK(std::abs(r.rows[1].value - 1.0) < 1e-12);
    CHECK_THROWS_AS(exp_window_localization(terms, 5, 2, 1, 1.0, default_test_function()), DomainError);
  }

  TEST_CASE("Ramanujan check on fixtures") {
    const MaassExpansion syn = load_fixture(FIXTURE_DIR "/synthetic_nonunitary.json");
    const ScanReport s = exp_ramanujan(syn);
    CHECK(s.passed());
    CHECK(s.metadata.at("ramanujan_violations") >= 1);
    bool flagged = false;
    for (const auto& row : s.rows)
      if (row.note == "Ramanujan bound violated at p = 2") flagged = true;
    CHECK(flagged);
    const ScanReport e = exp_ramanujan(load_fixture(FIXTURE_DIR "/eisenstein_model.json"));
    CHECK(e.passed());
    CHECK(e.metadata.at("ramanujan_violations") == 0);
    const ScanReport m = exp_ramanujan(load_fixture(FIXTURE_DIR "/minimal.json"));
    CHECK(m.rows.empty());
  }

  TEST_CASE("experiments are deterministic") {
    CHECK(exp_theta_s11().to_csv() == exp_theta_s11().to_csv());
    CHECK(exp_binomial_budget(5, 4, 0.1).to_json() == exp_binomial_budget(5, 4, 0.1).to_json());
  }

  TEST_CASE("random test functions") {
    std::mt19937_64 a(9), b(9);
    const GaussPoly x = random_gausspoly(a), y = random_gausspoly(b);
    CHECK(x(0.3, 0.2) == y(0.3, 0.2));
    CHECK(min_decay(x) > 0);
  }
}
