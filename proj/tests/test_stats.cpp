#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "asl/runner.hpp"
#include "asl/stats.hpp"

using namespace asl;

namespace {
constexpr double kPi = 3.14159265358979323846;

AngleEnsemble synthetic(std::vector<double> thetas) {
  AngleEnsemble ens;
  ens.q = 3;
  ens.a = 1;
  ens.gamma_idx = 1;
  ens.p = 3;
  for (double t : thetas) {
    AngleSample s;
    s.degree = 1;
    s.theta = t;
    s.theta_lifted = t;
    s.kln_real = 2.0 * std::cos(t);
    ens.samples.push_back(s);
  }
  return ens;
}
}  // namespace

TEST_CASE("angle ensemble at q=3, a=1, gamma=1") {
  const FieldCtx* F3 = make_field(3, 1, 1);
  AngleEnsemble ens = angle_ensemble(curve_params(F3, 1, 1));
  REQUIRE(ens.samples.size() == 2);
  for (const auto& s : ens.samples) {
    CHECK(s.theta == doctest::Approx(1.2779535550663).epsilon(1e-9));
    CHECK(s.degree == 1);
  }
}

TEST_CASE("sample count equals |P_q(a)|") {
  for (auto [q, a] : {std::pair<std::uint64_t, int>{3, 2}, {3, 3}, {5, 2}}) {
    auto [p, e] = factor_prime_power(q);
    const FieldCtx* B = make_field(p, e, 1);
    AngleEnsemble ens = angle_ensemble(curve_params(B, a, 1));
    CHECK(ens.samples.size() == place_set(B, a).size());
    for (const auto& s : ens.samples) {
      CHECK(s.theta > 0.0);
      CHECK(s.theta < kPi);
    }
  }
}

TEST_CASE("changing the complex embedding permutes the angle multiset") {
  for (auto [q, a] : {std::pair<std::uint64_t, int>{5, 1}, {5, 2}, {7, 1}}) {
    auto [p, e] = factor_prime_power(q);
    const FieldCtx* B = make_field(p, e, 1);
    CurveParams params = curve_params(B, a, 1);
    std::vector<double> ref;
    for (const auto& s : angle_ensemble(params).samples) ref.push_back(s.theta);
    std::sort(ref.begin(), ref.end());
    for (std::int64_t s = 2; s < p; ++s) {
      std::vector<double> alt;
      for (const auto& smp : angle_ensemble(params, s).samples)
        alt.push_back(smp.theta);
      std::sort(alt.begin(), alt.end());
      REQUIRE(alt.size() == ref.size());
      for (std::size_t i = 0; i < ref.size(); ++i)
        CHECK(alt[i] == doctest::Approx(ref[i]).epsilon(1e-9));
    }
  }
}

TEST_CASE("moments: single sample at pi/2, worked value, trivial bound") {
  AngleEnsemble one = synthetic({kPi / 2});
  CHECK(moment(one, 1) == doctest::Approx(0.0).epsilon(1e-15));

  const FieldCtx* F3 = make_field(3, 1, 1);
  AngleEnsemble ens = angle_ensemble(curve_params(F3, 1, 1));
  CHECK(moment(ens, 1) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

  for (auto [q, a] : {std::pair<std::uint64_t, int>{3, 3}, {5, 2}}) {
    auto [p, e] = factor_prime_power(q);
    const FieldCtx* B = make_field(p, e, 1);
    AngleEnsemble big = angle_ensemble(curve_params(B, a, 2));
    for (int n = 1; n <= 8; ++n) {
      CHECK(std::abs(moment(big, n, Measure::Nu)) <= double(n + 1) + 1e-12);
      CHECK(std::abs(moment(big, n, Measure::Xi)) <= double(n + 1) + 1e-12);
    }
  }
}

TEST_CASE("star discrepancy: single sample at the Sato-Tate median") {
  AngleEnsemble one = synthetic({kPi / 2});
  CHECK(star_discrepancy(one) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(star_discrepancy(synthetic({})), EmptyEnsemble);
}

TEST_CASE("star discrepancy at the worked instance (frozen oracle value)") {
  // two equal angles arccos(1/(2 sqrt 3)): D* = 1 - F_ST(theta)
  const FieldCtx* F3 = make_field(3, 1, 1);
  AngleEnsemble ens = angle_ensemble(curve_params(F3, 1, 1));
  CHECK(star_discrepancy(ens) ==
        doctest::Approx(0.6811909542996992).epsilon(1e-9));
  double theta = std::acos(1.0 / (2.0 * std::sqrt(3.0)));
  CHECK(sato_tate_cdf(theta) == doctest::Approx(0.3188090457).epsilon(1e-9));
}

TEST_CASE("log sin^2 average: synthetic and worked values") {
  AngleEnsemble flat = synthetic({kPi / 2, kPi / 2});
  CHECK(log_sin2_average(flat) == doctest::Approx(0.0).epsilon(1e-15));

  const FieldCtx* F3 = make_field(3, 1, 1);
  AngleEnsemble ens = angle_ensemble(curve_params(F3, 1, 1));
  // sin^2(theta) = 1 - 1/12 = 11/12 at both places
  CHECK(log_sin2_average(ens) ==
        doctest::Approx(std::log(11.0 / 12.0)).epsilon(1e-12));
}

TEST_CASE("brauer-siegel ratio at the worked instance") {
  const FieldCtx* F3 = make_field(3, 1, 1);
  CHECK(brauer_siegel_ratio(curve_params(F3, 1, 1)) ==
        doctest::Approx(0.3942193905).epsilon(1e-6));
}

TEST_CASE("xi weights: degree-weighted total is q^a - 1") {
  const FieldCtx* F3 = make_field(3, 1, 1);
  AngleEnsemble ens = angle_ensemble(curve_params(F3, 3, 1));
  std::uint64_t total = 0;
  for (const auto& s : ens.samples) total += std::uint64_t(s.degree);
  CHECK(total == 26);  // 3^3 - 1
}

TEST_CASE("xi measure equals the direct big-field ensemble") {
  // lifted angles (a/d) theta mod pi, with multiplicity d, reproduce the
  // angles of Kl over F_{q^a} at gamma beta^2 for beta in that field
  for (auto [q, a] : {std::pair<std::uint64_t, int>{3, 2}, {3, 3}, {5, 2}}) {
    auto [p, e] = factor_prime_power(q);
    const FieldCtx* B = make_field(p, e, 1);
    CurveParams params = curve_params(B, a, 1);
    AngleEnsemble ens = angle_ensemble(params);

    std::vector<double> lifted;
    for (const auto& s : ens.samples)
      for (int i = 0; i < s.degree; ++i)
        lifted.push_back(std::cos(2.0 * s.theta_lifted));

    const FieldCtx* F = make_field(p, e, a);
    CharSpec psi = standard_character(B);
    FFElem gamma_f = subfield_embed(params.gamma, F);
    std::vector<double> direct;
    for (std::uint64_t bi = 1; bi < F->size; ++bi) {
      FFElem beta = F->element(bi);
      KloostermanValue kv = package_kloosterman(
          F, gamma_f * beta * beta,
          kloosterman_sum(F, gamma_f * beta * beta, psi));
      direct.push_back(std::cos(2.0 * kv.theta));
    }
    REQUIRE(lifted.size() == direct.size());
    std::sort(lifted.begin(), lifted.end());
    std::sort(direct.begin(), direct.end());
    for (std::size_t i = 0; i < lifted.size(); ++i)
      CHECK(lifted[i] == doctest::Approx(direct[i]).epsilon(1e-6));
  }
}

TEST_CASE("erdos-turan majorant bounds the discrepancy with C <= 8") {
  for (auto [q, a] : {std::pair<std::uint64_t, int>{3, 3}, {3, 4}, {5, 2}}) {
    auto [p, e] = factor_prime_power(q);
    const FieldCtx* B = make_field(p, e, 1);
    for (std::uint64_t g = 1; g < q; ++g) {
      AngleEnsemble ens = angle_ensemble(curve_params(B, a, g));
      double D = star_discrepancy(ens);
      for (int N = 1; N <= 21; N += 2)
        CHECK(D <= 8.0 * erdos_turan_majorant(ens, N));
    }
  }
}

TEST_CASE("koksma-type bound for g = cos") {
  // integral of cos against the Sato-Tate measure vanishes; the empirical
  // mean is controlled by D* times the total variation 2
  for (auto [q, a] : {std::pair<std::uint64_t, int>{3, 4}, {5, 2}, {7, 1}}) {
    auto [p, e] = factor_prime_power(q);
    const FieldCtx* B = make_field(p, e, 1);
    AngleEnsemble ens = angle_ensemble(curve_params(B, a, 1));
    double mean = 0;
    for (const auto& s : ens.samples) mean += std::cos(s.theta);
    mean /= double(ens.samples.size());
    double D = star_discrepancy(ens);
    CHECK(std::abs(mean) <= 2.0 * D + 1e-12);
    CHECK(std::abs(mean) <= 3.0 * D + 1e-12);
  }
}

TEST_CASE("min angle margin beats (q^a)^(-2(p-1))") {
  for (auto [q, a] : {std::pair<std::uint64_t, int>{3, 4}, {9, 2}}) {
    auto [p, e] = factor_prime_power(q);
    const FieldCtx* B = make_field(p, e, 1);
    for (std::uint64_t g = 1; g < q; ++g) {
      AngleEnsemble ens = angle_ensemble(curve_params(B, a, g));
      double bound = std::pow(double(q), -2.0 * double(p - 1) * a);
      CHECK(min_angle_margin(ens) > bound);
    }
  }
}

TEST_CASE("compute_stats bundles the sweep row consistently") {
  const FieldCtx* F3 = make_field(3, 1, 1);
  StatsResult r = compute_stats(curve_params(F3, 1, 1));
  CHECK(r.rank == 2);
  CHECK(r.places == 2);
  CHECK(r.b == 6);
  CHECK(r.lstar == mpq_class(121, 9));
  CHECK(r.fe_sign == 1);
  CHECK(r.dstar == doctest::Approx(0.6811909543).epsilon(1e-9));
  CHECK(r.log_sin2_avg == doctest::Approx(std::log(11.0 / 12.0)).epsilon(1e-9));
  CHECK(r.moments.size() == 8);
  CHECK(r.moments[0] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));
}
