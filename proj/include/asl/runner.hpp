#ifndef ASL_RUNNER_HPP
#define ASL_RUNNER_HPP

#include <string>
#include <vector>

#include "asl/stats.hpp"

namespace asl {

struct Instance {
  std::int64_t p = 0;
  int e = 1;
  int a = 1;
  std::uint64_t gamma_idx = 1;
  std::uint64_t q() const {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= std::uint64_t(p);
    return r;
  }
};

// q in {3,5,7,9}, every a with q^a <= 3^7 = 2187, every gamma in F_q^x
std::vector<Instance> frozen_grid();

CurveParams instance_params(const Instance& inst,
                            const Caps& caps = default_caps());

// factor q into p^e (and reject q that is not an odd prime power)
std::pair<std::int64_t, int> factor_prime_power(std::uint64_t q);

// ---- verify ----

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOutcome {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

VerifyOutcome run_verify(const CurveParams& params, int n_max,
                         const Caps& caps = default_caps(),
                         bool inject_coefficient_error = false);

// ---- per-instance statistics bundle (one sweep row) ----

struct StatsResult {
  Instance inst;
  long rank = 0;
  long places = 0;
  mpz_class b;
  mpq_class lstar;
  double log_ratio = 0;
  double dstar = 0;          // nu-measure star discrepancy
  double dstar_xi = 0;
  double min_margin = 0;
  double log_sin2_avg = 0;
  int fe_sign = 0;
  std::vector<double> moments;     // M_1..M_8 (nu)
  std::vector<double> xi_moments;  // same under xi
};

StatsResult compute_stats(const CurveParams& params,
                          const Caps& caps = default_caps());

// ---- serialization (deterministic) ----

std::string lfunc_json(const LPoly& L, const SpecialValueReport& sv, int eps);
std::string stats_json(const StatsResult& r);
std::string ensemble_csv(const AngleEnsemble& ens);
std::string sweep_csv(const std::vector<StatsResult>& rows);

}  // namespace asl

#endif
