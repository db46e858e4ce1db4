#ifndef ASL_STATS_HPP
#define ASL_STATS_HPP

#include <string>

#include "asl/lfunction.hpp"

namespace asl {

enum class Measure { Nu, Xi };

// The angle multiset {theta_gamma(v)} over P_q(a), with the lifted-angle
// weights for the xi measure. Input to every Sato-Tate statistic.
struct AngleSample {
  std::string place;      // polynomial, printable form
  std::uint64_t place_index;  // monic index (sorting key within a degree)
  int degree = 0;
  double kln_real = 0;
  double theta = 0;          // in (0, pi)
  double theta_lifted = 0;   // (a/d) * theta mod pi, weight d/(q^a - 1)
};

struct AngleEnsemble {
  std::uint64_t q = 0;
  int a = 0;
  std::uint64_t gamma_idx = 0;
  std::int64_t p = 0;
  std::vector<AngleSample> samples;  // deterministic (degree, index) order
};

AngleEnsemble angle_ensemble(const CurveParams& params,
                             const Caps& caps = default_caps());
// with an explicit complex embedding zeta -> exp(2 pi i s / p)
AngleEnsemble angle_ensemble(const CurveParams& params, std::int64_t embedding,
                             const Caps& caps = default_caps());

// n-th moment: ensemble average of U_n(cos theta) = sin((n+1)theta)/sin theta
// (Nu: uniform weights over places; Xi: weight d_v/(q^a-1) at lifted angles).
double moment(const AngleEnsemble& ens, int n, Measure which = Measure::Nu);

// closed-form Sato-Tate CDF x/pi - sin(2x)/(2 pi)
double sato_tate_cdf(double x);

// sup |F_emp - F_ST| over jump points
double star_discrepancy(const AngleEnsemble& ens, Measure which = Measure::Nu);

// (1/|P|) sum log sin^2 theta_v; tends to log(e/4) = 1 - log 4
double log_sin2_average(const AngleEnsemble& ens);

double min_angle_margin(const AngleEnsemble& ens);

// log L* / (b log q) from the exact special value
double brauer_siegel_ratio(const CurveParams& params,
                           const Caps& caps = default_caps());

// right side of the Erdos-Turan-type bound: 1/N + sum_{n<2N} (n+1)/(n(n+2)) |M_n|
double erdos_turan_majorant(const AngleEnsemble& ens, int N);

}  // namespace asl

#endif
