#include "asl/stats.hpp"

#include <algorithm>
#include <cmath>

namespace asl {

namespace {
constexpr double kPi = 3.14159265358979323846;

double chebyshev_u(int n, double c) {
  // stable three-term recurrence; avoids sin ratios near the endpoints
  double um1 = 1.0, u = 2.0 * c;
  if (n == 0) return um1;
  for (int i = 1; i < n; ++i) {
    double nxt = 2.0 * c * u - um1;
    um1 = u;
    u = nxt;
  }
  return u;
}
}  // namespace

AngleEnsemble angle_ensemble(const CurveParams& params, const Caps& caps) {
  return angle_ensemble(params, 1, caps);
}

AngleEnsemble angle_ensemble(const CurveParams& params, std::int64_t embedding,
                             const Caps& caps) {
  const FieldCtx* B = params.base;
  AngleEnsemble ens;
  ens.q = B->q;
  ens.a = params.a;
  ens.gamma_idx = B->index_of(params.gamma);
  ens.p = B->p;
  auto ps = place_set(B, params.a, caps);
  CharSpec psi = standard_character(B);
  double qa1 = 0;
  for (const auto& v : ps.places) qa1 += double(v.degree);
  for (const auto& v : ps.places) {
    KloostermanValue kv = kln(v, params.gamma, psi, caps);
    AngleSample s;
    s.place = v.poly.str();
    s.place_index = v.poly.monic_index();
    s.degree = v.degree;
    double real = embed_complex(kv.value, embedding).real();
    s.kln_real = real;
    double half = real / (2.0 * std::sqrt(double(kv.field_size)));
    half = std::clamp(half, -1.0, 1.0);
    s.theta = std::acos(half);
    double lift = std::fmod(double(params.a) / double(v.degree) * s.theta, kPi);
    if (lift < 0) lift += kPi;
    s.theta_lifted = lift;
    ens.samples.push_back(std::move(s));
  }
  (void)qa1;
  return ens;
}

double moment(const AngleEnsemble& ens, int n, Measure which) {
  if (ens.samples.empty()) throw EmptyEnsemble("moment of empty ensemble");
  double acc = 0, wsum = 0;
  for (const auto& s : ens.samples) {
    if (which == Measure::Nu) {
      acc += chebyshev_u(n, std::cos(s.theta));
      wsum += 1.0;
    } else {
      double w = double(s.degree);
      acc += w * chebyshev_u(n, std::cos(s.theta_lifted));
      wsum += w;
    }
  }
  return acc / wsum;
}

double sato_tate_cdf(double x) {
  return x / kPi - std::sin(2.0 * x) / (2.0 * kPi);
}

double star_discrepancy(const AngleEnsemble& ens, Measure which) {
  if (ens.samples.empty())
    throw EmptyEnsemble("star discrepancy of empty ensemble");
  std::vector<std::pair<double, double>> pts;  // (angle, weight)
  double wsum = 0;
  for (const auto& s : ens.samples) {
    double w = which == Measure::Nu ? 1.0 : double(s.degree);
    double th = which == Measure::Nu ? s.theta : s.theta_lifted;
    pts.emplace_back(th, w);
    wsum += w;
  }
  std::sort(pts.begin(), pts.end());
  double disc = 0, cum = 0;
  for (const auto& [th, w] : pts) {
    double F = sato_tate_cdf(th);
    disc = std::max(disc, std::abs(cum / wsum - F));
    cum += w;
    disc = std::max(disc, std::abs(cum / wsum - F));
  }
  return disc;
}

double log_sin2_average(const AngleEnsemble& ens) {
  if (ens.samples.empty())
    throw EmptyEnsemble("log-sin^2 average of empty ensemble");
  double acc = 0;
  for (const auto& s : ens.samples) {
    double c = std::cos(s.theta);
    acc += std::log1p(-c * c);  // log(sin^2) = log(1 - cos^2)
  }
  return acc / double(ens.samples.size());
}

double min_angle_margin(const AngleEnsemble& ens) {
  if (ens.samples.empty()) throw EmptyEnsemble("margin of empty ensemble");
  double m = kPi;
  for (const auto& s : ens.samples)
    m = std::min(m, std::min(s.theta, kPi - s.theta));
  return m;
}

double brauer_siegel_ratio(const CurveParams& params, const Caps& caps) {
  return special_value(params, caps).log_ratio;
}

double erdos_turan_majorant(const AngleEnsemble& ens, int N) {
  double acc = 1.0 / double(N);
  for (int n = 1; n <= 2 * N - 1; ++n) {
    acc += double(n + 1) / (double(n) * double(n + 2)) *
           std::abs(moment(ens, n, Measure::Nu));
  }
  return acc;
}

}  // namespace asl
