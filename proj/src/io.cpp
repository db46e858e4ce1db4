#include <json.hpp>
#include <cstdio>
#include <sstream>

#include "asl/runner.hpp"

namespace asl {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string mpq_sci_string(const mpq_class& v) {
  mpf_class f(0, 128);
  mpf_set_q(f.get_mpf_t(), v.get_mpq_t());
  mp_exp_t exp10 = 0;
  std::string digits = f.get_str(exp10, 10, 17);
  bool neg = !digits.empty() && digits[0] == '-';
  std::string mag = neg ? digits.substr(1) : digits;
  if (mag.empty()) return "0";
  while (mag.size() < 2) mag += "0";
  std::ostringstream os;
  if (neg) os << "-";
  os << mag[0] << "." << mag.substr(1) << "e";
  long e = long(exp10) - 1;
  os << (e < 0 ? "-" : "+");
  if (std::abs(e) < 10) os << "0";
  os << std::abs(e);
  return os.str();
}

}  // namespace

std::string lfunc_json(const LPoly& L, const SpecialValueReport& sv, int eps) {
  nlohmann::ordered_json j;
  j["q"] = L.q;
  j["a"] = L.a;
  j["gamma"] = L.gamma_idx;
  j["degree"] = L.degree();
  std::vector<std::string> coeffs;
  coeffs.reserve(L.c.size());
  for (const auto& c : L.c) coeffs.push_back(c.get_str());
  j["coeffs"] = coeffs;
  j["rank"] = sv.rank;
  j["special_value"] = sv.special_value.get_str();
  j["special_value_sci"] = mpq_sci_string(sv.special_value);
  j["log_special_value"] = sv.log_value;
  j["log_ratio"] = sv.log_ratio;
  j["functional_equation_sign"] = eps;
  return j.dump(2) + "\n";
}

std::string stats_json(const StatsResult& r) {
  nlohmann::ordered_json j;
  j["q"] = r.inst.q();
  j["a"] = r.inst.a;
  j["gamma"] = r.inst.gamma_idx;
  j["places"] = r.places;
  j["rank"] = r.rank;
  j["b"] = r.b.get_str();
  j["lstar"] = r.lstar.get_str();
  j["lstar_sci"] = mpq_sci_string(r.lstar);
  j["log_ratio"] = r.log_ratio;
  j["discrepancy"] = r.dstar;
  j["xi_discrepancy"] = r.dstar_xi;
  j["min_margin"] = r.min_margin;
  j["log_sin2_avg"] = r.log_sin2_avg;
  j["functional_equation_sign"] = r.fe_sign;
  j["moments"] = r.moments;
  j["xi_moments"] = r.xi_moments;
  return j.dump(2) + "\n";
}

std::string ensemble_csv(const AngleEnsemble& ens) {
  std::ostringstream os;
  os << "place,degree,kln_real,theta\n";
  for (const auto& s : ens.samples) {
    os << s.place << "," << s.degree << "," << fmt_double(s.kln_real) << ","
       << fmt_double(s.theta) << "\n";
  }
  return os.str();
}

std::string sweep_csv(const std::vector<StatsResult>& rows) {
  std::ostringstream os;
  os << "q,a,gamma,rho,b,lstar,log_ratio,dstar,min_margin,log_sin2_avg";
  for (int n = 1; n <= 8; ++n) os << ",m" << n;
  os << "\n";
  for (const auto& r : rows) {
    os << r.inst.q() << "," << r.inst.a << "," << r.inst.gamma_idx << ","
       << r.rank << "," << r.b.get_str() << "," << mpq_sci_string(r.lstar)
       << "," << fmt_double(r.log_ratio) << "," << fmt_double(r.dstar) << ","
       << fmt_double(r.min_margin) << "," << fmt_double(r.log_sin2_avg);
    for (double m : r.moments) os << "," << fmt_double(m);
    os << "\n";
  }
  return os.str();
}

}  // namespace asl
