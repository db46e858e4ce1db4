#include "asl/runner.hpp"

#include <cmath>

namespace asl {

namespace {
using u64 = std::uint64_t;

u64 upow(u64 b, int e) {
  u64 r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}
}  // namespace

std::pair<std::int64_t, int> factor_prime_power(u64 q) {
  if (q < 3) throw ZeroParameter("q must be an odd prime power >= 3");
  if (q % 2 == 0) throw EvenCharacteristic("q must be odd");
  for (std::int64_t p = 3; u64(p) * u64(p) <= q; p += 2) {
    if (q % u64(p) == 0) {
      int e = 0;
      u64 rem = q;
      while (rem % u64(p) == 0) {
        rem /= u64(p);
        ++e;
      }
      if (rem != 1) throw NotPrime("q is not a prime power");
      return {p, e};
    }
  }
  return {std::int64_t(q), 1};  // q itself prime (primality checked by make_field)
}

std::vector<Instance> frozen_grid() {
  std::vector<Instance> out;
  for (u64 q : {3ull, 5ull, 7ull, 9ull}) {
    auto [p, e] = factor_prime_power(q);
    for (int a = 1; upow(q, a) <= 2187; ++a) {
      for (u64 g = 1; g < q; ++g) out.push_back(Instance{p, e, a, g});
    }
  }
  return out;
}

CurveParams instance_params(const Instance& inst, const Caps& caps) {
  const FieldCtx* base = make_field(inst.p, inst.e, 1, caps);
  return curve_params(base, inst.a, inst.gamma_idx);
}

VerifyOutcome run_verify(const CurveParams& params, int n_max, const Caps& caps,
                         bool inject_coefficient_error) {
  const FieldCtx* B = params.base;
  CharSpec psi = standard_character(B);
  VerifyOutcome out;
  auto record = [&](const std::string& name, bool pass,
                    const std::string& detail = "") {
    out.checks.push_back(CheckResult{name, pass, detail});
  };

  // Salie's identity vs the defining sum, every alpha in every residue field
  {
    bool pass = true;
    for (int d = 1; d <= params.a && pass; ++d) {
      if (params.a % d) continue;
      const FieldCtx* F = make_field(B->p, B->e, d, caps);
      for (u64 ai = 1; ai < F->size; ++ai) {
        FFElem alpha = F->element(ai);
        if (kloosterman_sum(F, alpha, psi, caps) !=
            kloosterman_salie(F, alpha, psi, caps)) {
          pass = false;
          break;
        }
      }
    }
    record("salie-equivalence", pass);
  }

  // M_F(beta, gamma) identity on the small residue fields
  {
    bool pass = true;
    bool ran = false;
    for (int d = 1; d <= params.a && pass; ++d) {
      if (params.a % d) continue;
      const FieldCtx* F = make_field(B->p, B->e, d, caps);
      if (F->size > 49) continue;
      ran = true;
      FFElem gamma_f = get_embedding(B, F)->apply(params.gamma);
      mpz_class fs(std::to_string(F->size));
      for (u64 bi = 0; bi < F->size && pass; ++bi) {
        FFElem beta = F->element(bi);
        CycNum m = m_sum(F, beta, gamma_f, psi, caps);
        CycNum expect =
            bi == 0 ? CycNum::one(B->p)
                    : [&] {
                        CycNum kl = kloosterman_sum(
                            F, gamma_f * beta * beta, psi, caps);
                        return kl * kl - CycNum::from_integer(B->p, fs);
                      }();
        if (m != expect) pass = false;
      }
    }
    record("m-sum-identity", pass, ran ? "" : "no residue field of size <= 49");
  }

  // counting lemma over F_{q^n}, n <= a, q^n <= 729
  {
    bool pass = true;
    for (int n = 1; n <= params.a && pass; ++n) {
      if (upow(B->q, n) > 729) break;
      const FieldCtx* F = make_field(B->p, B->e, n, caps);
      for (u64 zi = 0; zi < F->size && pass; ++zi) {
        auto both = artin_schreier_count(F, F->element(zi), params.a, psi, caps);
        if (mpz_class(both.preimages) != both.character_side) pass = false;
      }
    }
    record("counting-lemma", pass);
  }

  // reduction data: discriminant identity, squarefreeness, valuations
  {
    auto rep = reduction_report(params, caps);
    bool pass = rep.disc_matches_closed_form && rep.wp_squarefree &&
                rep.f2_squarefree && rep.factors_coprime &&
                rep.f2_valuation == 2;
    for (const auto& [f, ord] : rep.wp_factors)
      if (ord != 4) pass = false;
    mpz_class f2deg = 0;
    for (const auto& [d, cnt] : rep.f2_factor_degrees) f2deg += mpz_class(d) * cnt;
    if (f2deg != 2 * rep.height_exponent) pass = false;
    if (rep.degree_l != rep.deg_conductor - 4) pass = false;
    record("reduction-invariants", pass);
  }

  // L-polynomial based checks
  LPoly L = l_polynomial(params, psi, caps);
  if (inject_coefficient_error && L.c.size() > 1) L.c[1] += 1;

  {
    bool pass = true;
    std::string detail;
    try {
      verify_functional_equation(L);
    } catch (const FunctionalEquationViolated& err) {
      pass = false;
      detail = err.what();
    }
    record("functional-equation", pass, detail);
  }

  {
    auto ps = place_set(B, params.a, caps);
    long rank = analytic_rank(L);
    record("rank-identity", rank == long(ps.size()),
           "rank " + std::to_string(rank) + ", places " +
               std::to_string(ps.size()));
  }

  {
    bool pass = true;
    std::string detail;
    try {
      SpecialValueReport sv = special_value(params, L, caps);
      // sin^2 form of the special value, float route at relative 1e-6
      AngleEnsemble ens = angle_ensemble(params, caps);
      double logged = 0;
      for (const auto& s : ens.samples)
        logged += std::log(4.0 * s.degree) +
                  std::log1p(-std::cos(s.theta) * std::cos(s.theta));
      if (std::abs(logged - sv.log_value) >
          1e-6 * std::max(1.0, std::abs(sv.log_value)))
        pass = false;
    } catch (const Error& err) {
      pass = false;
      detail = err.what();
    }
    record("special-value-routes", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    try {
      verify_series(params, L, n_max, caps);
    } catch (const MismatchAt& err) {
      pass = false;
      detail = err.what();
    }
    record("series-match", pass, detail);
  }

  return out;
}

StatsResult compute_stats(const CurveParams& params, const Caps& caps) {
  StatsResult r;
  r.inst.p = params.base->p;
  r.inst.e = params.base->e;
  r.inst.a = params.a;
  r.inst.gamma_idx = params.base->index_of(params.gamma);

  LPoly L = l_polynomial(params, caps);
  SpecialValueReport sv = special_value(params, L, caps);
  r.rank = sv.rank;
  r.b = sv.b;
  r.lstar = sv.special_value;
  r.log_ratio = sv.log_ratio;
  r.fe_sign = verify_functional_equation(L);

  AngleEnsemble ens = angle_ensemble(params, caps);
  r.places = long(ens.samples.size());
  r.dstar = star_discrepancy(ens, Measure::Nu);
  r.dstar_xi = star_discrepancy(ens, Measure::Xi);
  r.min_margin = min_angle_margin(ens);
  r.log_sin2_avg = log_sin2_average(ens);
  for (int n = 1; n <= 8; ++n) {
    r.moments.push_back(moment(ens, n, Measure::Nu));
    r.xi_moments.push_back(moment(ens, n, Measure::Xi));
  }
  return r;
}

}  // namespace asl
