#ifndef ASL_CURVE_HPP
#define ASL_CURVE_HPP

#include <map>
#include <optional>

#include "asl/kloosterman.hpp"
#include "asl/places.hpp"

namespace asl {

// The family y^2 = x (x + 16 gamma) (x + w(t)^2) over F_q(t), where
// w(t) = t^(q^a) - t and gamma in F_q^x.
struct CurveParams {
  const FieldCtx* base = nullptr;  // F_q
  int a = 0;
  FFElem gamma;
};

CurveParams curve_params(const FieldCtx* base, int a, std::uint64_t gamma_idx);

struct ReductionReport {
  PolyFq wp;    // w(t) = t^(q^a) - t
  PolyFq f2;    // w(t)^2 - 16 gamma
  PolyFq disc;  // discriminant of the model, by the general formula
  bool disc_matches_closed_form = false;  // == 2^12 gamma^2 w^4 (w^2-16g)^2
  bool wp_squarefree = false;
  bool f2_squarefree = false;
  bool factors_coprime = false;
  // finite bad places: the factors of w (place t plus every place of degree
  // dividing a), each with its exact discriminant valuation
  std::vector<std::pair<PolyFq, int>> wp_factors;
  // distinct-degree factor counts of w^2 - 16 gamma (degree -> #factors)
  std::map<int, long> f2_factor_degrees;
  int f2_valuation = 0;  // common ord_v(disc) at v | f2
  mpz_class deg_delta_min;     // 12 q^a
  mpz_class deg_conductor;     // 3 q^a + 1
  mpz_class degree_l;          // b = 3(q^a - 1) = deg_conductor - 4
  mpz_class height_exponent;   // q^a  (H = q^(q^a))
};

ReductionReport reduction_report(const CurveParams& params,
                                 const Caps& caps = default_caps());

// A(tau, q^n) = q^n + 1 - #fiber(F_{q^n}); computed as -sum_x lambda(f_tau(x))
// for finite tau, and +1 at tau = infinity (split multiplicative).
// tau must live in F_{q^n}; pass std::nullopt for infinity.
std::int64_t frobenius_trace(const CurveParams& params,
                             const std::optional<FFElem>& tau, int n,
                             const Caps& caps = default_caps());

// S_n = sum over P^1(F_{q^n}) of A(tau, q^n); pure point counting.
mpz_class dirichlet_coefficient(const CurveParams& params, int n,
                                const Caps& caps = default_caps());

// S_n through the Kloosterman route (the character-sum identity):
// -sum over beta in (F_{q^a} cap F_{q^n})^x of (Kl_{q^n}(psi; gamma b^2)^2 - q^n)
mpz_class dirichlet_coefficient_kloosterman(const CurveParams& params, int n,
                                            const CharSpec& psi,
                                            const Caps& caps = default_caps());

// M_F(beta, gamma) = sum_{x,z} lambda(x(x+16g)(x+z^2)) psi(beta z), exact.
CycNum m_sum(const FieldCtx* F, const FFElem& beta, const FFElem& gamma,
             const CharSpec& psi, const Caps& caps = default_caps());

// Both sides of the Artin-Schreier counting identity over F = F_{q^n}:
// #preimages of z under tau -> tau^(q^a) - tau, and the character sum
// over beta in F_{q^a} cap F of psi_F(beta z) reduced to an integer.
struct ArtinSchreierCount {
  std::int64_t preimages;
  mpz_class character_side;
};
ArtinSchreierCount artin_schreier_count(const FieldCtx* F, const FFElem& z,
                                        int a, const CharSpec& psi,
                                        const Caps& caps = default_caps());

// naive affine point count of y^2 = x(x+16g)(x+c^2) over tau's field
// (test oracle for frobenius_trace)
std::int64_t naive_affine_points(const CurveParams& params, const FFElem& tau,
                                 int n, const Caps& caps = default_caps());

}  // namespace asl

#endif
