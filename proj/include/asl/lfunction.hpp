#ifndef ASL_LFUNCTION_HPP
#define ASL_LFUNCTION_HPP

#include "asl/curve.hpp"

namespace asl {

// L(E, T) as an exact integer polynomial of degree b = 3(q^a - 1):
// the product over places of degree dividing a of
//   (1 - q^d T^d)(1 - (Kln^2 - 2 q^d) T^d + q^(2d) T^(2d)).
struct LPoly {
  std::uint64_t q = 0;
  int a = 0;
  std::uint64_t gamma_idx = 0;
  std::vector<mpz_class> c;  // c[0..b]
  int degree() const { return int(c.size()) - 1; }
};

LPoly l_polynomial(const CurveParams& params, const CharSpec& psi,
                   const Caps& caps = default_caps(),
                   bool debug_gates = false);
LPoly l_polynomial(const CurveParams& params,
                   const Caps& caps = default_caps());

// multiplicity of T = 1/q as a root, by exact repeated deflation
long analytic_rank(const LPoly& L);

struct SpecialValueReport {
  long rank = 0;
  mpq_class special_value;  // exact; equals n / q^b for a positive integer n
  double float_value = 0;   // may overflow to +inf at large b
  double log_value = 0;     // natural log of the special value
  mpz_class b;
  double log_ratio = 0;  // log L* / (b log q)
};

// Computes L* two independent ways (deflation of the polynomial at T=1/q,
// and the product over places of 4 d_v (1 - Kln^2 / (4 q^(d_v)))) and
// requires exact agreement.
SpecialValueReport special_value(const CurveParams& params,
                                 const Caps& caps = default_caps());
SpecialValueReport special_value(const CurveParams& params, const LPoly& L,
                                 const Caps& caps = default_caps());

// finds eps in {+1,-1} with c_{b-k} q^(2k) = eps q^b c_k for all k;
// throws FunctionalEquationViolated if neither sign works
int verify_functional_equation(const LPoly& L);

// Dirichlet coefficients of log L from the polynomial, against brute-force
// point counts; exact equality required for 1 <= n <= n_max.
struct SeriesReport {
  int n_max = 0;
  std::vector<mpz_class> from_l;       // S_1..S_{n_max}
  std::vector<mpz_class> from_counts;  // same, by point counting
};
SeriesReport verify_series(const CurveParams& params, const LPoly& L,
                           int n_max, const Caps& caps = default_caps());

// S_n read off the polynomial alone (integer Newton recurrence)
std::vector<mpz_class> log_series_coefficients(const LPoly& L, int n_max);

// natural log of an exact positive rational (stable for huge values)
double log_mpq(const mpq_class& v);

}  // namespace asl

#endif
