#include "asl/lfunction.hpp"

#include <cmath>

namespace asl {

namespace {
using u64 = std::uint64_t;

u64 upow(u64 b, int e) {
  u64 r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

mpz_class zpow(u64 b, long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, unsigned(e));
  return r;
}

struct LocalFactor {
  int d;
  CycNum t1;      // coefficient of T^d
  CycNum t2;      // coefficient of T^(2d)
  mpz_class t3;   // coefficient of T^(3d), a scalar
};

}  // namespace

double log_mpq(const mpq_class& v) {
  if (v <= 0) throw DivisionByZero("log of a nonpositive rational");
  signed long ne, de;
  double nm = mpz_get_d_2exp(&ne, v.get_num().get_mpz_t());
  double dm = mpz_get_d_2exp(&de, v.get_den().get_mpz_t());
  return std::log(nm) - std::log(dm) + M_LN2 * double(ne - de);
}

LPoly l_polynomial(const CurveParams& params, const Caps& caps) {
  return l_polynomial(params, standard_character(params.base), caps);
}

LPoly l_polynomial(const CurveParams& params, const CharSpec& psi,
                   const Caps& caps, bool debug_gates) {
  const FieldCtx* B = params.base;
  const std::int64_t p = B->p;
  auto ps = place_set(B, params.a, caps);
  const long b = long(3 * (upow(B->q, params.a) - 1));

  std::vector<CycNum> coeff(std::size_t(b) + 1, CycNum::zero(p));
  coeff[0] = CycNum::one(p);
  long filled = 0;
  long gate_countdown = 32;

  for (const auto& v : ps.places) {
    KloostermanValue kv = kln(v, params.gamma, psi, caps);
    const int d = v.degree;
    mpz_class qd = zpow(B->q, d);
    // (1 - q^d U)(1 - (Kln^2 - 2q^d) U + q^(2d) U^2), U = T^d:
    // 1 - (Kln^2 - q^d) U + q^d (Kln^2 - q^d) U^2 - q^(3d) U^3
    CycNum body = kv.value * kv.value - CycNum::from_integer(p, qd);
    LocalFactor f;
    f.d = d;
    f.t1 = -body;
    f.t2 = body * qd;
    f.t3 = -qd * qd * qd;

    long top = std::min<long>(filled + 3 * d, b);
    for (long i = top; i >= 0; --i) {
      CycNum& dst = coeff[std::size_t(i)];
      if (i >= d) dst.addmul(f.t1, coeff[std::size_t(i - d)]);
      if (i >= 2 * d) dst.addmul(f.t2, coeff[std::size_t(i - 2 * d)]);
      if (i >= 3 * d) dst.addmul_scalar(coeff[std::size_t(i - 3 * d)], f.t3);
    }
    filled = top;

    if (debug_gates && --gate_countdown == 0) {
      gate_countdown = 32;
      // partial products are conjugation-stable (every factor is totally
      // real) even though they are not yet rational
      for (long i = 0; i <= filled; ++i) {
        if (conj_bar(coeff[std::size_t(i)]) != coeff[std::size_t(i)])
          throw NotRationalInteger(
              "partial L-product lost conjugation stability");
      }
    }
  }

  LPoly L;
  L.q = B->q;
  L.a = params.a;
  L.gamma_idx = B->index_of(params.gamma);
  L.c.resize(std::size_t(b) + 1);
  for (long i = 0; i <= b; ++i)
    L.c[std::size_t(i)] = to_rational_integer(coeff[std::size_t(i)]);
  if (L.c[0] != 1)
    throw NotRationalInteger("constant coefficient of L is not 1");
  if (L.c[std::size_t(b)] == 0)
    throw NotRationalInteger("L has degree lower than 3(q^a - 1)");
  return L;
}

namespace {

// one exact deflation by (1 - qT): returns quotient iff remainder vanishes
bool deflate_once(const std::vector<mpz_class>& c, u64 q,
                  std::vector<mpz_class>* out) {
  std::vector<mpz_class> quo(c.size() - 1);
  mpz_class carry = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    carry = c[i] + q * carry;
    quo[i] = carry;
  }
  if (c.back() + q * carry != 0) return false;
  *out = std::move(quo);
  return true;
}

}  // namespace

long analytic_rank(const LPoly& L) {
  long rank = 0;
  std::vector<mpz_class> cur = L.c;
  std::vector<mpz_class> next;
  while (cur.size() > 1 && deflate_once(cur, L.q, &next)) {
    cur = std::move(next);
    ++rank;
  }
  return rank;
}

SpecialValueReport special_value(const CurveParams& params, const Caps& caps) {
  return special_value(params, l_polynomial(params, caps), caps);
}

SpecialValueReport special_value(const CurveParams& params, const LPoly& L,
                                 const Caps& caps) {
  const FieldCtx* B = params.base;
  const std::int64_t p = B->p;
  SpecialValueReport rep;
  rep.b = L.degree();

  // route (a): deflate (1-qT)^rank exactly, then evaluate at T = 1/q
  std::vector<mpz_class> cur = L.c;
  std::vector<mpz_class> next;
  long rank = 0;
  while (cur.size() > 1 && deflate_once(cur, L.q, &next)) {
    cur = std::move(next);
    ++rank;
  }
  rep.rank = rank;
  long m = long(cur.size()) - 1;
  mpz_class num = 0;
  for (long i = 0; i <= m; ++i) num += cur[std::size_t(i)] * zpow(L.q, m - i);
  if (num <= 0)
    throw DivisionByZero("special value is not positive (assembly bug)");
  mpq_class route_a(num, zpow(L.q, m));
  route_a.canonicalize();

  // route (b): product over places of 4 d_v (1 - Kln^2/(4 q^d)) assembled as
  // (prod d_v) * (prod (4 q^d - Kln^2)) / q^(sum d_v)
  auto ps = place_set(B, params.a, caps);
  CharSpec psi = standard_character(B);
  CycNum prod = CycNum::one(p);
  mpz_class dprod = 1;
  long degsum = 0;
  for (const auto& v : ps.places) {
    KloostermanValue kv = kln(v, params.gamma, psi, caps);
    mpz_class fourqd = 4 * zpow(B->q, v.degree);
    prod = prod * (CycNum::from_integer(p, fourqd) - kv.value * kv.value);
    dprod *= v.degree;
    degsum += v.degree;
  }
  mpq_class route_b(dprod * to_rational_integer(prod), zpow(L.q, degsum));
  route_b.canonicalize();

  if (route_a != route_b)
    throw NotRationalInteger(
        "special-value routes disagree (deflation vs place product)");
  if (long(ps.size()) != rank)
    throw NotRationalInteger("analytic rank differs from the place count");

  rep.special_value = route_a;
  rep.float_value = route_a.get_d();
  rep.log_value = log_mpq(route_a);
  rep.log_ratio =
      rep.log_value / (double(L.degree()) * std::log(double(L.q)));
  return rep;
}

int verify_functional_equation(const LPoly& L) {
  const long b = L.degree();
  mpz_class qb = zpow(L.q, b);
  // k = 0 pins the sign: c_b = eps q^b
  int eps;
  if (L.c[std::size_t(b)] == qb)
    eps = 1;
  else if (L.c[std::size_t(b)] == -qb)
    eps = -1;
  else
    throw FunctionalEquationViolated("c_b is not +/- q^b");
  for (long k = 0; 2 * k <= b; ++k) {
    mpz_class lhs = L.c[std::size_t(b - k)] * zpow(L.q, 2 * k);
    mpz_class rhs = eps * qb * L.c[std::size_t(k)];
    if (lhs != rhs)
      throw FunctionalEquationViolated(
          "coefficient symmetry fails at k=" + std::to_string(k));
  }
  return eps;
}

std::vector<mpz_class> log_series_coefficients(const LPoly& L, int n_max) {
  // T L'(T)/L(T) = sum S_n T^n: S_n = n c_n - sum_{j<n} S_j c_{n-j}
  std::vector<mpz_class> S(std::size_t(n_max) + 1, mpz_class(0));
  for (int n = 1; n <= n_max; ++n) {
    mpz_class s = n * L.c[std::size_t(n)];
    for (int j = 1; j < n; ++j) s -= S[std::size_t(j)] * L.c[std::size_t(n - j)];
    S[std::size_t(n)] = s;
  }
  return std::vector<mpz_class>(S.begin() + 1, S.end());
}

SeriesReport verify_series(const CurveParams& params, const LPoly& L,
                           int n_max, const Caps& caps) {
  SeriesReport rep;
  rep.n_max = n_max;
  if (n_max <= 0) return rep;
  if (n_max > L.degree())
    throw WorkLimitExceeded("n_max exceeds the polynomial degree");
  rep.from_l = log_series_coefficients(L, n_max);
  for (int n = 1; n <= n_max; ++n) {
    rep.from_counts.push_back(dirichlet_coefficient(params, n, caps));
    if (rep.from_counts.back() != rep.from_l[std::size_t(n - 1)])
      throw MismatchAt(n, "log L series coefficient S_" + std::to_string(n) +
                              " disagrees with the point count");
  }
  return rep;
}

}  // namespace asl
