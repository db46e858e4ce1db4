#include "asl/curve.hpp"

#include <numeric>

namespace asl {

namespace {
using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 upow(u64 b, int e) {
  u64 r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

mpz_class zpow(u64 b, int e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, unsigned(e));
  return r;
}

void require_work(u64 amount, const Caps& caps) {
  if (amount > caps.work_limit)
    throw WorkLimitExceeded(
        "operation exceeds the character-evaluation work limit");
}

void require_enumerable(const FieldCtx* F, const Caps& caps) {
  if (!F->has_tables() || F->size > caps.enumeration_cap)
    throw SizeCapExceeded("field too large to enumerate");
}

// index of 16*gamma embedded into F (16 reduced mod p)
u64 sixteen_gamma_idx(const CurveParams& params, const FieldCtx* F) {
  FFElem g16 =
      get_embedding(params.base, F)->apply(params.gamma) * F->from_int(16);
  return F->index_of(g16);
}

// sum over x in F of lambda(x (x+A) (x+B)), via log parities
i64 trace_sum(const FieldCtx* F, u64 A, u64 B) {
  i64 acc = 0;
  const u64 N = F->size;
  for (u64 x = 1; x < N; ++x) {
    u64 f2 = F->add_idx(x, A);
    if (f2 == 0) continue;
    u64 f3 = F->add_idx(x, B);
    if (f3 == 0) continue;
    acc += F->lambda_idx(x) * F->lambda_idx(f2) * F->lambda_idx(f3);
  }
  return acc;
}

u64 wp_image_idx(const FieldCtx* F, u64 tau, u64 qa_pow) {
  // w(tau) = tau^(q^a) - tau
  return F->sub_idx(F->pow_idx(tau, qa_pow), tau);
}

}  // namespace

CurveParams curve_params(const FieldCtx* base, int a, u64 gamma_idx) {
  if (gamma_idx == 0 || gamma_idx >= base->size)
    throw ZeroParameter("gamma must be a nonzero element of F_q");
  if (a < 1) throw ZeroParameter("a must be >= 1");
  return CurveParams{base, a, base->element(gamma_idx)};
}

ReductionReport reduction_report(const CurveParams& params, const Caps& caps) {
  const FieldCtx* B = params.base;
  const u64 q = B->q;
  if (upow(q, params.a) > caps.enumeration_cap)
    throw SizeCapExceeded("q^a exceeds enumeration cap in reduction_report");
  ReductionReport rep;
  const u64 qa = upow(q, params.a);

  // w(t) = t^(q^a) - t
  std::vector<std::uint32_t> wc(qa + 1, 0);
  wc[1] = std::uint32_t(B->index_of(-B->one()));
  wc[qa] = 1;
  rep.wp = poly_from_indices(B, wc);

  PolyFq g16 = poly_from_indices(
      B, {std::uint32_t(B->index_of(B->from_int(16) * params.gamma))});
  PolyFq w2 = poly_mul(rep.wp, rep.wp);
  rep.f2 = poly_sub(w2, g16);

  // model y^2 = x^3 + a2 x^2 + a4 x with a2 = w^2 + 16g, a4 = 16g w^2:
  // b6 = 0 collapses the general formula to disc = 16 a2^2 a4^2 - 64 a4^3
  PolyFq a2 = poly_add(w2, g16);
  PolyFq a4 = poly_mul(g16, w2);
  PolyFq a4sq = poly_mul(a4, a4);
  PolyFq term1 = poly_scale(poly_mul(poly_mul(a2, a2), a4sq),
                            std::uint32_t(B->index_of(B->from_int(16))));
  PolyFq term2 = poly_scale(poly_mul(a4sq, a4),
                            std::uint32_t(B->index_of(B->from_int(64))));
  rep.disc = poly_sub(term1, term2);

  // closed form 2^12 gamma^2 w^4 (w^2 - 16 gamma)^2
  FFElem lead = B->from_int(4096) * params.gamma * params.gamma;
  PolyFq closed =
      poly_scale(poly_mul(poly_mul(w2, w2), poly_mul(rep.f2, rep.f2)),
                 std::uint32_t(B->index_of(lead)));
  rep.disc_matches_closed_form = (rep.disc == closed);

  // squarefreeness and coprimality certificates
  rep.wp_squarefree = poly_gcd(rep.wp, poly_derivative(rep.wp)).degree() == 0;
  rep.f2_squarefree = poly_gcd(rep.f2, poly_derivative(rep.f2)).degree() == 0;
  rep.factors_coprime = poly_gcd(rep.wp, rep.f2).degree() == 0;

  // factorization of w: t times every place of degree dividing a.
  // Certify by multiplying the factors back together.
  auto ps = place_set(B, params.a, caps);
  std::vector<PolyFq> wfac;
  wfac.push_back(poly_t(B));
  for (const auto& v : ps.places) wfac.push_back(v.poly);
  PolyFq prod = poly_one(B);
  for (const auto& f : wfac) prod = poly_mul(prod, f);
  if (!(prod == rep.wp))
    throw Error(ErrorKind::NotRationalInteger,
                "product of places does not reassemble t^(q^a) - t");

  // exact discriminant valuations at v | w
  for (const auto& f : wfac) {
    int ord = 0;
    PolyFq cur = rep.disc;
    while (true) {
      auto [qq, rr] = poly_divrem(cur, f);
      if (!rr.is_zero()) break;
      cur = qq;
      ++ord;
    }
    rep.wp_factors.emplace_back(f, ord);
  }

  // distinct-degree factorization of f2 (squarefree, so counts suffice)
  {
    PolyFq rem = rep.f2;
    PolyFq x = poly_t(B);
    PolyFq h = poly_divrem(x, rem).second;
    mpz_class qz(std::to_string(q));
    for (int d = 1; rem.degree() > 0; ++d) {
      if (2 * d > rem.degree()) {
        rep.f2_factor_degrees[rem.degree()] += 1;
        break;
      }
      h = poly_pow_mod(h, qz, rem);
      PolyFq g = poly_gcd(rem, poly_sub(h, x));
      if (g.degree() > 0) {
        rep.f2_factor_degrees[d] += g.degree() / d;
        rem = poly_divrem(rem, g).first;
        h = poly_divrem(h, rem).second;
      }
    }
    mpz_class degsum = 0;
    for (auto& [d, cnt] : rep.f2_factor_degrees) degsum += mpz_class(d) * cnt;
    if (degsum != mpz_class(rep.f2.degree()))
      throw Error(ErrorKind::NotRationalInteger,
                  "distinct-degree factor degrees do not sum to deg f2");
  }
  // v | f2: ord_v(disc) = 2 from disc = unit * w^4 * f2^2 with w, f2
  // squarefree and coprime
  rep.f2_valuation =
      (rep.disc_matches_closed_form && rep.f2_squarefree && rep.factors_coprime)
          ? 2
          : -1;

  mpz_class qa_z = zpow(q, params.a);
  rep.height_exponent = qa_z;
  rep.deg_delta_min = 12 * qa_z;
  rep.deg_conductor = 3 * qa_z + 1;
  rep.degree_l = rep.deg_conductor - 4;
  return rep;
}

i64 frobenius_trace(const CurveParams& params, const std::optional<FFElem>& tau,
                    int n, const Caps& caps) {
  if (!tau.has_value()) return 1;  // split multiplicative at infinity
  const FieldCtx* F = tau->ctx();
  require_enumerable(F, caps);
  require_work(F->size, caps);
  if (F->p != params.base->p || F->e != params.base->e || F->k != n)
    throw NotASubfield("tau must lie in F_{q^n}");
  const u64 qa_pow = upow(params.base->q, params.a);
  u64 z = wp_image_idx(F, F->index_of(*tau), qa_pow);
  u64 B = F->mul_idx(z, z);
  u64 A = sixteen_gamma_idx(params, F);
  return -trace_sum(F, A, B);
}

mpz_class dirichlet_coefficient(const CurveParams& params, int n,
                                const Caps& caps) {
  const FieldCtx* F = make_field(params.base->p, params.base->e, n, caps);
  require_enumerable(F, caps);
  require_work(F->size * F->size, caps);
  const u64 qa_pow = upow(params.base->q, params.a);
  const u64 A = sixteen_gamma_idx(params, F);
  const u64 N = F->size;
  mpz_class total = 1;  // A(infinity) = 1
  for (u64 tau = 0; tau < N; ++tau) {
    u64 z = wp_image_idx(F, tau, qa_pow);
    u64 B = F->mul_idx(z, z);
    total += -trace_sum(F, A, B);
  }
  return total;
}

mpz_class dirichlet_coefficient_kloosterman(const CurveParams& params, int n,
                                            const CharSpec& psi,
                                            const Caps& caps) {
  const FieldCtx* B = params.base;
  int b = std::gcd(params.a, n);
  const FieldCtx* F = make_field(B->p, B->e, n, caps);
  const FieldCtx* Fb = make_field(B->p, B->e, b, caps);
  require_enumerable(F, caps);
  require_work(Fb->size * F->size, caps);
  const Embedding* up = get_embedding(Fb, F);
  FFElem gamma_f = get_embedding(B, F)->apply(params.gamma);
  mpz_class qn = zpow(B->q, n);
  CycNum acc = CycNum::zero(B->p);
  for (u64 bi = 1; bi < Fb->size; ++bi) {
    FFElem beta = up->apply(Fb->element(bi));
    FFElem alpha = gamma_f * beta * beta;
    CycNum kl = kloosterman_sum(F, alpha, psi, caps);
    acc += kl * kl - CycNum::from_integer(B->p, qn);
  }
  return to_rational_integer(-acc);
}

CycNum m_sum(const FieldCtx* F, const FFElem& beta, const FFElem& gamma,
             const CharSpec& psi, const Caps& caps) {
  if (gamma.is_zero()) throw ZeroParameter("gamma = 0 in m_sum");
  require_enumerable(F, caps);
  require_work(F->size * F->size, caps);
  const u64 N = F->size;
  u64 A = F->index_of(F->from_int(16) * gamma);
  const FieldCtx* base = make_field(F->p, F->e, 1);
  u64 c = F->index_of(get_embedding(base, F)->apply(psi.c));
  u64 cb = F->mul_idx(c, F->index_of(beta));
  std::vector<i64> hist(std::size_t(F->p), 0);
  for (u64 z = 0; z < N; ++z) {
    u64 z2 = F->mul_idx(z, z);
    i64 inner = trace_sum(F, A, z2);
    hist[std::size_t(F->trp_idx(F->mul_idx(cb, z)))] += inner;
  }
  CycNum acc = CycNum::zero(F->p);
  for (i64 t = 0; t < F->p; ++t) {
    if (!hist[std::size_t(t)]) continue;
    acc += CycNum::root_power(F->p, t) * mpz_class(long(hist[std::size_t(t)]));
  }
  return acc;
}

ArtinSchreierCount artin_schreier_count(const FieldCtx* F, const FFElem& z,
                                        int a, const CharSpec& psi,
                                        const Caps& caps) {
  require_enumerable(F, caps);
  require_work(F->size, caps);
  const u64 N = F->size;
  const u64 qa_pow = upow(F->q, a);
  const u64 zi = F->index_of(z);
  ArtinSchreierCount out{0, 0};
  for (u64 tau = 0; tau < N; ++tau)
    if (wp_image_idx(F, tau, qa_pow) == zi) ++out.preimages;
  int b = std::gcd(a, F->k);
  const FieldCtx* Fb = make_field(F->p, F->e, b, caps);
  const Embedding* up = get_embedding(Fb, F);
  const FieldCtx* base = make_field(F->p, F->e, 1);
  u64 c = F->index_of(get_embedding(base, F)->apply(psi.c));
  CycNum acc = CycNum::zero(F->p);
  for (u64 bi = 0; bi < Fb->size; ++bi) {
    u64 beta = F->index_of(up->apply(Fb->element(bi)));
    std::int64_t t = F->trp_idx(F->mul_idx(c, F->mul_idx(beta, zi)));
    acc += CycNum::root_power(F->p, t);
  }
  out.character_side = to_rational_integer(acc);
  return out;
}

i64 naive_affine_points(const CurveParams& params, const FFElem& tau, int n,
                        const Caps& caps) {
  (void)n;
  const FieldCtx* F = tau.ctx();
  require_enumerable(F, caps);
  require_work(F->size * 4, caps);
  const u64 qa_pow = upow(params.base->q, params.a);
  u64 z = wp_image_idx(F, F->index_of(tau), qa_pow);
  u64 Bc = F->mul_idx(z, z);
  u64 A = sixteen_gamma_idx(params, F);
  i64 count = 0;
  const u64 N = F->size;
  for (u64 x = 0; x < N; ++x) {
    u64 rhs =
        F->mul_idx(F->mul_idx(x, F->add_idx(x, A)), F->add_idx(x, Bc));
    if (rhs == 0) {
      ++count;  // y = 0
      continue;
    }
    if (F->lambda_idx(rhs) == 1) count += 2;
  }
  return count;
}

}  // namespace asl
