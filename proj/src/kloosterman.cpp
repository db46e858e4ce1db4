#include "asl/kloosterman.hpp"

#include <cmath>

namespace asl {

namespace {
using u64 = std::uint64_t;

void require_enumerable(const FieldCtx* F, const Caps& caps) {
  if (!F->has_tables() || F->size > caps.enumeration_cap)
    throw SizeCapExceeded("field too large for exhaustive character sums");
}

u64 embedded_char_index(const FieldCtx* F, const CharSpec& psi) {
  const FieldCtx* base = make_field(F->p, F->e, 1);
  if (psi.c.ctx() != base)
    throw Error(ErrorKind::NotASubfield, "character lives in the wrong field");
  if (psi.c.is_zero()) throw ZeroParameter("trivial additive character");
  return F->index_of(get_embedding(base, F)->apply(psi.c));
}

CycNum hist_to_cycnum(std::int64_t p, const std::vector<std::int64_t>& hist,
                      bool negate) {
  CycNum acc = CycNum::zero(p);
  for (std::int64_t t = 0; t < p; ++t) {
    if (!hist[std::size_t(t)]) continue;
    acc += CycNum::root_power(p, t) * mpz_class(long(hist[std::size_t(t)]));
  }
  return negate ? -acc : acc;
}

}  // namespace

CharSpec standard_character(const FieldCtx* base) {
  return CharSpec{base->one()};
}

CharSpec character_from_index(const FieldCtx* base, u64 idx) {
  if (idx == 0) throw ZeroParameter("additive character parameter must be nonzero");
  return CharSpec{base->element(idx)};
}

CycNum kloosterman_sum(const FieldCtx* F, const FFElem& alpha,
                       const CharSpec& psi, const Caps& caps) {
  if (alpha.is_zero()) throw ZeroParameter("Kloosterman parameter alpha = 0");
  require_enumerable(F, caps);
  const u64 N = F->size;
  const u64 c = embedded_char_index(F, psi);
  const u64 ca = F->mul_idx(c, F->index_of(alpha));
  std::vector<std::int64_t> hist(std::size_t(F->p), 0);
  for (u64 x = 1; x < N; ++x) {
    u64 cx = F->mul_idx(c, x);
    u64 cax = F->mul_idx(ca, F->inv_idx(x));
    std::int64_t t = F->trp_idx(cx) + F->trp_idx(cax);
    if (t >= F->p) t -= F->p;
    ++hist[std::size_t(t)];
  }
  return hist_to_cycnum(F->p, hist, /*negate=*/true);
}

CycNum kloosterman_salie(const FieldCtx* F, const FFElem& alpha,
                         const CharSpec& psi, const Caps& caps) {
  if (alpha.is_zero()) throw ZeroParameter("Kloosterman parameter alpha = 0");
  require_enumerable(F, caps);
  const u64 N = F->size;
  const u64 c = embedded_char_index(F, psi);
  u64 four_alpha = F->index_of(alpha);
  for (int i = 0; i < 2; ++i) four_alpha = F->add_idx(four_alpha, four_alpha);
  std::vector<std::int64_t> hist(std::size_t(F->p), 0);
  for (u64 y = 0; y < N; ++y) {
    u64 u = F->sub_idx(F->mul_idx(y, y), four_alpha);
    int s = F->lambda_idx(u);
    if (!s) continue;
    hist[std::size_t(F->trp_idx(F->mul_idx(c, y)))] += s;
  }
  return hist_to_cycnum(F->p, hist, /*negate=*/true);
}

KloostermanValue package_kloosterman(const FieldCtx* F, const FFElem& alpha,
                                     const CycNum& value) {
  KloostermanValue kv;
  kv.field_size = F->size;
  kv.degree = F->k;
  kv.alpha = alpha;
  kv.value = value;
  std::complex<double> z = embed_complex(value);
  kv.real_value = z.real();
  double half = kv.real_value / (2.0 * std::sqrt(double(F->size)));
  if (half > 1.0) half = 1.0;
  if (half < -1.0) half = -1.0;
  kv.theta = std::acos(half);
  return kv;
}

KloostermanValue kln(const Place& v, const FFElem& gamma, const CharSpec& psi,
                     const Caps& caps) {
  if (gamma.is_zero()) throw ZeroParameter("gamma = 0");
  const FieldCtx* Fv = v.beta.ctx();
  const FieldCtx* base = make_field(Fv->p, Fv->e, 1);
  FFElem g = get_embedding(base, Fv)->apply(gamma);
  FFElem alpha = g * v.beta * v.beta;
  return package_kloosterman(Fv, alpha,
                             kloosterman_sum(Fv, alpha, psi, caps));
}

}  // namespace asl
