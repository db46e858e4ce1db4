#include "asl/polyfq.hpp"

#include <sstream>

namespace asl {

namespace {
using u32 = std::uint32_t;
using u64 = std::uint64_t;

void normalize(PolyFq& f) {
  while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}
}  // namespace

u64 PolyFq::monic_index() const {
  u64 idx = 0;
  for (int j = degree() - 1; j >= 0; --j) idx = idx * base->q + c[std::size_t(j)];
  return idx;
}

PolyFq PolyFq::from_monic_index(const FieldCtx* base, int degree, u64 index) {
  PolyFq f;
  f.base = base;
  f.c.resize(std::size_t(degree) + 1);
  for (int j = 0; j < degree; ++j) {
    f.c[std::size_t(j)] = u32(index % base->q);
    index /= base->q;
  }
  f.c[std::size_t(degree)] = 1;
  return f;
}

std::string PolyFq::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = degree(); j >= 0; --j) {
    u32 cj = c[std::size_t(j)];
    if (!cj) continue;
    if (!first) os << "+";
    first = false;
    if (j == 0 || cj != 1) os << cj;
    if (j > 0) {
      if (cj != 1) os << "*";
      os << var;
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

PolyFq poly_zero(const FieldCtx* base) { return PolyFq{base, {}}; }

PolyFq poly_one(const FieldCtx* base) { return PolyFq{base, {1}}; }

PolyFq poly_t(const FieldCtx* base) { return PolyFq{base, {0, 1}}; }

PolyFq poly_from_indices(const FieldCtx* base, std::vector<u32> c) {
  PolyFq f{base, std::move(c)};
  normalize(f);
  return f;
}

PolyFq poly_add(const PolyFq& a, const PolyFq& b) {
  const FieldCtx* F = a.base;
  PolyFq r{F, {}};
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    u64 x = i < a.c.size() ? a.c[i] : 0;
    u64 y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = u32(F->add_idx(x, y));
  }
  normalize(r);
  return r;
}

PolyFq poly_sub(const PolyFq& a, const PolyFq& b) {
  const FieldCtx* F = a.base;
  PolyFq r{F, {}};
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    u64 x = i < a.c.size() ? a.c[i] : 0;
    u64 y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = u32(F->sub_idx(x, y));
  }
  normalize(r);
  return r;
}

PolyFq poly_mul(const PolyFq& a, const PolyFq& b) {
  if (a.is_zero() || b.is_zero()) return poly_zero(a.base);
  const FieldCtx* F = a.base;
  PolyFq r{F, std::vector<u32>(a.c.size() + b.c.size() - 1, 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      if (!b.c[j]) continue;
      r.c[i + j] = u32(F->add_idx(r.c[i + j], F->mul_idx(a.c[i], b.c[j])));
    }
  }
  normalize(r);
  return r;
}

PolyFq poly_scale(const PolyFq& a, u32 cidx) {
  if (cidx == 0) return poly_zero(a.base);
  PolyFq r = a;
  for (auto& v : r.c) v = u32(a.base->mul_idx(v, cidx));
  return r;
}

std::pair<PolyFq, PolyFq> poly_divrem(const PolyFq& a, const PolyFq& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const FieldCtx* F = a.base;
  PolyFq r = a;
  int db = b.degree();
  if (a.degree() < db) return {poly_zero(F), r};
  PolyFq q{F, std::vector<u32>(std::size_t(a.degree() - db) + 1, 0)};
  u64 lead_inv = F->inv_idx(b.c.back());
  for (int i = a.degree(); i >= db; --i) {
    u32 ri = r.c[std::size_t(i)];
    if (!ri) continue;
    u64 f = F->mul_idx(ri, lead_inv);
    q.c[std::size_t(i - db)] = u32(f);
    for (int j = 0; j <= db; ++j) {
      std::size_t idx = std::size_t(i - db + j);
      r.c[idx] = u32(F->sub_idx(r.c[idx], F->mul_idx(f, b.c[std::size_t(j)])));
    }
  }
  normalize(q);
  normalize(r);
  return {q, r};
}

PolyFq poly_gcd(PolyFq a, PolyFq b) {
  while (!b.is_zero()) {
    auto [q, r] = poly_divrem(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.c.back() != 1)
    a = poly_scale(a, u32(a.base->inv_idx(a.c.back())));
  return a;
}

PolyFq poly_derivative(const PolyFq& a) {
  if (a.degree() < 1) return poly_zero(a.base);
  const FieldCtx* F = a.base;
  PolyFq r{F, std::vector<u32>(a.c.size() - 1, 0)};
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    // multiply coefficient by i mod p (scalar in the prime field)
    std::int64_t m = std::int64_t(i) % F->p;
    u64 acc = 0;
    for (std::int64_t t = 0; t < m; ++t) acc = F->add_idx(acc, a.c[i]);
    r.c[i - 1] = u32(acc);
  }
  normalize(r);
  return r;
}

PolyFq poly_pow_mod(const PolyFq& a, const mpz_class& e, const PolyFq& mod) {
  PolyFq acc = poly_one(a.base);
  bool acc_is_one = true;
  PolyFq base = poly_divrem(a, mod).second;
  mpz_class ee = e;
  while (ee > 0) {
    if (mpz_odd_p(ee.get_mpz_t())) {
      if (acc_is_one) {
        acc = base;
        acc_is_one = false;
      } else {
        acc = poly_divrem(poly_mul(acc, base), mod).second;
      }
    }
    ee >>= 1;
    if (ee > 0) base = poly_divrem(poly_mul(base, base), mod).second;
  }
  return acc;
}

FFElem poly_eval(const PolyFq& a, const FFElem& x) {
  const FieldCtx* ext = x.ctx();
  const Embedding* emb = get_embedding(a.base, ext);
  FFElem acc = ext->zero();
  for (int j = a.degree(); j >= 0; --j) {
    acc = acc * x + emb->apply(a.base->element(a.c[std::size_t(j)]));
  }
  return acc;
}

u64 poly_eval_idx(const std::vector<u64>& emb_coeffs, const FieldCtx* ext,
                  u64 x) {
  u64 acc = 0;
  for (std::size_t j = emb_coeffs.size(); j-- > 0;) {
    acc = ext->add_idx(ext->mul_idx(acc, x), emb_coeffs[j]);
  }
  return acc;
}

bool poly_is_irreducible(const PolyFq& f) {
  int d = f.degree();
  if (d < 1) return false;
  const FieldCtx* F = f.base;
  mpz_class q(std::to_string(F->q));
  PolyFq x = poly_t(F);
  PolyFq xr = poly_divrem(x, f).second;
  // X^(q^d) must reduce to X mod f
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), unsigned(d));
  PolyFq xq = poly_pow_mod(x, qd, f);
  if (!(poly_sub(xq, xr).is_zero())) return false;
  for (int ell = 2; ell <= d; ++ell) {
    if (d % ell) continue;
    bool prime = true;
    for (int t = 2; t * t <= ell; ++t)
      if (ell % t == 0) prime = false;
    if (!prime) continue;
    mpz_class qe;
    mpz_pow_ui(qe.get_mpz_t(), q.get_mpz_t(), unsigned(d / ell));
    PolyFq h = poly_pow_mod(x, qe, f);
    PolyFq g = poly_gcd(f, poly_sub(h, x));
    if (g.degree() > 0) return false;
  }
  return true;
}

}  // namespace asl
