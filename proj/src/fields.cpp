#include "asl/fields.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace asl {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// deterministic Miller-Rabin, valid for all 64-bit inputs
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                 29ull, 31ull, 37ull}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> fs;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

// ---- dense polynomial arithmetic over F_p (modulus construction only) ----

using Poly = std::vector<i64>;  // little-endian, not necessarily normalized

int pdeg(const Poly& f) {
  int d = int(f.size()) - 1;
  while (d >= 0 && f[d] == 0) --d;
  return d;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, i64 p) {
  int n = pdeg(f);
  std::vector<i64> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = i64((u128(r[i + j]) + u128(a[i]) * u128(b[j])) % p);
    }
  }
  for (int i = int(r.size()) - 1; i >= n; --i) {
    i64 c = r[i];
    if (!c) continue;
    r[i] = 0;
    for (int j = 0; j < n; ++j) {
      i64 v = i64((u128(c) * u128(f[j])) % p);
      r[i - n + j] = ((r[i - n + j] - v) % p + p) % p;
    }
  }
  r.resize(n);
  return r;
}

Poly ppowp_iter(Poly x, u64 pexp, int times, const Poly& f, i64 p) {
  // x^(p^times) mod f via repeated p-th powers
  int n = pdeg(f);
  for (int t = 0; t < times; ++t) {
    Poly base = x, acc(n, 0);
    acc[0] = 1;
    u64 ee = pexp;
    while (ee) {
      if (ee & 1) acc = pmulmod(acc, base, f, p);
      base = pmulmod(base, base, f, p);
      ee >>= 1;
    }
    x = acc;
  }
  return x;
}

Poly pgcd(Poly a, Poly b, i64 p) {
  auto inv = [&](i64 v) { return i64(powmod_u64(u64((v % p + p) % p), u64(p - 2), u64(p))); };
  while (true) {
    int db = pdeg(b);
    if (db < 0) return a;
    int da = pdeg(a);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    i64 c = i64((u128(a[da]) * u128(inv(b[db]))) % p);
    for (int j = 0; j <= db; ++j) {
      i64 v = i64((u128(c) * u128(b[j])) % p);
      a[da - db + j] = ((a[da - db + j] - v) % p + p) % p;
    }
  }
}

bool is_irreducible_fp(const Poly& f, i64 p) {
  int n = pdeg(f);
  if (n == 1) return true;
  Poly x(n, 0);
  x[1] = 1;
  // X^(p^n) == X mod f
  Poly xn = ppowp_iter(x, u64(p), n, f, p);
  if (pdeg(xn) != pdeg(x) || xn != x) return false;
  for (u64 ell : prime_factors(u64(n))) {
    Poly h = ppowp_iter(x, u64(p), int(n / ell), f, p);
    Poly diff(n, 0);
    for (int j = 0; j < n; ++j) diff[j] = ((h[j] - x[j]) % p + p) % p;
    Poly g = pgcd(f, diff, p);
    if (pdeg(g) > 0) return false;
  }
  return true;
}

Poly smallest_irreducible(i64 p, int n) {
  // enumerate lower coefficients as base-p counter, constant digit first
  std::vector<i64> c(n, 0);
  while (true) {
    Poly f(c.begin(), c.end());
    f.push_back(1);
    if (is_irreducible_fp(f, p)) return f;
    int j = 0;
    while (j < n && ++c[j] == p) c[j++] = 0;
    if (j == n) throw Error(ErrorKind::NotPrime, "no irreducible found (bad p?)");
  }
}

constexpr u64 kTableCap = u64(1) << 20;

}  // namespace

// ---------------------------------------------------------------------------
// FFElem

bool FFElem::is_zero() const {
  for (i64 v : c_)
    if (v) return false;
  return true;
}

FFElem FFElem::operator+(const FFElem& o) const {
  FFElem r(*this);
  const i64 p = ctx_->p;
  for (int j = 0; j < ctx_->n; ++j) {
    r.c_[j] += o.c_[j];
    if (r.c_[j] >= p) r.c_[j] -= p;
  }
  return r;
}

FFElem FFElem::operator-(const FFElem& o) const {
  FFElem r(*this);
  const i64 p = ctx_->p;
  for (int j = 0; j < ctx_->n; ++j) {
    r.c_[j] -= o.c_[j];
    if (r.c_[j] < 0) r.c_[j] += p;
  }
  return r;
}

FFElem FFElem::operator-() const {
  FFElem r(*this);
  const i64 p = ctx_->p;
  for (int j = 0; j < ctx_->n; ++j)
    if (r.c_[j]) r.c_[j] = p - r.c_[j];
  return r;
}

FFElem FFElem::operator*(const FFElem& o) const {
  return FFElem(ctx_, ctx_->mul_coords(c_, o.c_));
}

FFElem FFElem::pow(u64 e) const {
  FFElem acc = ctx_->one();
  FFElem base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FFElem FFElem::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  if (ctx_->has_tables())
    return ctx_->element(ctx_->inv_idx(ctx_->index_of(*this)));
  // x^(p^n - 2)
  u64 e = ctx_->size - 2;
  return pow(e);
}

FFElem FFElem::frobenius_q() const {
  if (ctx_->has_tables()) {
    u64 idx = ctx_->index_of(*this);
    return ctx_->element(ctx_->pow_idx(idx, ctx_->q));
  }
  FFElem r = *this;
  for (int i = 0; i < ctx_->e; ++i) r = r.pow(u64(ctx_->p));
  return r;
}

// ---------------------------------------------------------------------------
// FieldCtx

FFElem FieldCtx::zero() const { return FFElem(this, std::vector<i64>(n, 0)); }

FFElem FieldCtx::one() const {
  std::vector<i64> c(n, 0);
  c[0] = 1;
  return FFElem(this, c);
}

FFElem FieldCtx::from_int(i64 v) const {
  std::vector<i64> c(n, 0);
  c[0] = ((v % p) + p) % p;
  return FFElem(this, c);
}

FFElem FieldCtx::gen() const {
  std::vector<i64> c(n, 0);
  if (n == 1) {
    // X is congruent to -modulus[0]
    c[0] = ((-modulus[0]) % p + p) % p;
  } else {
    c[1] = 1;
  }
  return FFElem(this, c);
}

FFElem FieldCtx::element(u64 index) const {
  std::vector<i64> c(n);
  for (int j = 0; j < n; ++j) {
    c[j] = i64(index % u64(p));
    index /= u64(p);
  }
  return FFElem(this, c);
}

u64 FieldCtx::index_of(const FFElem& x) const {
  u64 idx = 0;
  for (int j = n - 1; j >= 0; --j) idx = idx * u64(p) + u64(x.coords()[j]);
  return idx;
}

u64 FieldCtx::add_idx(u64 a, u64 b) const {
  u64 r = 0, mul = 1;
  const u64 up = u64(p);
  for (int j = 0; j < n; ++j) {
    u64 s = a % up + b % up;
    if (s >= up) s -= up;
    r += s * mul;
    mul *= up;
    a /= up;
    b /= up;
  }
  return r;
}

u64 FieldCtx::sub_idx(u64 a, u64 b) const {
  u64 r = 0, mul = 1;
  const u64 up = u64(p);
  for (int j = 0; j < n; ++j) {
    u64 da = a % up, db = b % up;
    u64 s = da >= db ? da - db : da + up - db;
    r += s * mul;
    mul *= up;
    a /= up;
    b /= up;
  }
  return r;
}

u64 FieldCtx::neg_idx(u64 a) const { return sub_idx(0, a); }

std::vector<i64> FieldCtx::mul_coords(const std::vector<i64>& a,
                                      const std::vector<i64>& b) const {
  std::vector<u128> conv(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < n; ++j) conv[i + j] += u128(a[i]) * u128(b[j]);
  }
  std::vector<i64> r(n);
  for (int i = 0; i < n; ++i) r[i] = i64(conv[i] % u64(p));
  for (int i = n; i < 2 * n - 1; ++i) {
    i64 c = i64(conv[i] % u64(p));
    if (!c) continue;
    const auto& row = redrows_[i - n];
    for (int j = 0; j < n; ++j) {
      r[j] = i64((u128(r[j]) + u128(c) * u128(row[j])) % u64(p));
    }
  }
  return r;
}

void FieldCtx::build_tables() {
  const u64 N = size;
  // generator: smallest-index element of full multiplicative order
  auto factors = prime_factors(N - 1);
  FFElem g = zero();
  for (u64 idx = 1; idx < N; ++idx) {
    FFElem cand = element(idx);
    bool ok = true;
    for (u64 ell : factors) {
      if (cand.pow((N - 1) / ell) == one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = cand;
      break;
    }
  }
  exp_.resize(N - 1);
  log_.assign(N, 0);
  FFElem cur = one();
  for (u64 i = 0; i < N - 1; ++i) {
    u64 idx = index_of(cur);
    exp_[i] = std::uint32_t(idx);
    log_[idx] = std::uint32_t(i);
    cur = cur * g;
  }
  // absolute trace: F_p-linear, so tabulate on the power basis first
  std::vector<i64> trbasis(n);
  for (int j = 0; j < n; ++j) {
    std::vector<i64> c(n, 0);
    c[j] = 1;
    FFElem x(this, c), s = zero();
    for (int i = 0; i < n; ++i) {
      s = s + x;
      x = x.pow(u64(p));
    }
    trbasis[j] = s.coords()[0];
  }
  trp_.resize(N);
  for (u64 idx = 0; idx < N; ++idx) {
    u64 t = idx;
    i64 acc = 0;
    for (int j = 0; j < n; ++j) {
      acc += i64(t % u64(p)) * trbasis[j] % p;
      t /= u64(p);
    }
    trp_[idx] = std::int32_t(acc % p);
  }
}

// ---------------------------------------------------------------------------
// make_field registry

const FieldCtx* make_field(i64 p, int e, int k, const Caps& caps) {
  if (p == 2) throw EvenCharacteristic("characteristic 2 is not supported");
  if (p < 2 || !is_prime_u64(u64(p))) throw NotPrime("p must be an odd prime");
  if (e < 1 || k < 1) throw Error(ErrorKind::NotPrime, "e and k must be >= 1");
  int n = e * k;
  long double sz = 1.0L;
  for (int i = 0; i < n; ++i) sz *= (long double)p;
  if (sz > (long double)caps.field_size_cap)
    throw SizeCapExceeded("field size p^(e*k) exceeds field_size_cap");

  static std::mutex mu;
  static std::map<std::tuple<i64, int, int>, std::unique_ptr<FieldCtx>> reg;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, e, k);
  auto it = reg.find(key);
  if (it != reg.end()) return it->second.get();

  auto ctx = std::unique_ptr<FieldCtx>(new FieldCtx());
  ctx->p = p;
  ctx->e = e;
  ctx->k = k;
  ctx->n = n;
  u64 N = 1;
  for (int i = 0; i < n; ++i) N *= u64(p);
  ctx->size = N;
  u64 q = 1;
  for (int i = 0; i < e; ++i) q *= u64(p);
  ctx->q = q;
  // share the modulus with any context of the same (p, n): deterministic
  ctx->modulus = smallest_irreducible(p, n);
  ctx->redrows_.resize(std::max(0, n - 1));
  if (n > 1) {
    // X^n = -lower(modulus); then X^(n+i) = X * X^(n+i-1) reduced
    std::vector<i64> row(n);
    for (int j = 0; j < n; ++j) row[j] = ((-ctx->modulus[j]) % p + p) % p;
    ctx->redrows_[0] = row;
    for (int i = 1; i < n - 1; ++i) {
      std::vector<i64> nxt(n, 0);
      const auto& prev = ctx->redrows_[i - 1];
      // multiply prev by X, reduce the X^n term through redrows_[0]
      i64 top = prev[n - 1];
      for (int j = 1; j < n; ++j) nxt[j] = prev[j - 1];
      if (top) {
        for (int j = 0; j < n; ++j)
          nxt[j] = i64((u128(nxt[j]) + u128(top) * u128(ctx->redrows_[0][j])) %
                       u64(p));
      }
      ctx->redrows_[i] = nxt;
    }
  }
  if (N <= kTableCap) ctx->build_tables();
  const FieldCtx* out = ctx.get();
  reg.emplace(key, std::move(ctx));
  return out;
}

// ---------------------------------------------------------------------------
// traces

i64 absolute_trace(const FFElem& x) {
  const FieldCtx* ctx = x.ctx();
  if (ctx->has_tables()) return ctx->trp_idx(ctx->index_of(x));
  FFElem s = ctx->zero();
  FFElem cur = x;
  for (int i = 0; i < ctx->n; ++i) {
    s = s + cur;
    cur = cur.pow(u64(ctx->p));
  }
  return s.coords()[0];
}

FFElem trace_to_base(const FFElem& x) {
  const FieldCtx* ctx = x.ctx();
  FFElem s = ctx->zero();
  FFElem cur = x;
  for (int i = 0; i < ctx->k; ++i) {
    s = s + cur;
    cur = cur.frobenius_q();
  }
  const FieldCtx* base = make_field(ctx->p, ctx->e, 1);
  if (ctx->k == 1) return FFElem(base, s.coords());
  return get_embedding(base, ctx)->section(s);
}

// ---------------------------------------------------------------------------
// embeddings

void Embedding::build(const FieldCtx* f, const FieldCtx* t, FFElem root_image) {
  from = f;
  to = t;
  xpow_.resize(f->n);
  xpow_[0] = t->one();
  for (int j = 1; j < f->n; ++j) xpow_[j] = xpow_[j - 1] * root_image;

  // row-reduce [E | I] where E columns are coords of xpow_ (for section())
  int rows = t->n, cols = f->n;
  const i64 p = t->p;
  std::vector<std::vector<i64>> m(rows, std::vector<i64>(cols + rows, 0));
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m[i][j] = xpow_[j].coords()[i];
  for (int i = 0; i < rows; ++i) m[i][cols + i] = 1;
  pivot_col_.assign(cols, -1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    i64 in = i64(powmod_u64(u64(m[r][c]), u64(p - 2), u64(p)));
    for (auto& v : m[r]) v = i64((u128(v) * u128(in)) % u64(p));
    for (int i = 0; i < rows; ++i) {
      if (i == r || !m[i][c]) continue;
      i64 c2 = m[i][c];
      for (int j = 0; j < cols + rows; ++j) {
        i64 v = i64((u128(c2) * u128(m[r][j])) % u64(p));
        m[i][j] = ((m[i][j] - v) % p + p) % p;
      }
    }
    pivot_col_[c] = r;
    ++r;
  }
  rref_ = std::move(m);

  if (f->has_tables() && f->size <= (u64(1) << 16)) {
    std::vector<std::uint32_t> map(f->size);
    for (u64 i = 0; i < f->size; ++i)
      map[i] = std::uint32_t(t->index_of(apply(f->element(i))));
    idx_map_ = std::move(map);
  }
}

FFElem Embedding::apply(const FFElem& x) const {
  if (x.ctx() != from) throw NotASubfield("element not in source field");
  if (!idx_map_.empty())
    return to->element(idx_map_[from->index_of(x)]);
  FFElem acc = to->zero();
  for (int j = 0; j < from->n; ++j) {
    i64 c = x.coords()[j];
    if (!c) continue;
    std::vector<i64> scaled = xpow_[j].coords();
    for (auto& v : scaled) v = i64((u128(v) * u128(c)) % u64(to->p));
    acc = acc + FFElem(to, scaled);
  }
  return acc;
}

FFElem Embedding::section(const FFElem& y) const {
  const i64 p = to->p;
  int rows = to->n, cols = from->n;
  // w = T*y where T is the recorded row transform
  std::vector<i64> w(rows, 0);
  for (int i = 0; i < rows; ++i) {
    u128 acc = 0;
    for (int j = 0; j < rows; ++j)
      acc += u128(rref_[i][cols + j]) * u128(y.coords()[j]);
    w[i] = i64(acc % u64(p));
  }
  std::vector<i64> sol(cols, 0);
  for (int c = 0; c < cols; ++c)
    if (pivot_col_[c] >= 0) sol[c] = w[pivot_col_[c]];
  // verify consistency (y must lie in the image)
  FFElem check = to->zero();
  for (int j = 0; j < cols; ++j) {
    if (!sol[j]) continue;
    std::vector<i64> scaled = xpow_[j].coords();
    for (auto& v : scaled) v = i64((u128(v) * u128(sol[j])) % u64(p));
    check = check + FFElem(to, scaled);
  }
  if (check != y)
    throw Error(ErrorKind::NotASubfield, "element not in embedded subfield");
  return FFElem(from, sol);
}

namespace {

using EmbeddingRegistry = std::map<std::pair<const FieldCtx*, const FieldCtx*>,
                                   std::unique_ptr<Embedding>>;

const Embedding* get_embedding_locked(const FieldCtx* from, const FieldCtx* to,
                                      EmbeddingRegistry& reg);

std::unique_ptr<Embedding> build_embedding(const FieldCtx* from,
                                           const FieldCtx* to,
                                           EmbeddingRegistry& reg) {
  auto emb = std::make_unique<Embedding>();
  int d = from->k, a = to->k;
  if (d == a) {
    emb->build(from, to, to->gen());
    return emb;
  }
  int ratio = a / d;
  // smallest prime factor of the degree ratio
  int ell = 2;
  while (ratio % ell) ++ell;
  if (ratio == ell) {
    // prime step: smallest root of from->modulus in `to`, enumeration order
    if (!to->has_tables())
      throw SizeCapExceeded("embedding target too large to enumerate");
    FFElem root = to->zero();
    bool found = false;
    for (u64 idx = 0; idx < to->size; ++idx) {
      FFElem cand = to->element(idx);
      // Horner: modulus has F_p coefficients
      FFElem acc = to->zero();
      for (int j = from->n; j >= 0; --j) {
        acc = acc * cand + to->from_int(from->modulus[j]);
      }
      if (acc.is_zero()) {
        root = cand;
        found = true;
        break;
      }
    }
    if (!found)
      throw Error(ErrorKind::NotASubfield, "no root of subfield modulus found");
    emb->build(from, to, root);
    return emb;
  }
  // composite step: go through F_{q^(a/ell)}
  const FieldCtx* mid = make_field(to->p, to->e, a / ell);
  const Embedding* lo = get_embedding_locked(from, mid, reg);
  const Embedding* hi = get_embedding_locked(mid, to, reg);
  FFElem root_image = hi->apply(lo->apply(from->gen()));
  emb->build(from, to, root_image);
  return emb;
}

EmbeddingRegistry& embedding_registry() {
  static EmbeddingRegistry reg;
  return reg;
}

const Embedding* get_embedding_locked(const FieldCtx* from, const FieldCtx* to,
                                      EmbeddingRegistry& reg) {
  auto key = std::make_pair(from, to);
  auto it = reg.find(key);
  if (it != reg.end()) return it->second.get();
  auto emb = build_embedding(from, to, reg);
  const Embedding* out = emb.get();
  reg.emplace(key, std::move(emb));
  return out;
}

}  // namespace

const Embedding* get_embedding(const FieldCtx* from, const FieldCtx* to) {
  if (from->p != to->p || from->e != to->e)
    throw NotASubfield("fields have different base");
  if (to->k % from->k != 0)
    throw NotASubfield("source degree does not divide target degree");
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  return get_embedding_locked(from, to, embedding_registry());
}

FFElem subfield_embed(const FFElem& x, const FieldCtx* target) {
  return get_embedding(x.ctx(), target)->apply(x);
}

}  // namespace asl
