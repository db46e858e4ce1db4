#include "asl/places.hpp"

#include <algorithm>
#include <mutex>

namespace asl {

namespace {
using u32 = std::uint32_t;
using u64 = std::uint64_t;

int moebius(int n) {
  int mu = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

u64 upow(u64 b, int e) {
  u64 r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// lists INCLUDING the polynomial t, for internal sieve use
const std::vector<PolyFq>& irr_with_t(const FieldCtx* base, int d,
                                      const Caps& caps) {
  static std::mutex mu;
  static std::map<std::pair<const FieldCtx*, int>, std::vector<PolyFq>> cache;
  const u64 q = base->q;
  if (upow(q, d) > caps.enumeration_cap)
    throw SizeCapExceeded("q^d exceeds enumeration cap in irreducibles");
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(base, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  for (int dd = 1; dd <= d; ++dd) {
    auto k2 = std::make_pair(base, dd);
    if (cache.count(k2)) continue;
    u64 total = upow(q, dd);
    if (total > caps.enumeration_cap)
      throw SizeCapExceeded("q^d exceeds enumeration cap in irreducibles");
    std::vector<PolyFq> out;
    if (dd == 1) {
      for (u64 i = 0; i < q; ++i)
        out.push_back(PolyFq::from_monic_index(base, 1, i));
    } else {
      std::vector<bool> composite(total, false);
      for (int i = 1; 2 * i <= dd; ++i) {
        const auto& fs = cache.at(std::make_pair(base, i));
        u64 glim = upow(q, dd - i);
        for (const PolyFq& f : fs) {
          for (u64 gi = 0; gi < glim; ++gi) {
            PolyFq g = PolyFq::from_monic_index(base, dd - i, gi);
            composite[poly_mul(f, g).monic_index()] = true;
          }
        }
      }
      for (u64 i = 0; i < total; ++i)
        if (!composite[i]) out.push_back(PolyFq::from_monic_index(base, dd, i));
    }
    cache.emplace(k2, std::move(out));
  }
  return cache.at(key);
}

}  // namespace

mpz_class count_places(u64 q, int n) {
  mpz_class sum = 0;
  mpz_class qz(std::to_string(q));
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = moebius(n / d);
    if (!mu) continue;
    mpz_class qd;
    mpz_pow_ui(qd.get_mpz_t(), qz.get_mpz_t(), unsigned(d));
    sum += mu * qd;
  }
  sum /= n;
  if (n == 1) sum -= 1;  // exclude the place t
  return sum;
}

std::vector<PolyFq> irreducibles(const FieldCtx* base, int d,
                                 const Caps& caps) {
  const auto& all = irr_with_t(base, d, caps);
  std::vector<PolyFq> out;
  out.reserve(all.size());
  for (const PolyFq& f : all) {
    if (d == 1 && f.c[0] == 0) continue;  // skip t itself
    out.push_back(f);
  }
  return out;
}

PlaceSet place_set(const FieldCtx* base, int a, const Caps& caps) {
  if (upow(base->q, a) > caps.enumeration_cap)
    throw SizeCapExceeded("q^a exceeds enumeration cap in place_set");
  PlaceSet ps;
  ps.base = base;
  ps.a = a;
  const FieldCtx* top = make_field(base->p, base->e, a, caps);
  u64 degsum = 0;
  for (int d = 1; d <= a; ++d) {
    if (a % d) continue;
    auto polys = irreducibles(base, d, caps);
    ps.counts[d] = count_places(base->q, d);
    if (mpz_class(long(polys.size())) != ps.counts[d])
      throw Error(ErrorKind::NotRationalInteger,
                  "irreducible count disagrees with the place-count formula");
    const FieldCtx* Fd = make_field(base->p, base->e, d, caps);
    const Embedding* coef = get_embedding(base, Fd);
    const Embedding* up = get_embedding(Fd, top);
    for (const PolyFq& f : polys) {
      // embed coefficients once, then scan F_{q^d} in enumeration order
      std::vector<u64> ec(f.c.size());
      for (std::size_t j = 0; j < f.c.size(); ++j)
        ec[j] = Fd->index_of(coef->apply(base->element(f.c[j])));
      u64 root = 0;
      bool found = false;
      for (u64 x = 0; x < Fd->size; ++x) {
        if (poly_eval_idx(ec, Fd, x) == 0) {
          root = x;
          found = true;
          break;
        }
      }
      if (!found)
        throw Error(ErrorKind::NotRationalInteger,
                    "irreducible polynomial has no root in its residue field");
      Place pl;
      pl.poly = f;
      pl.degree = d;
      pl.beta = Fd->element(root);
      pl.beta_top = up->apply(pl.beta);
      degsum += u64(d);
      ps.places.push_back(std::move(pl));
    }
  }
  if (degsum != upow(base->q, a) - 1)
    throw Error(ErrorKind::NotRationalInteger,
                "orbit partition identity violated in place_set");
  return ps;
}

}  // namespace asl
