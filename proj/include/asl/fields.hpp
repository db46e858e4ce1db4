#ifndef ASL_FIELDS_HPP
#define ASL_FIELDS_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "asl/caps.hpp"
#include "asl/errors.hpp"

namespace asl {

class FieldCtx;
class FFElem;

// F_{q^k} with q = p^e, realized as F_p[X]/(modulus) with the
// lexicographically smallest monic irreducible modulus of degree e*k.
// Construction is memoized: the same (p,e,k) always yields the same context.
const FieldCtx* make_field(std::int64_t p, int e, int k,
                           const Caps& caps = default_caps());

class FFElem {
 public:
  FFElem() : ctx_(nullptr) {}
  FFElem(const FieldCtx* ctx, std::vector<std::int64_t> coords)
      : ctx_(ctx), c_(std::move(coords)) {}

  const FieldCtx* ctx() const { return ctx_; }
  const std::vector<std::int64_t>& coords() const { return c_; }

  bool is_zero() const;
  bool operator==(const FFElem& o) const { return ctx_ == o.ctx_ && c_ == o.c_; }
  bool operator!=(const FFElem& o) const { return !(*this == o); }

  FFElem operator+(const FFElem& o) const;
  FFElem operator-(const FFElem& o) const;
  FFElem operator*(const FFElem& o) const;
  FFElem operator-() const;
  FFElem inv() const;
  FFElem pow(std::uint64_t e) const;
  FFElem square() const { return *this * *this; }
  // x -> x^q, the generator of Gal(F_{q^k}/F_q)
  FFElem frobenius_q() const;

 private:
  const FieldCtx* ctx_;
  std::vector<std::int64_t> c_;
  friend class FieldCtx;
};

class FieldCtx {
 public:
  std::int64_t p;  // odd prime characteristic
  int e;           // q = p^e
  int k;           // extension degree over F_q
  int n;           // = e*k, degree over F_p
  std::uint64_t size;                 // p^n
  std::uint64_t q;                    // p^e
  std::vector<std::int64_t> modulus;  // length n+1, monic irreducible over F_p

  // --- element construction and enumeration (index = sum c_j p^j) ---
  FFElem zero() const;
  FFElem one() const;
  FFElem from_int(std::int64_t v) const;  // v mod p, as constant
  FFElem gen() const;                     // the class X of the modulus
  FFElem element(std::uint64_t index) const;
  std::uint64_t index_of(const FFElem& x) const;

  // --- tables (present iff size <= table cap; required by index helpers) ---
  bool has_tables() const { return !exp_.empty(); }
  std::uint64_t generator_index() const { return exp_.empty() ? 0 : exp_[1]; }

  // multiplicative helpers on element indices; 0 is the zero element
  std::uint64_t mul_idx(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[modm(std::uint64_t(log_[a]) + log_[b])];
  }
  std::uint64_t inv_idx(std::uint64_t a) const {
    std::uint64_t l = log_[a];
    return exp_[l == 0 ? 0 : size - 1 - l];
  }
  std::uint64_t pow_idx(std::uint64_t a, std::uint64_t m) const {
    if (a == 0) return m == 0 ? exp_[0] : 0;
    return exp_[mulmod(log_[a], m % (size - 1))];
  }
  // quadratic character: +1 on nonzero squares, -1 on nonsquares, 0 at 0
  int lambda_idx(std::uint64_t a) const {
    if (a == 0) return 0;
    return (log_[a] & 1) ? -1 : 1;
  }
  // absolute trace to F_p, as a residue in [0, p)
  std::int64_t trp_idx(std::uint64_t a) const { return trp_[a]; }

  // additive helpers on indices (digit arithmetic, no table needed)
  std::uint64_t add_idx(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub_idx(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg_idx(std::uint64_t a) const;

  // --- internal arithmetic on coordinate vectors ---
  std::vector<std::int64_t> mul_coords(const std::vector<std::int64_t>& a,
                                       const std::vector<std::int64_t>& b) const;

 private:
  friend const FieldCtx* make_field(std::int64_t, int, int, const Caps&);
  friend class FFElem;
  FieldCtx() = default;
  void build_tables();
  std::uint64_t modm(std::uint64_t v) const {
    return v >= size - 1 ? v - (size - 1) : v;
  }
  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const {
    return std::uint64_t((unsigned __int128)(a)*b % (size - 1));
  }

  // X^(n+i) mod modulus for i in [0, n-1), used by mul_coords
  std::vector<std::vector<std::int64_t>> redrows_;
  std::vector<std::uint32_t> exp_;  // exp_[i] = index of g^i, size N-1
  std::vector<std::uint32_t> log_;  // log_[idx]; log_[0] unused
  std::vector<std::int32_t> trp_;  // absolute trace table
};

// Tr_{F_{q^k}/F_q}: sum of the k Frobenius conjugates; result in the
// (p, e, 1) context.
FFElem trace_to_base(const FFElem& x);

// Tr_{F/F_p} as a residue in [0, p): the exponent fed to the additive
// character.
std::int64_t absolute_trace(const FFElem& x);

// Fixed embedding F_{q^d} -> F_{q^a} for d | a. Embeddings along divisor
// towers commute: composite degrees are built by composing through the
// intermediate field given by the smallest prime factor of a/d, and only
// prime-degree steps pick a root (the smallest in enumeration order).
FFElem subfield_embed(const FFElem& x, const FieldCtx* target);

class Embedding {
 public:
  const FieldCtx* from;
  const FieldCtx* to;
  FFElem apply(const FFElem& x) const;
  // partial inverse: defined on the image; interior error otherwise
  FFElem section(const FFElem& y) const;
  // per-element index map, present when `from` has tables
  const std::vector<std::uint32_t>& index_map() const { return idx_map_; }

  // registry internals
  void build(const FieldCtx* f, const FieldCtx* t, FFElem root_image);

 private:
  std::vector<FFElem> xpow_;  // images of X^j, j < from->n
  // row-reduced solve data for section()
  std::vector<std::vector<std::int64_t>> rref_;
  std::vector<int> pivot_col_;
  std::vector<std::uint32_t> idx_map_;
};

const Embedding* get_embedding(const FieldCtx* from, const FieldCtx* to);

}  // namespace asl

#endif
