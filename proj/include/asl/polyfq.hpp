#ifndef ASL_POLYFQ_HPP
#define ASL_POLYFQ_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "asl/fields.hpp"

namespace asl {

// Dense polynomial over a (small, tabled) base field F_q. Coefficients are
// element indices in the fixed enumeration of the base field.
struct PolyFq {
  const FieldCtx* base = nullptr;
  std::vector<std::uint32_t> c;  // little-endian, normalized (no high zeros)

  int degree() const { return int(c.size()) - 1; }  // -1 for the zero poly
  bool is_zero() const { return c.empty(); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }
  bool operator==(const PolyFq& o) const { return base == o.base && c == o.c; }

  // encoding of a monic polynomial: sum of coeff indices by powers of q
  std::uint64_t monic_index() const;
  static PolyFq from_monic_index(const FieldCtx* base, int degree,
                                 std::uint64_t index);

  std::string str(const std::string& var = "t") const;
};

PolyFq poly_zero(const FieldCtx* base);
PolyFq poly_one(const FieldCtx* base);
PolyFq poly_t(const FieldCtx* base);
PolyFq poly_from_indices(const FieldCtx* base, std::vector<std::uint32_t> c);

PolyFq poly_add(const PolyFq& a, const PolyFq& b);
PolyFq poly_sub(const PolyFq& a, const PolyFq& b);
PolyFq poly_mul(const PolyFq& a, const PolyFq& b);
PolyFq poly_scale(const PolyFq& a, std::uint32_t cidx);
// quotient and remainder by a nonzero divisor
std::pair<PolyFq, PolyFq> poly_divrem(const PolyFq& a, const PolyFq& b);
PolyFq poly_gcd(PolyFq a, PolyFq b);  // monic gcd
PolyFq poly_derivative(const PolyFq& a);
PolyFq poly_pow_mod(const PolyFq& a, const mpz_class& e, const PolyFq& mod);

// evaluation at a point of an extension field (coefficients embedded)
FFElem poly_eval(const PolyFq& a, const FFElem& x);
// same, on element indices of the extension context
std::uint64_t poly_eval_idx(const std::vector<std::uint64_t>& emb_coeffs,
                            const FieldCtx* ext, std::uint64_t x);

// single-polynomial irreducibility test (gcd with X^(q^i) - X); works at any
// degree, independent of the sieve used for enumeration
bool poly_is_irreducible(const PolyFq& f);

}  // namespace asl

#endif
