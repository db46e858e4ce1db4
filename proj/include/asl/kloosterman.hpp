#ifndef ASL_KLOOSTERMAN_HPP
#define ASL_KLOOSTERMAN_HPP

#include "asl/caps.hpp"
#include "asl/cyclotomic.hpp"
#include "asl/places.hpp"

namespace asl {

// Nontrivial additive character of F_q: x -> zeta_p^Tr_{F_q/F_p}(c*x),
// lifted to extensions through the relative trace. c = 1 is the standard
// choice; varying c exercises the character-independence of the L-function.
struct CharSpec {
  FFElem c;
};

CharSpec standard_character(const FieldCtx* base);
CharSpec character_from_index(const FieldCtx* base, std::uint64_t idx);

struct KloostermanValue {
  std::uint64_t field_size = 0;  // |F| = q^degree
  int degree = 0;                // d_v
  FFElem alpha;
  CycNum value;       // exact, totally real
  double real_value;  // via the fixed complex embedding
  double theta;       // in (0, pi): real_value = 2 sqrt(|F|) cos(theta)
};

// Kl_F(psi; alpha) = -sum_{x in F^x} psi(x + alpha/x), exact.
CycNum kloosterman_sum(const FieldCtx* F, const FFElem& alpha,
                       const CharSpec& psi, const Caps& caps = default_caps());

// Salie's identity route: -sum_{y in F} lambda(y^2 - 4 alpha) psi(y).
// Must agree with kloosterman_sum on every input.
CycNum kloosterman_salie(const FieldCtx* F, const FFElem& alpha,
                         const CharSpec& psi,
                         const Caps& caps = default_caps());

// Kln_gamma(v) = Kl_{F_v}(psi_{F_v}; gamma * beta_v^2), packaged with its
// angle. gamma lives in the base field F_q.
KloostermanValue kln(const Place& v, const FFElem& gamma, const CharSpec& psi,
                     const Caps& caps = default_caps());

KloostermanValue package_kloosterman(const FieldCtx* F, const FFElem& alpha,
                                     const CycNum& value);

}  // namespace asl

#endif
