#ifndef ASL_PLACES_HPP
#define ASL_PLACES_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

#include "asl/caps.hpp"
#include "asl/polyfq.hpp"

namespace asl {

// A closed point of G_m over F_q: a monic irreducible polynomial != t,
// together with its canonical root (smallest in the element enumeration of
// F_{q^d}) and the image of that root in the ambient field F_{q^a}.
struct Place {
  PolyFq poly;
  int degree = 0;
  FFElem beta;      // canonical root in F_{q^degree}
  FFElem beta_top;  // embedded image in F_{q^a}
};

struct PlaceSet {
  const FieldCtx* base = nullptr;  // F_q
  int a = 0;
  std::vector<Place> places;             // sorted by (degree, monic index)
  std::map<int, mpz_class> counts;       // n -> pi_q(n) for n | a
  std::size_t size() const { return places.size(); }
};

// pi_q(n): number of monic irreducibles of degree n over F_q, excluding t
// (Moebius/necklace count, with the n=1 exclusion of the place t).
mpz_class count_places(std::uint64_t q, int n);

// Complete, duplicate-free, sorted list of monic irreducibles of degree d
// over F_q, excluding t. Exhaustive sieve; throws SizeCapExceeded when q^d
// exceeds the enumeration cap.
std::vector<PolyFq> irreducibles(const FieldCtx* base, int d,
                                 const Caps& caps = default_caps());

PlaceSet place_set(const FieldCtx* base, int a,
                   const Caps& caps = default_caps());

}  // namespace asl

#endif
