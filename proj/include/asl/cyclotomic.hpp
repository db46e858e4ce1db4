#ifndef ASL_CYCLOTOMIC_HPP
#define ASL_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "asl/fields.hpp"

namespace asl {

// Exact element of Z[zeta_p], stored in the power basis 1, z, ..., z^(p-2)
// with z^(p-1) eliminated through 1 + z + ... + z^(p-1) = 0. Values of the
// additive character and of every Kloosterman / character sum live here;
// floats appear only at the angle boundary (embed_complex).
class CycNum {
 public:
  CycNum() : p_(0) {}
  explicit CycNum(std::int64_t p) : p_(p), c_(std::size_t(p - 1)) {}

  static CycNum zero(std::int64_t p) { return CycNum(p); }
  static CycNum one(std::int64_t p) {
    CycNum r(p);
    r.c_[0] = 1;
    return r;
  }
  static CycNum from_integer(std::int64_t p, const mpz_class& v) {
    CycNum r(p);
    r.c_[0] = v;
    return r;
  }
  // zeta_p^t in canonical form
  static CycNum root_power(std::int64_t p, std::int64_t t);

  std::int64_t p() const { return p_; }
  const std::vector<mpz_class>& coords() const { return c_; }
  std::vector<mpz_class>& coords() { return c_; }

  bool is_zero() const;
  bool operator==(const CycNum& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator-() const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator*(const mpz_class& s) const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  // this += a*b without materializing intermediates
  void addmul(const CycNum& a, const CycNum& b);
  void addmul_scalar(const CycNum& a, const mpz_class& s);

  // Galois action zeta -> zeta^s, gcd(s,p)=1
  CycNum galois(std::int64_t s) const;
  std::string str() const;

 private:
  std::int64_t p_;
  std::vector<mpz_class> c_;
};

// zeta_p^t for t in the prime field; the standard additive character of F_p
CycNum character_value(std::int64_t p, std::int64_t t);
CycNum character_value(const FFElem& t);

// Galois automorphism zeta -> zeta^(-1) (complex conjugation in any embedding)
CycNum conj_bar(const CycNum& x);

// Integrality gate: requires canonical coords (c_0, 0, ..., 0).
// Throws NotRationalInteger (with the offending coordinates) otherwise.
mpz_class to_rational_integer(const CycNum& x);

// Fixed complex embedding zeta_p -> exp(2*pi*i/p).
std::complex<double> embed_complex(const CycNum& x);
// Embedding zeta_p -> exp(2*pi*i*s/p) for gcd(s,p)=1 (used by the
// embedding-independence tests).
std::complex<double> embed_complex(const CycNum& x, std::int64_t s);

}  // namespace asl

#endif
