#include "asl/cyclotomic.hpp"

#include <cmath>
#include <sstream>

namespace asl {

namespace {
constexpr double kTau = 6.283185307179586476925286766559;
}

CycNum CycNum::root_power(std::int64_t p, std::int64_t t) {
  t = ((t % p) + p) % p;
  CycNum r(p);
  if (t < p - 1) {
    r.c_[std::size_t(t)] = 1;
  } else {
    for (auto& v : r.c_) v = -1;
  }
  return r;
}

bool CycNum::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

CycNum CycNum::operator+(const CycNum& o) const {
  CycNum r(*this);
  r += o;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum CycNum::operator-(const CycNum& o) const {
  CycNum r(*this);
  r -= o;
  return r;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

CycNum CycNum::operator*(const mpz_class& s) const {
  CycNum r(*this);
  for (auto& v : r.c_) v *= s;
  return r;
}

CycNum CycNum::operator*(const CycNum& o) const {
  CycNum r(p_);
  r.addmul(*this, o);
  return r;
}

void CycNum::addmul(const CycNum& a, const CycNum& b) {
  const std::size_t m = c_.size();  // p-1
  // accumulate into exponent slots 0..p-1, wrapping exponents mod p
  static thread_local std::vector<mpz_class> tmp;
  tmp.assign(m + 1, mpz_class(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t k = i + j;
      if (k >= std::size_t(p_)) k -= std::size_t(p_);
      mpz_addmul(tmp[k].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  // z^(p-1) = -(1 + z + ... + z^(p-2))
  for (std::size_t i = 0; i < m; ++i) c_[i] += tmp[i] - tmp[m];
}

void CycNum::addmul_scalar(const CycNum& a, const mpz_class& s) {
  for (std::size_t i = 0; i < c_.size(); ++i)
    mpz_addmul(c_[i].get_mpz_t(), a.c_[i].get_mpz_t(), s.get_mpz_t());
}

CycNum CycNum::galois(std::int64_t s) const {
  s = ((s % p_) + p_) % p_;
  std::vector<mpz_class> tmp{};
  tmp.resize(std::size_t(p_));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    std::size_t k = std::size_t((std::int64_t(j) * s) % p_);
    tmp[k] += c_[j];
  }
  CycNum r(p_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    r.c_[i] = tmp[i] - tmp[std::size_t(p_ - 1)];
  return r;
}

std::string CycNum::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i].get_str();
  }
  os << ")";
  return os.str();
}

CycNum character_value(std::int64_t p, std::int64_t t) {
  return CycNum::root_power(p, t);
}

CycNum character_value(const FFElem& t) {
  const FieldCtx* ctx = t.ctx();
  if (ctx->n != 1)
    throw Error(ErrorKind::NotASubfield,
                "character_value expects a prime-field element");
  return CycNum::root_power(ctx->p, t.coords()[0]);
}

CycNum conj_bar(const CycNum& x) { return x.galois(x.p() - 1); }

mpz_class to_rational_integer(const CycNum& x) {
  for (std::size_t i = 1; i < x.coords().size(); ++i) {
    if (x.coords()[i] != 0)
      throw NotRationalInteger("nonzero cyclotomic coordinates: " + x.str());
  }
  return x.coords()[0];
}

std::complex<double> embed_complex(const CycNum& x) {
  return embed_complex(x, 1);
}

std::complex<double> embed_complex(const CycNum& x, std::int64_t s) {
  const std::int64_t p = x.p();
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t j = 0; j < x.coords().size(); ++j) {
    if (x.coords()[j] == 0) continue;
    double ang = kTau * double((std::int64_t(j) * s) % p) / double(p);
    acc += x.coords()[j].get_d() *
           std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

}  // namespace asl
