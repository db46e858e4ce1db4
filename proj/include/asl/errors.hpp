#ifndef ASL_ERRORS_HPP
#define ASL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace asl {

// Failure taxonomy. Usage errors (bad parameters) and resource caps are
// recoverable from the CLI's point of view; NotRationalInteger and
// FunctionalEquationViolated signal internal inconsistencies and are fatal.
enum class ErrorKind {
  NotPrime,
  EvenCharacteristic,
  SizeCapExceeded,
  NotASubfield,
  ZeroParameter,
  NotRationalInteger,
  WorkLimitExceeded,
  MismatchAt,
  FunctionalEquationViolated,
  DivisionByZero,
  EmptyEnsemble,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct NotPrime : Error {
  explicit NotPrime(std::string m) : Error(ErrorKind::NotPrime, std::move(m)) {}
};
struct EvenCharacteristic : Error {
  explicit EvenCharacteristic(std::string m)
      : Error(ErrorKind::EvenCharacteristic, std::move(m)) {}
};
struct SizeCapExceeded : Error {
  explicit SizeCapExceeded(std::string m)
      : Error(ErrorKind::SizeCapExceeded, std::move(m)) {}
};
struct NotASubfield : Error {
  explicit NotASubfield(std::string m)
      : Error(ErrorKind::NotASubfield, std::move(m)) {}
};
struct ZeroParameter : Error {
  explicit ZeroParameter(std::string m)
      : Error(ErrorKind::ZeroParameter, std::move(m)) {}
};
struct NotRationalInteger : Error {
  explicit NotRationalInteger(std::string m)
      : Error(ErrorKind::NotRationalInteger, std::move(m)) {}
};
struct WorkLimitExceeded : Error {
  explicit WorkLimitExceeded(std::string m)
      : Error(ErrorKind::WorkLimitExceeded, std::move(m)) {}
};
struct MismatchAt : Error {
  MismatchAt(int n, std::string m)
      : Error(ErrorKind::MismatchAt, std::move(m)), n(n) {}
  int n;
};
struct FunctionalEquationViolated : Error {
  explicit FunctionalEquationViolated(std::string m)
      : Error(ErrorKind::FunctionalEquationViolated, std::move(m)) {}
};
struct DivisionByZero : Error {
  explicit DivisionByZero(std::string m)
      : Error(ErrorKind::DivisionByZero, std::move(m)) {}
};
struct EmptyEnsemble : Error {
  explicit EmptyEnsemble(std::string m)
      : Error(ErrorKind::EmptyEnsemble, std::move(m)) {}
};

}  // namespace asl

#endif
