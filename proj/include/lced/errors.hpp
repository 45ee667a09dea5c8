#ifndef LCED_ERRORS_HPP
#define LCED_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lced {

// Base type for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonPrimeError : public Error {
 public:
  explicit NonPrimeError(std::uint64_t p)
      : Error("characteristic is not prime: " + std::to_string(p)), value(p) {}
  std::uint64_t value;
};

class MissingModulusError : public Error {
 public:
  MissingModulusError() : Error("extension field requires a modulus polynomial") {}
};

class ReducibleModulusError : public Error {
 public:
  explicit ReducibleModulusError(const std::string& what) : Error(what) {}
};

class DivisionByZeroError : public Error {
 public:
  DivisionByZeroError() : Error("division by zero") {}
};

class MixedFieldsError : public Error {
 public:
  MixedFieldsError() : Error("operands belong to different fields") {}
};

class ShapeMismatchError : public Error {
 public:
  explicit ShapeMismatchError(const std::string& what) : Error(what) {}
};

class RankDeficientError : public Error {
 public:
  explicit RankDeficientError(std::size_t r)
      : Error("matrix does not have full row rank (rank " + std::to_string(r) + ")"),
        rank(r) {}
  std::size_t rank;
};

class BadRError : public Error {
 public:
  explicit BadRError(const std::string& what) : Error(what) {}
};

class DegreeMismatchError : public Error {
 public:
  explicit DegreeMismatchError(const std::string& what) : Error(what) {}
};

class NotADivisorError : public Error {
 public:
  explicit NotADivisorError(const std::string& what) : Error(what) {}
};

class BadShapeError : public Error {
 public:
  explicit BadShapeError(const std::string& what) : Error(what) {}
};

class WrongCharacteristicError : public Error {
 public:
  explicit WrongCharacteristicError(const std::string& what) : Error(what) {}
};

class NotLcpError : public Error {
 public:
  explicit NotLcpError(const std::string& what) : Error(what) {}
};

class BudgetExceededError : public Error {
 public:
  explicit BudgetExceededError(const std::string& what) : Error(what) {}
};

// Thrown when a bounded witness search hits its evaluation limit without a result.
class LimitReachedError : public Error {
 public:
  explicit LimitReachedError(std::uint64_t n)
      : Error("search limit reached after " + std::to_string(n) + " evaluations"),
        examined(n) {}
  std::uint64_t examined;
};

class PreconditionUnmetError : public Error {
 public:
  explicit PreconditionUnmetError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  std::size_t line;
};

}  // namespace lced

#endif
