#ifndef BQALG_ERROR_HPP_
#define BQALG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bqalg {

  // Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed arguments: unknown vertices, foreign arrow ids, bad module
  // specifications and so on.
  class InvalidInput : public Error {
   public:
    using Error::Error;
  };

  // Two paths whose endpoints do not match were concatenated.
  class CompositionError : public Error {
   public:
    using Error::Error;
  };

  // A relation of length < 2, or an ideal whose quotient is infinite.
  class NotAdmissibleError : public Error {
   public:
    using Error::Error;
  };

  class BasisCapExceeded : public Error {
   public:
    using Error::Error;
  };

  class SearchBudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  // A resolution was requested without a degree bound for a module of
  // infinite projective dimension.
  class InfiniteResolutionError : public Error {
   public:
    using Error::Error;
  };

  // A construction failed its own verification. Always a bug.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& what)
        : Error("line " + std::to_string(line) + ": " + what), _line(line) {}

    [[nodiscard]] std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

}  // namespace bqalg

#endif  // BQALG_ERROR_HPP_
