#pragma once

#include <stdexcept>
#include <string>

namespace partalg {

  // All library errors derive from Error so callers can catch one type.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class MalformedPartition : public Error {
   public:
    using Error::Error;
  };

  class RankMismatch : public Error {
   public:
    using Error::Error;
  };

  // Thrown when a generator, Jucys-Murphy element or tensor factor needs a
  // larger ambient rank than the one available.
  class RankTooSmall : public Error {
   public:
    using Error::Error;
  };

  class IndexOutOfRange : public Error {
   public:
    using Error::Error;
  };

  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  class UnknownSuite : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    using Error::Error;
  };

}  // namespace partalg
