#ifndef ARTIN_ERROR_HPP_
#define ARTIN_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace artin {

  // Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Raised for malformed input documents and violated graph invariants.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

}  // namespace artin

#endif  // ARTIN_ERROR_HPP_
