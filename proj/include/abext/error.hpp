#pragma once

#include <stdexcept>
#include <string>

namespace abext {

  //! Malformed or out-of-domain input (negative part, non-prime, bad syntax).
  class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  //! A group or partition string that does not conform to the grammar.
  class SyntaxError : public InvalidInput {
   public:
    using InvalidInput::InvalidInput;
  };

  //! An instance is too large for the configured computational bound.
  class ResourceLimit : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Unknown family or table name.
  class LookupError : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
  };

  //! Checked arithmetic overflowed (group orders, invariant factors).
  class OverflowError : public std::overflow_error {
   public:
    using std::overflow_error::overflow_error;
  };

}  // namespace abext
