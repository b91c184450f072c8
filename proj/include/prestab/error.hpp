#ifndef PRESTAB_ERROR_HPP_
#define PRESTAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace prestab {

  // Operand shapes disagree (relation sizes, subset sizes, map arities).
  class dimension_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A value fails one of its construction invariants: the message names the
  // invariant.
  class validation_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Morphisms whose objects do not line up.
  class composition_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // An enumeration would exceed its configured bound.
  class resource_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class usage_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  class parse_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace prestab

#endif  // PRESTAB_ERROR_HPP_
