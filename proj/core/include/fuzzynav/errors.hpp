#ifndef FUZZYNAV_ERRORS_HPP_
#define FUZZYNAV_ERRORS_HPP_

#include <stdexcept>

namespace fuzzynav {

/// A value handed to the library breaks one of its documented invariants
/// (unknown label, invalid rule base, malformed scenario, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fuzzynav

#endif  // FUZZYNAV_ERRORS_HPP_
