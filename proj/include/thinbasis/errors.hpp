// errors.hpp
// Exception types shared by every thinbasis module.
//
//   ParameterError    - an argument violates an operation's precondition
//   CapacityError     - a request exceeds a configured or representable limit
//   ValidationError   - a value fails a structural invariant (e.g. a digit string)
//   ConsistencyError  - an internal invariant failed; indicates a bug or a
//                       counterexample to the modular covering property

#pragma once
#include <stdexcept>
#include <string>

namespace thinbasis {

class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace thinbasis
