#pragma once

#include <stdexcept>
#include <string>

namespace wsat {

// Precondition violated by the caller (bad parameters, malformed input).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured search budget (nodes, matchings, attempts) ran out before the
// computation could be completed exactly.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input could not be parsed (graph files, rationals).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wsat
