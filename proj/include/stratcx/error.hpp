#pragma once

#include <stdexcept>
#include <string>

namespace stratcx {

// Violated mathematical precondition (inadmissible rank vector, degenerate
// twist, non-complex input, ...). The CLI maps this to exit code 2.
class math_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: unparsable rationals, bad JSON, shape mismatches in
// files. The CLI maps this to exit code 1.
class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace stratcx
