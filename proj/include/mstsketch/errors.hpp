#pragma once

#include <stdexcept>
#include <string>

namespace mstsketch {

// Malformed or inconsistent input: bad edge lists, disconnected graphs where
// a spanning tree is required, unparseable spec strings. CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A statistical precondition does not hold: degenerate samples, weight models
// whose density at zero is zero or infinite. CLI exit code 3.
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A size cap was exceeded: brute-force enumeration beyond n = 8, direct MST
// solves beyond the configured cap, unsupported cost/size combinations.
// CLI exit code 4.
class SizeCapError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace mstsketch
