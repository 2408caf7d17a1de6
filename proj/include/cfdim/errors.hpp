#ifndef CFDIM_ERRORS_HPP
#define CFDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cfdim {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// invalid or out-of-range parameters (counts, family params, theorem ranges)
struct ParamError : Error {
  using Error::Error;
};

// argument outside the mathematical domain (x not in [0,1], log of <= 0, ...)
struct DomainError : Error {
  using Error::Error;
};

// non-positive value where strict positivity is required
struct PositivityError : Error {
  using Error::Error;
};

// f not contained in the claimed parent family
struct ContainmentError : Error {
  using Error::Error;
};

// tail majorant series diverges at the requested exponent
struct DivergentTailError : Error {
  using Error::Error;
};

// no alphabet element can push the dimension past s
struct NoBreakPointError : Error {
  using Error::Error;
};

}  // namespace cfdim

#endif
