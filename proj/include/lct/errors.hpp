#pragma once
#include <stdexcept>
#include <string>

namespace lct {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Group element or kernel argument outside the contract of the operation.
struct DomainError : Error {
  using Error::Error;
};

// |b| below threshold: the integral kernel degenerates to a Dirac line and
// the caller must switch to the *_b0 form.
struct DegenerateB : Error {
  using Error::Error;
};

struct DegenerateA : Error {
  using Error::Error;
};

// Gamma pole / hypergeometric lower-parameter pole.
struct PoleError : Error {
  using Error::Error;
};

struct NonConvergence : Error {
  using Error::Error;
};

// Gauss hypergeometric argument on [1, inf).
struct BranchCutError : Error {
  using Error::Error;
};

// Matrix within tolerance of the compact subgroup orbit through the
// identity; generic closed forms blow up there and the diagonal phase
// branch applies.
struct EllipticDegenerate : Error {
  using Error::Error;
};

// Whittaker W combination ill-conditioned (mu real near half-integers).
struct DegenerateMu : Error {
  using Error::Error;
};

struct UnsupportedCombination : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line = 0;
  ParseError(const std::string& what, int line_no) : Error(what), line(line_no) {}
};

}  // namespace lct
