#pragma once

#include <stdexcept>
#include <string>

namespace minstab {

/// An operation would need coefficients beyond the configured truncation
/// degree. Raised instead of truncating.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Input violates an operation's precondition (zero f, constant g, asymmetric
/// vector, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// construct_J was asked for a complex structure on non-isotropic data.
class NotIsotropic : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// All coordinates of the data vanish at the evaluation point.
class DegenerateGaussMap : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The Rayleigh-quotient grid failed its coarse/fine consistency check.
class GridTooCoarse : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace minstab
