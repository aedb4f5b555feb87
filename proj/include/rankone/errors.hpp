#pragma once

#include <stdexcept>
#include <string>

namespace rankone {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument lies on (or within tolerance of) a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the supported domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Iterative or quadrature procedure failed to reach its tolerance.
/// Carries the best estimate seen and the error achieved with it.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_re, double best_im,
                   double achieved_error)
      : Error(what),
        best_re_(best_re),
        best_im_(best_im),
        achieved_error_(achieved_error) {}

  double best_estimate_real() const { return best_re_; }
  double best_estimate_imag() const { return best_im_; }
  double achieved_error() const { return achieved_error_; }

 private:
  double best_re_;
  double best_im_;
  double achieved_error_;
};

/// Spectral parameter does not give a completely bounded multiplier.
class NotAMultiplierError : public Error {
 public:
  using Error::Error;
};

/// Value failed a structural invariant (e.g. not a Lorentz matrix).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Enumeration would exceed the configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Support growth exceeded the configured ball radius.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace rankone
