#ifndef DIMER_ERRORS_HPP
#define DIMER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dimer {

// Base class for everything thrown by this library. Most of these signal
// arithmetic invariants that can only break when an upstream computation is
// wrong, so catching them anywhere but at the top level is rarely useful.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

class not_a_perfect_square : public error {
 public:
  using error::error;
};

class zero_polynomial : public error {
 public:
  using error::error;
};

class non_monic : public error {
 public:
  using error::error;
};

class odd_coefficient_nonzero : public error {
 public:
  using error::error;
};

class halving_not_exact : public error {
 public:
  using error::error;
};

class inexact_newton_division : public error {
 public:
  using error::error;
};

class unexpected_u : public error {
 public:
  using error::error;
};

class non_positive_b : public error {
 public:
  using error::error;
};

class width_cap_exceeded : public error {
 public:
  using error::error;
};

class divisibility_failure : public error {
 public:
  using error::error;
};

class inexact_division : public error {
 public:
  using error::error;
};

class internal_mismatch : public error {
 public:
  using error::error;
};

class insufficient_data : public error {
 public:
  using error::error;
};

class cache_conflict : public error {
 public:
  using error::error;
};

class schema_error : public error {
 public:
  using error::error;
};

class io_error : public error {
 public:
  using error::error;
};

}  // namespace dimer

#endif  // DIMER_ERRORS_HPP
