#ifndef STURMIAN_ERRORS_HPP
#define STURMIAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sturmian {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (continued fraction notation, CLI arguments).
class parse_error : public error {
 public:
  using error::error;
};

/// Input outside the domain of an operation: rational slope where an
/// irrational one is required, length mismatch, empty pattern, ...
class domain_error : public error {
 public:
  using error::error;
};

/// Arithmetic between quadratic irrationals of different radicands.
class mixed_radicand_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// A brute-force oracle would need more symbols than its configured cap.
class resource_cap_exceeded : public error {
 public:
  using error::error;
};

/// An internal cross-check failed (formula and oracle disagree).
class invariant_violation : public error {
 public:
  using error::error;
};

}  // namespace sturmian

#endif  // STURMIAN_ERRORS_HPP
