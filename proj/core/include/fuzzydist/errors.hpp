#pragma once

#include <stdexcept>
#include <string>

namespace fuzzydist {

/// Precondition or invariant violation on user-supplied input.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A requested combination the library does not provide (e.g. quantum D with k != 0).
class UnsupportedFeature : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An iterative method stopped without meeting its convergence test.
/// best_value() is still meaningful: for the distance optimizer it is a valid lower bound.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_value)
      : std::runtime_error(what), best_value_(best_value) {}

  double best_value() const noexcept { return best_value_; }

 private:
  double best_value_;
};

/// Internal consistency failure (a state the mathematics says cannot occur).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fuzzydist
