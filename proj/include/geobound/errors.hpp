#pragma once

#include <stdexcept>
#include <string>

namespace geobound {

/// Input outside the domain of a hyperbolic-trigonometry formula
/// (nonpositive length, degenerate polygon, cusp where a finite length is needed).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// An iterative solve did not reach its tolerance. Carries the last bracket.
class NumericalError : public std::runtime_error {
public:
  NumericalError(const std::string& what, double lo, double hi)
      : std::runtime_error(what), lo_(lo), hi_(hi) {}

  double bracket_lo() const noexcept { return lo_; }
  double bracket_hi() const noexcept { return hi_; }

private:
  double lo_;
  double hi_;
};

class InvalidSlope : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// (r, s) admits no third half-trace completing a cusped torus.
class NoCuspedTorus : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Triple with a coordinate <= 1, or off the cusp variety.
class DegenerateSurface : public std::domain_error {
public:
  DegenerateSurface(const std::string& what, double residual = 0.0)
      : std::domain_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

class UnknownConstant : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

class SearchFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace geobound
