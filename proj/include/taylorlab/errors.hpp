#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace taylorlab {

/// Malformed expression text. `offset` is a byte offset into the input.
class ParseError : public std::runtime_error
{
  public:
    ParseError(std::size_t offset, std::string message, std::string expected)
        : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + message
                             + (expected.empty() ? "" : " (expected " + expected + ")")),
          offset_(offset),
          message_(std::move(message)),
          expected_(std::move(expected))
    {
    }

    std::size_t offset() const noexcept { return offset_; }
    const std::string& message() const noexcept { return message_; }
    const std::string& expected() const noexcept { return expected_; }

  private:
    std::size_t offset_;
    std::string message_;
    std::string expected_;
};

/// A function was evaluated outside the set where it is defined.
class DomainError : public std::domain_error
{
  public:
    DomainError(std::string subexpression, double input, const std::string& what)
        : std::domain_error(what + " in '" + subexpression + "' at x = " + std::to_string(input)),
          subexpression_(std::move(subexpression)),
          input_(input)
    {
    }

    const std::string& subexpression() const noexcept { return subexpression_; }
    double input() const noexcept { return input_; }

  private:
    std::string subexpression_;
    double input_;
};

/// Adaptive quadrature gave up before its error estimate met the tolerance.
class ToleranceError : public std::runtime_error
{
  public:
    ToleranceError(double estimate, double error_estimate, double tolerance)
        : std::runtime_error("quadrature tolerance not met: estimate " + std::to_string(estimate)
                             + ", error " + std::to_string(error_estimate) + " > "
                             + std::to_string(tolerance)),
          estimate_(estimate),
          error_estimate_(error_estimate),
          tolerance_(tolerance)
    {
    }

    double estimate() const noexcept { return estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }
    double tolerance() const noexcept { return tolerance_; }

  private:
    double estimate_;
    double error_estimate_;
    double tolerance_;
};

/// D was applied to a function with no symbolic backing.
class UnsupportedDifferentiation : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

/// A caller violated a documented precondition (argument ranges, guards).
class PreconditionError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace taylorlab
