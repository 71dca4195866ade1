#pragma once

#include <stdexcept>
#include <string>

namespace planarlab {

// Domain errors (exact algebra layer).

struct OddExponentError : std::invalid_argument {
    explicit OddExponentError(int n)
        : std::invalid_argument("homogeneous center requires an even exponent, got " +
                                std::to_string(n)) {}
};

struct ZeroFieldError : std::invalid_argument {
    ZeroFieldError() : std::invalid_argument("operation is undefined for the zero field") {}
};

// Parser errors carry a 0-based character position into the source text.

struct ParseError : std::runtime_error {
    enum class Kind { Syntax, UnknownVariable, NegativeExponent };

    ParseError(Kind k, std::size_t position, const std::string& message)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          kind(k),
          pos(position) {}

    Kind kind;
    std::size_t pos;
};

// Numerical failures from the flow / cycle layer.  `name()` is the stable
// identifier used in CLI reports and exit-code mapping.

struct NumericError : std::runtime_error {
    NumericError(std::string error_name, const std::string& message)
        : std::runtime_error(message), name_(std::move(error_name)) {}
    const std::string& name() const { return name_; }

  private:
    std::string name_;
};

struct BlowupError : NumericError {
    explicit BlowupError(double t)
        : NumericError("Blowup",
                       "trajectory norm exceeded 1e12 at t = " + std::to_string(t) +
                           " (finite-time escape)") {}
};

struct StepLimitError : NumericError {
    StepLimitError() : NumericError("StepLimitExceeded", "accepted-step budget exhausted") {}
};

struct NoEventError : NumericError {
    NoEventError() : NumericError("NoEvent", "event function never crossed zero") {}
};

struct NonTransversalError : NumericError {
    explicit NonTransversalError(const std::string& message)
        : NumericError("NonTransversal", message) {}
};

struct DegenerateSamplesError : NumericError {
    DegenerateSamplesError()
        : NumericError("DegenerateSamples", "all cycle samples were skipped (vanishing norms)") {}
};

}  // namespace planarlab
