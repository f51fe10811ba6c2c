#pragma once

#include <stdexcept>
#include <string>

namespace bernstir {

struct DivisionByZeroConstantTerm : std::domain_error {
    DivisionByZeroConstantTerm()
        : std::domain_error("series division by a series with zero constant term") {}
};

struct ConstantTermNotOne : std::domain_error {
    explicit ConstantTermNotOne(const std::string& op)
        : std::domain_error(op + " requires a series with constant term 1") {}
};

struct NonzeroConstantTerm : std::domain_error {
    NonzeroConstantTerm()
        : std::domain_error("series exp requires a series with constant term 0") {}
};

struct OrderExceeded : std::out_of_range {
    OrderExceeded(std::size_t n, std::size_t order)
        : std::out_of_range("coefficient index " + std::to_string(n) +
                            " out of range for series of order " + std::to_string(order)) {}
};

struct BudgetExceeded : std::invalid_argument {
    explicit BudgetExceeded(unsigned n)
        : std::invalid_argument("enumeration oracle budget exceeded: N = " + std::to_string(n) +
                                " > 10") {}
};

// Raised when a generating-function coefficient that must be an integer is not.
// Always indicates a transcription bug, never bad input.
struct NonIntegerCoefficient : std::logic_error {
    explicit NonIntegerCoefficient(const std::string& what) : std::logic_error(what) {}
};

struct PoleAtSampledPoint : std::domain_error {
    unsigned j;
    explicit PoleAtSampledPoint(unsigned j_)
        : std::domain_error("sampled denominator vanishes at j = " + std::to_string(j_)),
          j(j_) {}
};

struct InternalMismatch : std::logic_error {
    explicit InternalMismatch(const std::string& what) : std::logic_error(what) {}
};

struct OddArgument : std::invalid_argument {
    OddArgument() : std::invalid_argument("argument must be an even integer") {}
};

}  // namespace bernstir
