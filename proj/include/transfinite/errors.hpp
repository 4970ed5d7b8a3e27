#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace transfinite {

/// An argument outside an operation's domain (predecessor of a limit, etc.).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when an evaluation hits its depth, bit-size or sampling budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A natural number outgrew EvalBudget::max_bits.
class SizeBudgetExceeded : public BudgetExceeded {
public:
    using BudgetExceeded::BudgetExceeded;
};

/// The value would be at least epsilon_0 and has no Cantor normal form here.
class NotRepresentable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace transfinite
