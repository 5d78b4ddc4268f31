#pragma once

#include <stdexcept>
#include <string>

namespace morsecat {

// Invalid mathematical input: malformed simplices, non-Morse functions,
// references to simplices outside the complex, and the like.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A bounded search ran out of its budget before reaching an answer.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace morsecat
