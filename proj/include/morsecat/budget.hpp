#pragma once

#include "morsecat/errors.hpp"

#include <string>

namespace morsecat {

// Step counter for bounded searches. charge() throws BudgetError once the
// limit is exhausted, so callers can distinguish "no" from "gave up".
class Budget {
public:
    explicit Budget(long long limit, std::string what = "search")
        : remaining_(limit), what_(std::move(what)) {}

    void charge(long long n = 1) {
        remaining_ -= n;
        if (remaining_ < 0)
            throw BudgetError("search budget exhausted: " + what_);
    }

    long long remaining() const { return remaining_; }

private:
    long long remaining_;
    std::string what_;
};

} // namespace morsecat
