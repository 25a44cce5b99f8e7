#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "matchpoly/rational.hpp"

namespace matchpoly {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Thrown by enumerating operations when the exact enumeration count would
// exceed the configured budget. Carries the count so callers can report it.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::string what_arg, Integer count, std::uint64_t budget)
        : std::runtime_error(std::move(what_arg)), count_(std::move(count)), budget_(budget) {}

    const Integer& count() const { return count_; }
    std::uint64_t budget() const { return budget_; }

private:
    Integer count_;
    std::uint64_t budget_;
};

// Signals a violated internal consistency check (a construction bug), such as
// a polynomial division that should be exact leaving a remainder.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace matchpoly
