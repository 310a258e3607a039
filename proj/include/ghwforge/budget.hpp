#pragma once

#include <cstdint>
#include <string>

#include "ghwforge/errors.hpp"

namespace ghwforge {

// Cap on the number of states an enumeration kernel may visit. Exceeding the
// cap raises TooLargeError; results are never silently truncated.
struct Budget {
    std::uint64_t cap = 10'000'000;
};

class BudgetMeter {
public:
    explicit BudgetMeter(const Budget& budget) : cap_(budget.cap) {}

    void charge(std::uint64_t states = 1) {
        if (states > cap_ - used_) {
            throw TooLargeError("enumeration budget exceeded (cap " +
                                std::to_string(cap_) + " states)");
        }
        used_ += states;
    }

    // Raises without consuming budget; used for upfront size estimates.
    void require(std::uint64_t states) const {
        if (states > cap_ - used_) {
            throw TooLargeError("instance needs " + std::to_string(states) +
                                " states, budget cap is " + std::to_string(cap_));
        }
    }

    std::uint64_t used() const { return used_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t cap_;
    std::uint64_t used_ = 0;
};

}  // namespace ghwforge
