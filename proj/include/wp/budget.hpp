#pragma once

#include <chrono>
#include <exception>

namespace wp {

class BudgetExceeded : public std::exception {
public:
    const char* what() const noexcept override { return "per-graph time budget exceeded"; }
};

// Cooperative deadline passed into the expensive predicates. The clock is
// sampled once every 1024 checks to keep the hot loops cheap.
struct Budget {
    std::chrono::steady_clock::time_point deadline;
    mutable unsigned tick = 0;

    static Budget after(std::chrono::milliseconds ms) {
        return Budget{std::chrono::steady_clock::now() + ms};
    }

    void check() const {
        if ((++tick & 1023u) != 0) return;
        if (std::chrono::steady_clock::now() > deadline) throw BudgetExceeded();
    }
};

inline void budget_check(const Budget* b) {
    if (b) b->check();
}

}  // namespace wp
