#pragma once

#include <chrono>
#include <stdexcept>
#include <string>

namespace eisq {

/// Malformed external input: graph6 text, edge-list text, bad CLI values.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation refused its input because an entry contract does not hold
/// (isolated vertices at a classification entry point, a parameter below its
/// minimum, a face that is not in the complex, ...).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A per-graph computation exceeded its time budget.
class timeout_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cooperative deadline. Long-running enumeration loops call checkpoint();
/// once the deadline passes, checkpoint() throws timeout_error. Sweeps count
/// the timeout as a refusal, never as an agreement.
class Budget {
public:
    explicit Budget(std::chrono::milliseconds limit)
        : deadline_(std::chrono::steady_clock::now() + limit) {}

    void checkpoint() const {
        // amortize the clock read
        if ((++tick_ & 0xffu) != 0) return;
        if (std::chrono::steady_clock::now() > deadline_)
            throw timeout_error("per-graph time budget exceeded");
    }

private:
    std::chrono::steady_clock::time_point deadline_;
    mutable unsigned tick_ = 0;
};

inline void budget_checkpoint(const Budget* budget) {
    if (budget) budget->checkpoint();
}

}  // namespace eisq
