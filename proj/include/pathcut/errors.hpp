#pragma once

#include <stdexcept>
#include <string>

namespace pathcut {

// Exit-code taxonomy used by the CLI: 2 precondition, 3 budget, 4 internal.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw PreconditionError(msg);
}

inline void check_internal(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

}  // namespace pathcut
