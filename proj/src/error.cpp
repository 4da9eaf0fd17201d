#include "ringtoric/error.hpp"

#include <utility>

namespace ringtoric {

Error::Error(std::string kind, const std::string& message, int line)
    : std::runtime_error(message), kind_(std::move(kind)), line_(line) {}

BudgetExceeded::BudgetExceeded(const std::string& what_ran_out)
    : Error("budget", "budget exceeded: " + what_ran_out) {}

}  // namespace ringtoric
