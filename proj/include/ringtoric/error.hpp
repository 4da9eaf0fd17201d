#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringtoric {

// Domain error with a short machine-readable kind ("loop", "multi-edge",
// "parse", "precondition", ...). Line numbers are 1-based and only set for
// errors that point into input text.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message, int line = 0);

    const std::string& kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }

private:
    std::string kind_;
    int line_;
};

// A caller-supplied work cap was hit. Never accompanies a partial answer.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what_ran_out);
};

// Caps on the exponential parts of the library. Zero means unlimited.
struct Budget {
    std::size_t max_cycles = 0;  // cycles produced by any enumerator
    std::size_t max_pairs = 0;   // S-pairs processed by buchberger
    std::size_t max_steps = 0;   // reduction steps inside one normal form

    static Budget unlimited() { return {}; }
};

}  // namespace ringtoric
