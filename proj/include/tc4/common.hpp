#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tc4 {

// All semigroup and exponent arithmetic runs on a fixed 64-bit signed width.
using Int = long long;

// Error taxonomy; the CLI maps these onto its exit codes.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw InvalidInput("integer overflow in addition");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw InvalidInput("integer overflow in multiplication");
    return r;
}

}  // namespace tc4
