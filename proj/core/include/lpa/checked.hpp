#pragma once

#include <stdexcept>

namespace lpa {

// Exact 64-bit arithmetic. Any overflow is a hard error; wraparound would
// silently corrupt Smith forms and certificates.

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in exact arithmetic (add)");
    }
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in exact arithmetic (sub)");
    }
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in exact arithmetic (mul)");
    }
    return r;
}

inline long long checked_neg(long long a) {
    return checked_sub(0, a);
}

}  // namespace lpa
