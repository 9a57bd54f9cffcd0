#pragma once

#include <stdexcept>
#include <string>

namespace lpa {

// Raised when a decision procedure refuses to run because the instance is
// larger than its configured brute-force cap (never silently guesses).
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lpa
