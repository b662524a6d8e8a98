#pragma once

#include <stdexcept>
#include <string>

namespace scatter {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// evaluation of a kernel on its diagonal x == y
struct SingularEvaluationError : Error {
    using Error::Error;
};

// symbol denominator hit the characteristic set
struct ResonantFrequencyError : Error {
    using Error::Error;
};

// Neumann iteration outside its convergence regime
struct DivergenceError : Error {
    using Error::Error;
};

// root bracketing failed (cap reached before crossing)
struct NoCrossingError : Error {
    using Error::Error;
};

// argument would overflow the exponential range
struct OverflowGuardError : Error {
    using Error::Error;
};

struct InvalidArgumentError : Error {
    using Error::Error;
};

}  // namespace scatter
