#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

// Sampled data hit a measure-zero degeneracy (zero generator, parallel
// normals, rank collapse). Callers redraw rather than patch.
class DegenerateSampleError : public std::runtime_error {
public:
    explicit DegenerateSampleError(const std::string& what) : std::runtime_error(what) {}
};

// A hard size guard was exceeded (enumeration limits, attempt caps).
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure inside a solver (LP pivot breakdown, NNLS stall).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace weyl
