#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pleth {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when a desk-scale enumeration guard would be exceeded.
struct GuardExceeded : std::runtime_error {
    explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a quantity violates a structural guarantee (non-integer
// multiplicity, negative plethysm coefficient, ...). Signals a bug, not
// bad input.
struct ConsistencyError : std::runtime_error {
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

Int factorial(int n);

struct CheckReport {
    bool ok = true;
    std::string detail;
};

}  // namespace pleth
