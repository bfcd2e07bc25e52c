#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace gridiv {

// Exact division counts. Values like d_10(500) overflow any fixed width,
// so everything downstream of the counters is arbitrary precision.
using BigCount = boost::multiprecision::cpp_int;

// Always stored normalized: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

// Raised when a request would exceed a configured size guard
// (brute-force edge limit, dp row limit).
class size_error : public std::runtime_error {
public:
    explicit size_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed input (bad edge, duplicate abscissa, k out of range).
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when two engines that must agree do not. Never swallowed.
class oracle_mismatch : public std::runtime_error {
public:
    explicit oracle_mismatch(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gridiv
