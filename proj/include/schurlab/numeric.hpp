// Exact integer/rational arithmetic and shared error types.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace schurlab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Resource guard: operations refuse to build objects of weighted degree
// beyond this bound. Thread of control may widen it per call site.
inline constexpr int kDefaultMaxDegree = 12;

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline void check_cap(long degree, int cap, const char* where) {
    if (degree > cap)
        throw CapExceeded(std::string(where) + ": degree " + std::to_string(degree) +
                          " exceeds cap " + std::to_string(cap));
}

// binomial(r, k) with arbitrary (possibly negative) upper argument,
// via the falling factorial r(r-1)...(r-k+1)/k!.
inline Int binomial(const Int& r, int k) {
    if (k < 0) return 0;
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= r - i;
        den *= i + 1;
    }
    return num / den;
}

} // namespace schurlab
