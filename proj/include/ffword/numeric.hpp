#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ffword {

// Arbitrary-precision naturals and exact rationals; nothing in the core
// library touches floating point (analysis.hpp holds the one exception).
using Nat = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// A least-child search exhausted its digit cap before finding a node.
class stall_error : public std::runtime_error {
public:
    stall_error(std::string word, std::size_t cap)
        : std::runtime_error("child search stalled on word \"" + word +
                             "\" after " + std::to_string(cap) + " extra digits"),
          word_(std::move(word)) {}

    const std::string& word() const noexcept { return word_; }

private:
    std::string word_;
};

/// A request exceeded the configured memory/effort envelope.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Nat pow_nat(const Nat& base, std::uint64_t exp) {
    Nat result{1};
    Nat acc = base;
    while (exp > 0) {
        if (exp & 1u) result *= acc;
        exp >>= 1u;
        if (exp > 0) acc *= acc;
    }
    return result;
}

inline Nat gcd_nat(Nat a, Nat b) {
    return boost::multiprecision::gcd(a, b);
}

}  // namespace ffword
