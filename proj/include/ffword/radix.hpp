#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "ffword/numeric.hpp"

namespace ffword {

/// An integer radix b >= 2.
class Base {
public:
    explicit Base(int b) : value_(b) {
        if (b < 2) throw std::invalid_argument("base must be at least 2");
    }

    int value() const noexcept { return value_; }
    friend bool operator==(Base, Base) = default;

private:
    int value_;
};

/// A finite word of base-b digits, most significant first.
///
/// Leading zeros are legal word content; only canonical integer expansions
/// (the output of expand) forbid them.
class DigitWord {
public:
    DigitWord(std::vector<int> digits, Base base)
        : digits_(std::move(digits)), base_(base) {
        for (int d : digits_) {
            if (d < 0 || d >= base_.value())
                throw std::invalid_argument("digit " + std::to_string(d) +
                                            " out of range for base " +
                                            std::to_string(base_.value()));
        }
    }

    DigitWord(std::initializer_list<int> digits, Base base)
        : DigitWord(std::vector<int>(digits), base) {}

    const std::vector<int>& digits() const noexcept { return digits_; }
    Base base() const noexcept { return base_; }
    std::size_t size() const noexcept { return digits_.size(); }
    bool empty() const noexcept { return digits_.empty(); }
    int operator[](std::size_t i) const { return digits_.at(i); }

    /// 1-based position of the first nonzero digit, 0 if the word is all zeros.
    std::size_t first_nonzero_position() const noexcept {
        for (std::size_t i = 0; i < digits_.size(); ++i)
            if (digits_[i] != 0) return i + 1;
        return 0;
    }

    bool operator==(const DigitWord& other) const {
        return base_ == other.base_ && digits_ == other.digits_;
    }

    /// Plain-text rendering: digits run together for b <= 10,
    /// space-separated above that.
    std::string render() const {
        std::ostringstream out;
        const bool spaced = base_.value() > 10;
        for (std::size_t i = 0; i < digits_.size(); ++i) {
            if (spaced && i > 0) out << ' ';
            out << digits_[i];
        }
        return out.str();
    }

private:
    std::vector<int> digits_;
    Base base_;
};

/// The integer formed by the first `cut` digits of a word.
struct TruncationNumerator {
    Nat value;
    std::size_t cut = 0;
};

/// Canonical b-ary expansion of n >= 1 (no leading zero).
inline DigitWord expand(const Nat& n, Base base) {
    if (n < 1)
        throw std::invalid_argument("canonical expansion requires n >= 1");
    std::vector<int> digits;
    Nat rest = n;
    const int b = base.value();
    while (rest > 0) {
        digits.push_back(static_cast<int>(rest % b));
        rest /= b;
    }
    std::reverse(digits.begin(), digits.end());
    return DigitWord(std::move(digits), base);
}

/// u_k = sum a_i b^{k-i} over the first k digits, 1 <= k <= |w|.
inline TruncationNumerator numerator(const DigitWord& w, std::size_t k) {
    if (k < 1 || k > w.size())
        throw std::out_of_range("truncation cut out of range");
    Nat u{0};
    const int b = w.base().value();
    for (std::size_t i = 0; i < k; ++i) u = u * b + w[i];
    return {u, k};
}

/// Concatenation of same-base words; parts may be empty.
inline DigitWord concat(Base base, const std::vector<DigitWord>& parts) {
    std::vector<int> digits;
    for (const DigitWord& p : parts) {
        if (!(p.base() == base))
            throw std::invalid_argument("concat over mixed bases");
        digits.insert(digits.end(), p.digits().begin(), p.digits().end());
    }
    return DigitWord(std::move(digits), base);
}

/// The exact k-th rational truncation u_k / b^k, in lowest terms.
inline Rat truncation_value(const DigitWord& w, std::size_t k) {
    const Nat u = numerator(w, k).value;
    return Rat(u, pow_nat(w.base().value(), k));
}

}  // namespace ffword
