#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "ffword/radix.hpp"
#include "ffword/smooth.hpp"

namespace ffword {

/// A rational threshold eps = p/q with 0 < p/q <= 1, stored reduced.
class RatioBound {
public:
    RatioBound(Nat p, Nat q) : p_(std::move(p)), q_(std::move(q)) {
        if (q_ < 1 || p_ < 1 || p_ > q_)
            throw std::invalid_argument("ratio bound must satisfy 0 < p/q <= 1");
        const Nat g = gcd_nat(p_, q_);
        p_ /= g;
        q_ /= g;
    }

    const Nat& p() const noexcept { return p_; }
    const Nat& q() const noexcept { return q_; }
    Rat value() const { return Rat(p_, q_); }
    bool is_one() const { return p_ == q_; }

private:
    Nat p_, q_;
};

/// Verdicts for one truncation cut of a word.
///
/// `valid` is false when the prefix numerator is 0, in which case neither
/// criterion applies at that cut; the other fields are then unset.
struct TruncationRecord {
    std::size_t cut = 0;
    Nat numerator;
    Nat s_component;
    bool ff = false;
    bool pff = false;
    bool valid = false;
    std::size_t first_nonzero_digit_position = 0;
};

namespace detail {

inline TruncationRecord evaluate_cut(const DigitWord& w, const PrimeSet& S,
                                     const RatioBound& eps, std::size_t cut) {
    TruncationRecord rec;
    rec.cut = cut;
    rec.numerator = numerator(w, cut).value;
    rec.first_nonzero_digit_position = w.first_nonzero_position();
    if (rec.numerator == 0) return rec;  // all-zero prefix: nothing to judge
    rec.valid = true;
    rec.s_component = s_component(rec.numerator, S).component;
    rec.ff = rec.s_component == rec.numerator;
    // exact integer form of c/u >= b^{(p/q - 1) n}:  c^q b^{(q-p)n} >= u^q
    const std::uint64_t qn = static_cast<std::uint64_t>(eps.q() - eps.p()) * cut;
    rec.pff = pow_nat(rec.s_component, static_cast<std::uint64_t>(eps.q())) *
                  pow_nat(w.base().value(), qn) >=
              pow_nat(rec.numerator, static_cast<std::uint64_t>(eps.q()));
    return rec;
}

inline void require_cuts(const DigitWord& w, const std::vector<std::size_t>& cuts) {
    for (std::size_t k : cuts)
        if (k < 1 || k > w.size()) throw std::out_of_range("truncation cut out of range");
}

}  // namespace detail

/// Per-cut test of u_n being S-smooth.
inline std::vector<TruncationRecord> ff_check(const DigitWord& w, const PrimeSet& S,
                                              const std::vector<std::size_t>& cuts) {
    detail::require_cuts(w, cuts);
    std::vector<TruncationRecord> records;
    records.reserve(cuts.size());
    const RatioBound one{Nat{1}, Nat{1}};
    for (std::size_t k : cuts) records.push_back(detail::evaluate_cut(w, S, one, k));
    return records;
}

/// Per-cut test of the relaxed criterion c_{u_n,S}/u_n >= b^{(eps-1)n},
/// evaluated entirely in integers. At eps = 1 this coincides with ff_check.
inline std::vector<TruncationRecord> pff_check(const DigitWord& w, const PrimeSet& S,
                                               const RatioBound& eps,
                                               const std::vector<std::size_t>& cuts) {
    detail::require_cuts(w, cuts);
    std::vector<TruncationRecord> records;
    records.reserve(cuts.size());
    for (std::size_t k : cuts) records.push_back(detail::evaluate_cut(w, S, eps, k));
    return records;
}

/// Count of distinct primes accumulated by the cut numerators.
///
/// With a finite effort budget some numerators may not factor completely;
/// the count is then a lower bound and `exact` is false.
struct FactorialIndexResult {
    std::size_t lower_bound = 0;
    bool exact = true;
    std::set<Nat> primes;
};

inline FactorialIndexResult factorial_index(const DigitWord& w,
                                            const std::vector<std::size_t>& cuts,
                                            std::uint64_t effort_budget = 1u << 18) {
    if (cuts.empty()) throw std::invalid_argument("factorial_index needs at least one cut");
    detail::require_cuts(w, cuts);
    FactorialIndexResult result;
    for (std::size_t k : cuts) {
        const Nat u = numerator(w, k).value;
        if (u < 1) throw std::invalid_argument("factorial_index cut has zero numerator");
        if (u == 1) continue;  // a unit contributes no primes
        Factorization f = factorize(u, effort_budget);
        for (const auto& [p, e] : f.factors) result.primes.insert(p);
        if (!f.complete) result.exact = false;
    }
    result.lower_bound = result.primes.size();
    return result;
}

/// The word with 1 exactly at the factorial positions 1!, 2!, 3!, ...
inline DigitWord liouville_word(Base base, std::size_t length) {
    if (length < 1) throw std::invalid_argument("liouville_word requires length >= 1");
    std::vector<int> digits(length, 0);
    Nat pos{1};
    for (std::uint64_t i = 1; pos <= length; ++i) {
        digits[static_cast<std::size_t>(pos) - 1] = 1;
        pos *= (i + 1);
    }
    return DigitWord(std::move(digits), base);
}

/// One step of the Liouville-word witness: the record at cut (i+3)!-1 with
/// S = F_b and eps = 1/2, plus the closed-form S-component identity.
struct LiouvilleWitnessStep {
    std::uint64_t i = 0;
    std::size_t cut = 0;
    TruncationRecord record;
    bool component_identity = false;  // c == b^{(i+3)! - (i+2)! - 1}
};

inline std::vector<LiouvilleWitnessStep> liouville_pff_witness(
    Base base, std::uint64_t i_max, std::size_t digit_cap = 1000000) {
    if (i_max < 1) throw std::invalid_argument("liouville_pff_witness requires i_max >= 1");
    Nat fact{1};
    for (std::uint64_t j = 2; j <= i_max + 3; ++j) fact *= j;
    if (fact - 1 > digit_cap)
        throw resource_error("witness cut (i_max+3)!-1 exceeds the digit cap");
    const std::size_t max_cut = static_cast<std::size_t>(fact - 1);
    const DigitWord word = liouville_word(base, max_cut);
    const PrimeSet S = PrimeSet::factors_of(base.value());
    const RatioBound half{Nat{1}, Nat{2}};
    std::vector<LiouvilleWitnessStep> steps;
    Nat lower{2};  // (i+2)!, seeded at i=0
    Nat upper{6};  // (i+3)!, seeded at i=0
    for (std::uint64_t i = 1; i <= i_max; ++i) {
        lower *= (i + 2);
        upper *= (i + 3);
        LiouvilleWitnessStep step;
        step.i = i;
        step.cut = static_cast<std::size_t>(upper - 1);
        step.record = detail::evaluate_cut(word, S, half, step.cut);
        const Nat expected = pow_nat(base.value(), static_cast<std::uint64_t>(upper - lower - 1));
        step.component_identity = step.record.valid && step.record.s_component == expected;
        steps.push_back(std::move(step));
    }
    return steps;
}

}  // namespace ffword
