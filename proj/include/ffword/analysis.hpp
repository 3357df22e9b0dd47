#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ffword/radix.hpp"
#include "ffword/smooth.hpp"

namespace ffword {

/// An eventually periodic word: preperiod a' followed by period a'' repeated.
struct PeriodicWordSpec {
    DigitWord preperiod;
    DigitWord period;

    PeriodicWordSpec(DigitWord pre, DigitWord per)
        : preperiod(std::move(pre)), period(std::move(per)) {
        if (period.empty()) throw std::invalid_argument("period must be nonempty");
        if (!(preperiod.base() == period.base()))
            throw std::invalid_argument("preperiod and period must share a base");
    }

    Base base() const { return period.base(); }
};

/// The first `length` digits of the eventually periodic word.
inline DigitWord periodic_word(const PeriodicWordSpec& spec, std::size_t length) {
    if (length < 1) throw std::invalid_argument("periodic_word requires length >= 1");
    std::vector<int> digits;
    digits.reserve(length);
    for (std::size_t i = 0; i < spec.preperiod.size() && digits.size() < length; ++i)
        digits.push_back(spec.preperiod[i]);
    while (digits.size() < length)
        digits.push_back(spec.period[(digits.size() - spec.preperiod.size()) % spec.period.size()]);
    return DigitWord(std::move(digits), spec.base());
}

/// u_n = (b^n - 1)/(b - 1): the numerator of the all-ones word of length n.
inline Nat repunit(Base base, std::uint64_t n) {
    return (pow_nat(base.value(), n) - 1) / (base.value() - 1);
}

/// q_k = sum_{j=0..s-1} b^{j s^{k-1}}; running products of these telescope
/// to repunit numerators at cuts s^k.
struct FermatFactor {
    int base = 0;
    std::uint64_t s = 0;
    std::uint64_t k = 0;
    Nat value;
};

inline FermatFactor q_factor(Base base, std::uint64_t s, std::uint64_t k) {
    if (!detail::is_small_prime(s)) throw std::invalid_argument("s must be prime");
    if (k < 1) throw std::invalid_argument("q_factor requires k >= 1");
    Nat stride{1};
    for (std::uint64_t j = 1; j < k; ++j) {
        stride *= s;
        if (stride > UINT64_MAX) throw resource_error("q_factor stride s^{k-1} overflows");
    }
    const std::uint64_t e = static_cast<std::uint64_t>(stride);
    FermatFactor f{base.value(), s, k, Nat{0}};
    for (std::uint64_t j = 0; j < s; ++j) f.value += pow_nat(base.value(), j * e);
    return f;
}

/// prod_{j=1..k} q_j == u_{s^k}.
inline bool verify_q_product(Base base, std::uint64_t s, std::uint64_t k) {
    Nat product{1};
    for (std::uint64_t j = 1; j <= k; ++j) product *= q_factor(base, s, j).value;
    Nat cut{1};
    for (std::uint64_t j = 0; j < k; ++j) cut *= s;
    if (cut > UINT64_MAX) throw resource_error("verify_q_product cut s^k overflows");
    return product == repunit(base, static_cast<std::uint64_t>(cut));
}

/// gcd(q_k, prod_{j<k} q_j); the claim is that this always divides s.
inline Nat q_coprimality(Base base, std::uint64_t s, std::uint64_t k) {
    if (k < 2) throw std::invalid_argument("q_coprimality requires k >= 2");
    Nat product{1};
    for (std::uint64_t j = 1; j < k; ++j) product *= q_factor(base, s, j).value;
    return gcd_nat(q_factor(base, s, k).value, product);
}

using Quad = boost::multiprecision::cpp_bin_float_quad;

/// Exact count of S-smooth values representable by length-k words (with
/// leading zeros), i.e. #(M_S ∩ [1, b^k - 1]), with the two polynomial
/// covering bounds: the bare (k log b / log s_1)^l and the off-by-one-safe
/// (k log b / log s_1 + 1)^l. The bare bound can dip below the exact count
/// (e.g. S={2}, b=6, k=2); the corrected one cannot.
struct SmoothWordCount {
    Nat exact;
    double paper_bound = 0;
    double corrected_bound = 0;
};

inline SmoothWordCount count_smooth_words(const PrimeSet& S, Base base, std::uint64_t k) {
    if (k < 1) throw std::invalid_argument("count_smooth_words requires k >= 1");
    SmoothWordCount out;
    out.exact = count_nodes(S, Nat{1}, pow_nat(base.value(), k) - 1);
    const Quad x = Quad(k) * log(Quad(base.value())) / log(Quad(S.smallest()));
    out.paper_bound = static_cast<double>(pow(x, static_cast<int>(S.size())));
    out.corrected_bound = static_cast<double>(pow(x + 1, static_cast<int>(S.size())));
    return out;
}

/// Fractional parts of log_b(value), computed at quad precision.
inline std::vector<double> fractional_log_parts(const std::vector<Nat>& values, Base base) {
    std::vector<double> parts;
    parts.reserve(values.size());
    const Quad logb = log(Quad(base.value()));
    for (const Nat& v : values) {
        if (v < 2) throw std::invalid_argument("fractional_log_parts requires values >= 2");
        const Quad x = log(Quad(v)) / logb;
        parts.push_back(static_cast<double>(x - floor(x)));
    }
    return parts;
}

/// Star discrepancy of a finite sample in [0,1):
/// max_i max(i/N - x_(i), x_(i) - (i-1)/N) over the sorted sample.
inline double star_discrepancy(std::vector<double> points) {
    if (points.empty()) throw std::invalid_argument("star_discrepancy requires points");
    for (double x : points)
        if (x < 0.0 || x >= 1.0) throw std::invalid_argument("points must lie in [0,1)");
    std::sort(points.begin(), points.end());
    const double n = static_cast<double>(points.size());
    double best = 0.0;
    for (std::size_t i = 1; i <= points.size(); ++i) {
        const double x = points[i - 1];
        best = std::max({best, static_cast<double>(i) / n - x, x - (static_cast<double>(i) - 1) / n});
    }
    return best;
}

/// First (i, n) with n in the ascending stream and b^i m <= n <= b^i m + b^i - 1,
/// scanning extension depths i = 1..search_cap.
inline std::optional<std::pair<std::size_t, Nat>> extendable_witness(
    const std::vector<Nat>& values, Base base, const Nat& m, std::size_t search_cap) {
    if (m < 1) throw std::invalid_argument("extendable_witness requires m >= 1");
    for (std::size_t i = 1; i <= search_cap; ++i) {
        const Nat shift = pow_nat(base.value(), i);
        const Nat lo = m * shift;
        const Nat hi = lo + shift - 1;
        auto it = std::lower_bound(values.begin(), values.end(), lo);
        if (it != values.end() && *it <= hi) return std::make_pair(i, *it);
    }
    return std::nullopt;
}

/// Coefficients (A, B, C) with A b^{j r''} - B = C u_{r' + j r''} for every
/// j >= 0, where u is the truncation numerator of the periodic word; the
/// exact-arithmetic face of the norm-form equations behind the periodic case.
struct SUnitCoefficients {
    Nat A, B, C;
};

inline SUnitCoefficients periodic_sunit_coefficients(const PeriodicWordSpec& spec) {
    const Nat u_pre = spec.preperiod.empty()
                          ? Nat{0}
                          : numerator(spec.preperiod, spec.preperiod.size()).value;
    const Nat u_per = numerator(spec.period, spec.period.size()).value;
    const Nat c = pow_nat(spec.base().value(), spec.period.size()) - 1;
    return SUnitCoefficients{u_pre * c + u_per, u_per, c};
}

}  // namespace ffword
