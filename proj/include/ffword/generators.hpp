#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ffword/criteria.hpp"
#include "ffword/radix.hpp"
#include "ffword/smooth.hpp"

namespace ffword {

/// A lazily evaluated node sequence {m_i}, i = 1, 2, ...: a prime set plus a
/// rule producing the exponent vector for index i (nullopt ends the family).
///
/// Exponents are materialized one block at a time; families with factorially
/// growing exponents are only evaluated as far as the digit budget requires.
struct NodeFamily {
    PrimeSet primes;
    std::function<std::optional<std::vector<std::uint64_t>>(std::uint64_t)> exponents_at;

    Node node_at(std::uint64_t i) const {
        auto exps = exponents_at(i);
        if (!exps) throw std::out_of_range("node family exhausted at index " + std::to_string(i));
        return node_value(*exps, primes);
    }

    /// m_i = prod s^{(i+1)! - i! - 1} over every prime of S.
    static NodeFamily factorial_gap(PrimeSet S);

    /// m_i = s^{2^{i + start - 1}} for a single-prime S; start = 1 gives m_1 = s^2.
    static NodeFamily power_tower(PrimeSet S, std::uint64_t start = 1);

    /// m_i = s_1^{2^i} s_2^i over a two-prime S, i from 1.
    static NodeFamily perturbed_tower(PrimeSet S);

    /// Finite, explicitly listed exponent vectors.
    static NodeFamily explicit_list(PrimeSet S, std::vector<std::vector<std::uint64_t>> exps);
};

inline NodeFamily NodeFamily::factorial_gap(PrimeSet S) {
    const std::size_t l = S.size();
    return NodeFamily{std::move(S), [l](std::uint64_t i) -> std::optional<std::vector<std::uint64_t>> {
                          Nat fact{1};
                          for (std::uint64_t j = 2; j <= i; ++j) fact *= j;
                          const Nat gap = fact * (i + 1) - fact - 1;
                          if (gap > UINT64_MAX)
                              throw resource_error("factorial-gap exponent overflows at index " +
                                                   std::to_string(i));
                          return std::vector<std::uint64_t>(l, static_cast<std::uint64_t>(gap));
                      }};
}

inline NodeFamily NodeFamily::power_tower(PrimeSet S, std::uint64_t start) {
    if (S.size() != 1) throw std::invalid_argument("power-tower family needs a single prime");
    return NodeFamily{std::move(S), [start](std::uint64_t i) -> std::optional<std::vector<std::uint64_t>> {
                          const std::uint64_t e = start + i - 1;
                          if (e >= 64) throw resource_error("power-tower exponent overflows");
                          return std::vector<std::uint64_t>{std::uint64_t{1} << e};
                      }};
}

inline NodeFamily NodeFamily::perturbed_tower(PrimeSet S) {
    if (S.size() != 2) throw std::invalid_argument("perturbed-tower family needs two primes");
    return NodeFamily{std::move(S), [](std::uint64_t i) -> std::optional<std::vector<std::uint64_t>> {
                          if (i >= 64) throw resource_error("perturbed-tower exponent overflows");
                          return std::vector<std::uint64_t>{std::uint64_t{1} << i, i};
                      }};
}

inline NodeFamily NodeFamily::explicit_list(PrimeSet S, std::vector<std::vector<std::uint64_t>> exps) {
    return NodeFamily{std::move(S),
                      [exps = std::move(exps)](std::uint64_t i) -> std::optional<std::vector<std::uint64_t>> {
                          if (i < 1 || i > exps.size()) return std::nullopt;
                          return exps[i - 1];
                      }};
}

/// Filler words interleaved after each block (the relaxed construction).
struct FillerSpec {
    std::function<DigitWord(std::uint64_t)> word_at;

    static FillerSpec none(Base base) {
        return FillerSpec{[base](std::uint64_t) { return DigitWord({}, base); }};
    }
    static FillerSpec constant(DigitWord w) {
        return FillerSpec{[w = std::move(w)](std::uint64_t) { return w; }};
    }
};

/// Positive weights w_i multiplying the node in each block.
struct WeightSpec {
    std::function<Nat(std::uint64_t)> weight_at;

    static WeightSpec unit() {
        return WeightSpec{[](std::uint64_t) { return Nat{1}; }};
    }
    static WeightSpec index() {
        return WeightSpec{[](std::uint64_t i) { return Nat{i}; }};
    }
};

/// Metadata for one completed block of a generated stream.
struct StreamBlock {
    Node node;            // m_i
    Nat weight;           // w_i (1 unless weighted)
    Nat block_value;      // w_i * m_i, the integer whose expansion is the block
    std::size_t length = 0;        // t_i = |expand(block_value)|
    std::size_t filler_length = 0; // |a'_i|, 0 when no filler
    Rat filler_ratio;              // (sum of filler lengths before this block) / d_i
};

/// A finite prefix of one of the explicit digit streams.
///
/// `cuts` holds n_i = position right after block i's node digits (before any
/// filler); blocks and cuts cover completed blocks only, while `digits` may
/// end with a partial block that filled the budget.
struct GeneratedStream {
    Base base;
    DigitWord digits;
    std::vector<std::size_t> cuts;
    std::vector<StreamBlock> blocks;
};

namespace detail {

inline GeneratedStream generate_stream(Base base, const NodeFamily& family,
                                       const FillerSpec* fillers, const WeightSpec* weights,
                                       std::size_t digit_budget) {
    GeneratedStream stream{base, DigitWord({}, base), {}, {}};
    std::vector<int> digits;
    std::size_t filler_total = 0;
    for (std::uint64_t i = 1; digits.size() < digit_budget; ++i) {
        auto exps = family.exponents_at(i);
        if (!exps) break;
        StreamBlock block;
        block.node = node_value(*exps, family.primes);
        block.weight = weights ? weights->weight_at(i) : Nat{1};
        if (block.weight < 1) throw std::invalid_argument("block weight must be positive");
        block.block_value = block.weight * block.node.value;
        const DigitWord word = expand(block.block_value, base);
        block.length = word.size();
        const DigitWord filler = fillers ? fillers->word_at(i) : DigitWord({}, base);
        if (!(filler.base() == base)) throw std::invalid_argument("filler base mismatch");
        block.filler_length = filler.size();
        if (block.node.weight > 0)
            block.filler_ratio = Rat(Nat(filler_total), Nat(block.node.weight));
        const bool complete = digits.size() + word.size() <= digit_budget;
        for (int d : word.digits()) {
            if (digits.size() == digit_budget) break;
            digits.push_back(d);
        }
        if (!complete) break;
        stream.cuts.push_back(digits.size());
        stream.blocks.push_back(block);
        filler_total += filler.size();
        for (int d : filler.digits()) {
            if (digits.size() == digit_budget) break;
            digits.push_back(d);
        }
    }
    stream.digits = DigitWord(std::move(digits), base);
    return stream;
}

}  // namespace detail

/// Plain node concatenation: digits of m_1 m_2 m_3 ...
inline GeneratedStream node_concat_stream(Base base, const NodeFamily& family,
                                          std::size_t digit_budget) {
    return detail::generate_stream(base, family, nullptr, nullptr, digit_budget);
}

/// Node concatenation with a filler word inserted after each block.
inline GeneratedStream interleaved_stream(Base base, const NodeFamily& family,
                                          const FillerSpec& fillers, std::size_t digit_budget) {
    return detail::generate_stream(base, family, &fillers, nullptr, digit_budget);
}

/// Blocks carry w_i * m_i instead of m_i.
inline GeneratedStream weighted_stream(Base base, const NodeFamily& family,
                                       const WeightSpec& weights, std::size_t digit_budget) {
    return detail::generate_stream(base, family, nullptr, &weights, digit_budget);
}

/// Exact per-index report on the weight-growth hypothesis
/// d_{i+1} >= (1 + eps) d_i, plus the running suffix infimum of the ratios
/// d_{i+1}/d_i for the relaxed liminf form.
struct GrowthReport {
    std::vector<bool> satisfied;       // index i: d_{i+1} >= (1+eps) d_i
    std::vector<Rat> suffix_infimum;   // min over j >= i of d_{j+1}/d_j
};

inline GrowthReport validate_growth(const std::vector<Nat>& weights, const Rat& eps) {
    if (weights.size() < 2) throw std::invalid_argument("growth check needs at least two weights");
    if (eps <= 0) throw std::invalid_argument("growth threshold must be positive");
    for (const Nat& d : weights)
        if (d == 0) throw std::invalid_argument("growth ratio undefined for zero weight");
    GrowthReport report;
    const Nat num = boost::multiprecision::numerator(eps);
    const Nat den = boost::multiprecision::denominator(eps);
    report.satisfied.reserve(weights.size() - 1);
    for (std::size_t i = 0; i + 1 < weights.size(); ++i)
        report.satisfied.push_back(weights[i + 1] * den >= weights[i] * (den + num));
    report.suffix_infimum.resize(weights.size() - 1);
    Rat inf;
    for (std::size_t i = weights.size() - 1; i-- > 0;) {
        const Rat ratio{weights[i + 1], weights[i]};
        inf = (i + 1 == weights.size() - 1) ? ratio : std::min(inf, ratio);
        report.suffix_infimum[i] = inf;
    }
    return report;
}

/// The computable core of the S-component lower bound: gcd(b^{t_i}, m_i)
/// divides c_{u_{n_i},S}. For i = 1 the witness is the node itself. The gcd
/// is taken against the node, not the weighted block value, since only the
/// node is guaranteed S-smooth.
struct SComponentWitness {
    Nat witness;    // gcd(b^{t_i}, m_i), or m_1 when i = 1
    Nat component;  // c_{u_{n_i},S}
    bool divides = false;
};

inline SComponentWitness scomponent_witness(const GeneratedStream& stream, const PrimeSet& S,
                                            std::size_t i) {
    if (i < 1 || i > stream.blocks.size())
        throw std::out_of_range("block index out of range");
    const StreamBlock& block = stream.blocks[i - 1];
    SComponentWitness out;
    const Nat u = numerator(stream.digits, stream.cuts[i - 1]).value;
    out.component = s_component(u, S).component;
    out.witness = (i == 1) ? block.node.value
                           : gcd_nat(pow_nat(stream.base.value(), block.length), block.node.value);
    out.divides = out.component % out.witness == 0;
    return out;
}

}  // namespace ffword
