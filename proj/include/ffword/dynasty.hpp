#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ffword/radix.hpp"
#include "ffword/smooth.hpp"

namespace ffword {

/// n -> b*n + a: append one digit to the expansion.
inline Nat append_digit(const Nat& n, int a, Base base) {
    if (a < 0 || a >= base.value())
        throw std::invalid_argument("appended digit out of range for base");
    return n * base.value() + a;
}

/// n -> floor(n/b): drop the last digit; inverse of append_digit on its image.
inline Nat drop_digit(const Nat& n, Base base) { return n / base.value(); }

namespace detail {

inline Node node_of(const Nat& value, const PrimeSet& S) {
    SComponentResult c = s_component(value, S);
    std::uint64_t weight = 0;
    for (std::uint64_t r : c.exponents) weight += r;
    return Node{value, std::move(c.exponents), weight};
}

}  // namespace detail

/// The proper prefixes of m's expansion that are themselves nodes,
/// ascending by prefix length.
inline std::vector<Node> ancestors(const Nat& m, const PrimeSet& S, Base base) {
    if (m < 1) throw std::invalid_argument("ancestors requires m >= 1");
    const DigitWord word = expand(m, base);
    std::vector<Node> out;
    for (std::size_t k = 1; k < word.size(); ++k) {
        const Nat u = numerator(word, k).value;
        if (u >= 1 && is_node(u, S)) out.push_back(detail::node_of(u, S));
    }
    return out;
}

/// The longest proper prefix of m's expansion that is a node.
inline std::optional<Node> parent(const Nat& m, const PrimeSet& S, Base base) {
    std::vector<Node> anc = ancestors(m, S, base);
    if (anc.empty()) return std::nullopt;
    return anc.back();
}

namespace detail {

/// Children of the word with numerator v and length `word_len`, restricted to
/// extensions by exactly `extra` digits. A candidate is a child when no
/// shorter strict extension of the word is itself a node.
inline std::vector<Node> children_at_depth(const Nat& v, const PrimeSet& S, Base base,
                                           std::size_t extra) {
    const Nat shift = pow_nat(base.value(), extra);
    const Nat lo = v * shift;
    const Nat hi = lo + shift - 1;
    std::vector<Node> out;
    for (Node& n : enumerate_nodes(S, lo, hi)) {
        bool intermediate = false;
        Nat prefix = n.value;
        for (std::size_t j = 1; j < extra; ++j) {
            prefix /= base.value();
            if (is_node(prefix, S)) {
                intermediate = true;
                break;
            }
        }
        if (!intermediate) out.push_back(std::move(n));
    }
    return out;
}

}  // namespace detail

/// All children of a word-origin within the extension budget, ascending.
///
/// Successive depth intervals [v b^i, v b^i + b^i - 1] are value-disjoint and
/// ascending for v >= 1, so depth order is value order.
inline std::vector<Node> children(const DigitWord& origin, const PrimeSet& S, Base base,
                                  std::size_t max_extra_digits) {
    const Nat v = origin.empty() ? Nat{0} : numerator(origin, origin.size()).value;
    if (v < 1) throw std::invalid_argument("children requires a word with nonzero numerator");
    std::vector<Node> out;
    for (std::size_t i = 1; i <= max_extra_digits; ++i) {
        std::vector<Node> level = detail::children_at_depth(v, S, base, i);
        out.insert(out.end(), std::make_move_iterator(level.begin()),
                   std::make_move_iterator(level.end()));
    }
    return out;
}

inline std::vector<Node> children(const Nat& origin, const PrimeSet& S, Base base,
                                  std::size_t max_extra_digits) {
    return children(expand(origin, base), S, base, max_extra_digits);
}

/// The k smallest children within the digit budget (fewer if it runs out).
inline std::vector<Node> k_least_children(const DigitWord& origin, const PrimeSet& S, Base base,
                                          std::size_t k, std::size_t max_extra_digits) {
    if (k < 1) throw std::invalid_argument("k_least_children requires k >= 1");
    const Nat v = origin.empty() ? Nat{0} : numerator(origin, origin.size()).value;
    if (v < 1) throw std::invalid_argument("k_least_children requires a nonzero word");
    std::vector<Node> out;
    for (std::size_t i = 1; i <= max_extra_digits && out.size() < k; ++i) {
        std::vector<Node> level = detail::children_at_depth(v, S, base, i);
        out.insert(out.end(), std::make_move_iterator(level.begin()),
                   std::make_move_iterator(level.end()));
    }
    if (out.size() > k) out.resize(k);
    return out;
}

/// A maximal chain: every prefix-node of the target, then the target itself.
struct ChainRecord {
    std::vector<Node> members;  // ascending; consecutive members are parent/child
    DigitWord word;             // expansion of the final member
    std::size_t length = 0;
};

/// The maximal chain ending at each target (iterated parent, reversed).
inline std::vector<ChainRecord> chains(const PrimeSet& S, Base base,
                                       const std::vector<Nat>& targets) {
    if (targets.empty()) throw std::invalid_argument("chains requires at least one target");
    std::vector<ChainRecord> out;
    out.reserve(targets.size());
    for (const Nat& t : targets) {
        ChainRecord rec{ancestors(t, S, base), expand(t, base), 0};
        rec.members.push_back(detail::node_of(t, S));
        rec.length = rec.members.size();
        out.push_back(std::move(rec));
    }
    return out;
}

/// The least-extension iteration: starting from a digit prefix, repeatedly
/// replace the current word by the expansion of its least child.
struct LeastFFResult {
    DigitWord prefix;         // the seed word a_0
    std::vector<Node> nodes;  // m_1, m_2, ...
    DigitWord digits;         // a_0 followed by all appended digits
    std::vector<std::size_t> cuts;  // digit length after each step
};

inline LeastFFResult least_ff(const DigitWord& a0, const PrimeSet& S, Base base,
                              std::size_t iterations, std::size_t per_step_digit_cap = 64) {
    Nat v = a0.empty() ? Nat{0} : numerator(a0, a0.size()).value;
    if (v < 1) throw std::invalid_argument("least_ff requires a nonzero seed word");
    if (S.united(PrimeSet::factors_of(base.value())).size() < 2)
        throw std::invalid_argument("least_ff needs at least two primes across S and the base");
    LeastFFResult result{a0, {}, a0, {}};
    std::vector<int> digits = a0.digits();
    for (std::size_t step = 0; step < iterations; ++step) {
        std::optional<Node> child;
        std::size_t depth = 0;
        for (std::size_t i = 1; i <= per_step_digit_cap; ++i) {
            std::vector<Node> level = detail::children_at_depth(v, S, base, i);
            if (!level.empty()) {
                child = std::move(level.front());
                depth = i;
                break;
            }
        }
        if (!child)
            throw stall_error(DigitWord(digits, base).render(), per_step_digit_cap);
        const DigitWord word = expand(child->value, base);
        for (std::size_t j = word.size() - depth; j < word.size(); ++j)
            digits.push_back(word[j]);
        result.cuts.push_back(digits.size());
        v = child->value;
        result.nodes.push_back(std::move(*child));
    }
    result.digits = DigitWord(std::move(digits), base);
    return result;
}

}  // namespace ffword
