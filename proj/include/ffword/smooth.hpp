#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ffword/numeric.hpp"

namespace ffword {

namespace detail {

inline bool is_small_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace detail

/// A non-empty, strictly increasing set of primes S = {s_1 < ... < s_l}.
///
/// Primality is verified deterministically at construction; inputs here are
/// always desk-scale.
class PrimeSet {
public:
    explicit PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
        if (primes_.empty()) throw std::invalid_argument("prime set must be non-empty");
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            if (!detail::is_small_prime(primes_[i]))
                throw std::invalid_argument(std::to_string(primes_[i]) + " is not prime");
            if (i > 0 && primes_[i] <= primes_[i - 1])
                throw std::invalid_argument("primes must be strictly increasing");
        }
    }

    /// F_b: the prime support of an integer b >= 2.
    static PrimeSet factors_of(std::uint64_t b) {
        if (b < 2) throw std::invalid_argument("prime support requires b >= 2");
        std::vector<std::uint64_t> primes;
        for (std::uint64_t p = 2; p * p <= b; ++p) {
            if (b % p == 0) {
                primes.push_back(p);
                while (b % p == 0) b /= p;
            }
        }
        if (b > 1) primes.push_back(b);
        return PrimeSet(std::move(primes));
    }

    const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
    std::size_t size() const noexcept { return primes_.size(); }
    std::uint64_t smallest() const noexcept { return primes_.front(); }

    bool contains(std::uint64_t p) const {
        return std::binary_search(primes_.begin(), primes_.end(), p);
    }

    bool operator==(const PrimeSet& other) const { return primes_ == other.primes_; }

    /// Union with another prime set.
    PrimeSet united(const PrimeSet& other) const {
        std::vector<std::uint64_t> merged;
        std::set_union(primes_.begin(), primes_.end(), other.primes_.begin(),
                       other.primes_.end(), std::back_inserter(merged));
        return PrimeSet(std::move(merged));
    }

private:
    std::vector<std::uint64_t> primes_;
};

/// An S-smooth integer m = prod s_j^{r_j} with its exponent vector and
/// weight d = sum r_j.
struct Node {
    Nat value;
    std::vector<std::uint64_t> exponents;
    std::uint64_t weight = 0;

    bool operator==(const Node& other) const { return value == other.value; }
};

/// Split of n into its maximal S-smooth divisor and the coprime rest.
struct SComponentResult {
    Nat component;
    std::vector<std::uint64_t> exponents;
    Nat cofactor;
};

/// c_{n,S}: the largest divisor of n composed of primes in S.
inline SComponentResult s_component(const Nat& n, const PrimeSet& S) {
    if (n < 1) throw std::invalid_argument("s_component requires n >= 1");
    SComponentResult result{Nat{1}, std::vector<std::uint64_t>(S.size(), 0), n};
    for (std::size_t j = 0; j < S.size(); ++j) {
        const std::uint64_t p = S.primes()[j];
        while (result.cofactor % p == 0) {
            result.cofactor /= p;
            result.component *= p;
            ++result.exponents[j];
        }
    }
    return result;
}

/// Membership in M_S (1 is a node via the empty product).
inline bool is_node(const Nat& n, const PrimeSet& S) {
    if (n < 1) throw std::invalid_argument("is_node requires n >= 1");
    return s_component(n, S).cofactor == 1;
}

/// Node from an exponent vector aligned with S.
inline Node node_value(const std::vector<std::uint64_t>& exponents, const PrimeSet& S) {
    if (exponents.size() != S.size())
        throw std::invalid_argument("exponent vector length must match prime set");
    Node node{Nat{1}, exponents, 0};
    for (std::size_t j = 0; j < S.size(); ++j) {
        node.value *= pow_nat(S.primes()[j], exponents[j]);
        node.weight += exponents[j];
    }
    return node;
}

namespace detail {

template <typename Visit>
void walk_nodes(const PrimeSet& S, const Nat& lo, const Nat& hi, std::size_t j,
                Nat product, std::vector<std::uint64_t>& exps, Visit&& visit) {
    if (j == S.size()) {
        if (product >= lo) visit(product, exps);
        return;
    }
    // abandon the branch once the partial product exceeds hi
    while (true) {
        walk_nodes(S, lo, hi, j + 1, product, exps, visit);
        product *= S.primes()[j];
        if (product > hi) break;
        ++exps[j];
    }
    exps[j] = 0;
}

}  // namespace detail

/// Exactly M_S intersected with [lo, hi], strictly ascending.
inline std::vector<Node> enumerate_nodes(const PrimeSet& S, const Nat& lo, const Nat& hi) {
    if (lo < 1) throw std::invalid_argument("enumerate_nodes requires lo >= 1");
    std::vector<Node> nodes;
    if (lo > hi) return nodes;
    std::vector<std::uint64_t> exps(S.size(), 0);
    detail::walk_nodes(S, lo, hi, 0, Nat{1}, exps,
                       [&](const Nat& value, const std::vector<std::uint64_t>& e) {
                           std::uint64_t weight = 0;
                           for (std::uint64_t r : e) weight += r;
                           nodes.push_back(Node{value, e, weight});
                       });
    std::sort(nodes.begin(), nodes.end(),
              [](const Node& a, const Node& b) { return a.value < b.value; });
    return nodes;
}

/// Count of M_S in [lo, hi] without materializing the list.
inline Nat count_nodes(const PrimeSet& S, const Nat& lo, const Nat& hi) {
    if (lo < 1) throw std::invalid_argument("count_nodes requires lo >= 1");
    Nat count{0};
    if (lo > hi) return count;
    std::vector<std::uint64_t> exps(S.size(), 0);
    detail::walk_nodes(S, lo, hi, 0, Nat{1}, exps,
                       [&](const Nat&, const std::vector<std::uint64_t>&) { ++count; });
    return count;
}

/// Prime-power factors found for n, plus whatever residual the effort budget
/// left unfactored (residual 1 means the factorization is complete).
struct Factorization {
    std::map<Nat, std::uint64_t> factors;
    Nat residual;
    bool complete = false;
};

namespace detail {

inline Nat mulmod(const Nat& a, const Nat& b, const Nat& m) { return a * b % m; }

inline Nat powmod(Nat base, Nat exp, const Nat& m) {
    Nat result{1};
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = result * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return result;
}

inline bool miller_rabin(const Nat& n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    Nat d = n - 1;
    std::uint64_t r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Nat x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (std::uint64_t i = 0; i + 1 < r; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

/// Brent-cycle Pollard rho; deterministic parameter schedule, bounded steps.
inline std::optional<Nat> pollard_rho(const Nat& n, std::uint64_t max_steps) {
    if (n % 2 == 0) return Nat{2};
    for (std::uint64_t c = 1; c <= 16; ++c) {
        Nat x{2}, y{2}, d{1};
        std::uint64_t steps = 0;
        while (d == 1 && steps < max_steps) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd_nat(x > y ? x - y : y - x, n);
            ++steps;
        }
        if (d != 1 && d != n) return d;
        if (steps < max_steps) continue;  // cycle without factor: try next c
        return std::nullopt;              // budget spent
    }
    return std::nullopt;
}

}  // namespace detail

/// Trial division up to `trial_bound`, then budgeted rho on what remains.
inline Factorization factorize(const Nat& n, std::uint64_t effort_budget = 1u << 18,
                               std::uint64_t trial_bound = 100000) {
    if (n < 2) throw std::invalid_argument("factorize requires n >= 2");
    Factorization result;
    result.residual = n;
    auto record = [&](const Nat& p, std::uint64_t count) { result.factors[p] += count; };
    for (std::uint64_t p = 2; p <= trial_bound && Nat(p) * p <= result.residual; p += (p == 2 ? 1 : 2)) {
        std::uint64_t count = 0;
        while (result.residual % p == 0) {
            result.residual /= p;
            ++count;
        }
        if (count > 0) record(p, count);
    }
    if (result.residual > 1 && result.residual <= Nat(trial_bound) * trial_bound) {
        // below the trial square: residual is prime
        record(result.residual, 1);
        result.residual = 1;
    }
    std::vector<Nat> pending;
    if (result.residual > 1) pending.push_back(result.residual);
    result.residual = 1;
    while (!pending.empty()) {
        Nat m = pending.back();
        pending.pop_back();
        if (detail::miller_rabin(m)) {
            std::uint64_t count = 1;
            record(m, count);
            continue;
        }
        auto d = detail::pollard_rho(m, effort_budget);
        if (!d) {
            result.residual *= m;
            continue;
        }
        pending.push_back(*d);
        pending.push_back(m / *d);
    }
    result.complete = result.residual == 1;
    return result;
}

}  // namespace ffword
