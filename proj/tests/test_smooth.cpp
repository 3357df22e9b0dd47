#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffword/smooth.hpp"

using namespace ffword;

namespace {

// Independent smoothness oracle: divide out S by brute force.
bool oracle_is_smooth(std::uint64_t n, const std::vector<std::uint64_t>& S) {
    for (std::uint64_t p : S)
        while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace

TEST_CASE("prime set construction") {
    CHECK_THROWS_AS(PrimeSet({}), std::invalid_argument);
    CHECK_THROWS_AS(PrimeSet({4}), std::invalid_argument);
    CHECK_THROWS_AS(PrimeSet({5, 3}), std::invalid_argument);
    CHECK_THROWS_AS(PrimeSet({3, 3}), std::invalid_argument);
    CHECK(PrimeSet::factors_of(12).primes() == std::vector<std::uint64_t>{2, 3});
    CHECK(PrimeSet::factors_of(10).primes() == std::vector<std::uint64_t>{2, 5});
    CHECK(PrimeSet::factors_of(7).primes() == std::vector<std::uint64_t>{7});
    CHECK(PrimeSet({2}).united(PrimeSet({2, 3})).primes() == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("s_component splits off the largest smooth divisor") {
    const auto r = s_component(Nat{1500}, PrimeSet({2, 5}));
    CHECK(r.component == 500);
    CHECK(r.exponents == std::vector<std::uint64_t>{2, 3});
    CHECK(r.cofactor == 3);

    const auto coprime = s_component(Nat{7}, PrimeSet({2, 5}));
    CHECK(coprime.component == 1);
    CHECK(coprime.cofactor == 7);

    const auto full = s_component(Nat{875000}, PrimeSet({2, 5, 7, 11}));
    CHECK(full.component == 875000);
    CHECK(full.exponents == std::vector<std::uint64_t>{3, 6, 1, 0});

    CHECK_THROWS_AS(s_component(Nat{0}, PrimeSet({2})), std::invalid_argument);
}

TEST_CASE("is_node matches the definition") {
    const PrimeSet S({2, 5, 7, 11});
    CHECK(is_node(Nat{44}, S));
    CHECK(is_node(Nat{1}, S));
    CHECK_FALSE(is_node(Nat{13}, S));
    CHECK_THROWS_AS(is_node(Nat{0}, S), std::invalid_argument);
}

TEST_CASE("node_value composes exponent vectors") {
    const PrimeSet S({2, 5, 7, 11});
    const Node n = node_value({2, 0, 0, 1}, S);
    CHECK(n.value == 44);
    CHECK(n.weight == 3);
    CHECK(node_value({0, 0, 0, 0}, S).value == 1);
    CHECK(node_value({12, 2, 1, 1}, S).value == 7884800);
    CHECK_THROWS_AS(node_value({1}, S), std::invalid_argument);
}

TEST_CASE("enumerate_nodes lists exact ascending intervals") {
    auto values = [](const std::vector<Node>& nodes) {
        std::vector<Nat> v;
        for (const Node& n : nodes) v.push_back(n.value);
        return v;
    };
    CHECK(values(enumerate_nodes(PrimeSet({2}), Nat{1}, Nat{100})) ==
          std::vector<Nat>{1, 2, 4, 8, 16, 32, 64});
    CHECK(values(enumerate_nodes(PrimeSet({2, 5, 7, 11}), Nat{12}, Nat{14})) ==
          std::vector<Nat>{14});
    CHECK(values(enumerate_nodes(PrimeSet({3}), Nat{10}, Nat{30})) == std::vector<Nat>{27});
    CHECK(enumerate_nodes(PrimeSet({2}), Nat{50}, Nat{10}).empty());
    CHECK_THROWS_AS(enumerate_nodes(PrimeSet({2}), Nat{0}, Nat{10}), std::invalid_argument);
}

TEST_CASE("node arithmetic agrees with the brute-force oracle up to 1e5") {
    const std::vector<std::vector<std::uint64_t>> sets = {{2}, {2, 5}, {2, 5, 7, 11}, {2, 3}};
    for (const auto& raw : sets) {
        const PrimeSet S{std::vector<std::uint64_t>(raw)};
        std::vector<Nat> expected;
        for (std::uint64_t n = 1; n <= 100000; ++n) {
            const bool smooth = oracle_is_smooth(n, raw);
            REQUIRE(is_node(Nat{n}, S) == smooth);
            if (smooth) expected.push_back(Nat{n});
        }
        const auto nodes = enumerate_nodes(S, Nat{1}, Nat{100000});
        REQUIRE(nodes.size() == expected.size());
        REQUIRE(count_nodes(S, Nat{1}, Nat{100000}) == expected.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            REQUIRE(nodes[i].value == expected[i]);
            // exponent read-back reproduces the value
            REQUIRE(node_value(nodes[i].exponents, S).value == nodes[i].value);
        }
    }
}

TEST_CASE("s_component is multiplicative on coprime parts") {
    const PrimeSet S({2, 5});
    for (std::uint64_t a = 1; a <= 300; ++a)
        for (std::uint64_t b = a + 1; b <= 300; b += 7) {
            if (gcd_nat(Nat{a}, Nat{b}) != 1) continue;
            REQUIRE(s_component(Nat{a} * b, S).component ==
                    s_component(Nat{a}, S).component * s_component(Nat{b}, S).component);
        }
}

TEST_CASE("factorize reports complete factorizations") {
    auto f = factorize(Nat{255});
    CHECK(f.complete);
    CHECK(f.factors == std::map<Nat, std::uint64_t>{{Nat{3}, 1}, {Nat{5}, 1}, {Nat{17}, 1}});

    auto p2 = factorize(pow_nat(2, 10));
    CHECK(p2.complete);
    CHECK(p2.factors == std::map<Nat, std::uint64_t>{{Nat{2}, 10}});

    // 110001 = 10^5 + 10^4 + 1, the cofactor appearing in the base-10
    // factorial-position witness
    auto big = factorize(Nat{110001});
    CHECK(big.complete);
    CHECK(big.factors ==
          std::map<Nat, std::uint64_t>{{Nat{3}, 1}, {Nat{37}, 1}, {Nat{991}, 1}});

    CHECK_THROWS_AS(factorize(Nat{1}), std::invalid_argument);
}

TEST_CASE("factorize handles large semiprimes and reconstructs the input") {
    // product of two 10-digit primes: beyond trial division, rho territory
    const Nat p{"2147483647"};
    const Nat q{"2305843009213693951"};
    auto f = factorize(p * q, 1u << 20);
    Nat rebuilt = f.residual;
    for (const auto& [prime, e] : f.factors) rebuilt *= pow_nat(prime, e);
    CHECK(rebuilt == p * q);
    if (f.complete) {
        CHECK(f.factors.count(p) == 1);
        CHECK(f.factors.count(q) == 1);
    }
}
