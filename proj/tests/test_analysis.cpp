#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ffword/analysis.hpp"
#include "ffword/criteria.hpp"

using namespace ffword;

TEST_CASE("periodic words unroll preperiod then cycle") {
    const Base b10{10};
    CHECK(periodic_word({DigitWord({}, b10), DigitWord({1}, b10)}, 5).digits() ==
          std::vector<int>{1, 1, 1, 1, 1});
    CHECK(periodic_word({DigitWord({0, 0}, b10), DigitWord({7}, b10)}, 4).digits() ==
          std::vector<int>{0, 0, 7, 7});
    CHECK(periodic_word({DigitWord({1, 2}, b10), DigitWord({0, 3}, b10)}, 6).digits() ==
          std::vector<int>{1, 2, 0, 3, 0, 3});
    CHECK_THROWS_AS(PeriodicWordSpec(DigitWord({1}, b10), DigitWord({}, b10)),
                    std::invalid_argument);
}

TEST_CASE("q factors match their closed forms") {
    CHECK(q_factor(Base{2}, 2, 3).value == 17);
    CHECK(q_factor(Base{3}, 2, 1).value == 4);
    CHECK(q_factor(Base{2}, 2, 1).value == 3);
    CHECK_THROWS_AS(q_factor(Base{2}, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(q_factor(Base{2}, 2, 0), std::invalid_argument);
}

TEST_CASE("running q products telescope to repunits") {
    CHECK(verify_q_product(Base{3}, 2, 2));
    CHECK(verify_q_product(Base{2}, 2, 4));
    CHECK(q_factor(Base{2}, 2, 4).value * q_factor(Base{2}, 2, 3).value *
              q_factor(Base{2}, 2, 2).value * q_factor(Base{2}, 2, 1).value ==
          pow_nat(2, 16) - 1);
    for (int b : {2, 3, 5, 10})
        for (std::uint64_t s : {2, 3, 5})
            for (std::uint64_t k = 1; k <= 5; ++k) {
                REQUIRE(verify_q_product(Base{b}, s, k));
                if (k >= 2) {
                    const Nat g = q_coprimality(Base{b}, s, k);
                    REQUIRE(Nat{s} % g == 0);
                    // telescoping ratio of successive repunit cuts
                    Nat cut{1};
                    for (std::uint64_t j = 0; j < k; ++j) cut *= s;
                    REQUIRE(repunit(Base{b}, static_cast<std::uint64_t>(cut)) %
                                repunit(Base{b}, static_cast<std::uint64_t>(cut / s)) ==
                            0);
                    REQUIRE(repunit(Base{b}, static_cast<std::uint64_t>(cut)) /
                                repunit(Base{b}, static_cast<std::uint64_t>(cut / s)) ==
                            q_factor(Base{b}, s, k).value);
                }
            }
    CHECK(q_coprimality(Base{2}, 2, 2) == 1);
    CHECK(q_coprimality(Base{2}, 2, 3) == 1);
    CHECK(q_coprimality(Base{2}, 2, 4) == 1);
    CHECK(q_coprimality(Base{3}, 2, 2) == 2);
}

TEST_CASE("smooth-word counts and their polynomial bounds") {
    const auto c1 = count_smooth_words(PrimeSet({2}), Base{6}, 2);
    CHECK(c1.exact == 6);
    CHECK(c1.paper_bound < 6.0);      // the bare bound undercounts here
    CHECK(c1.corrected_bound > 6.0);  // the off-by-one-safe bound holds

    CHECK(count_smooth_words(PrimeSet({2}), Base{2}, 3).exact == 3);
    CHECK(count_smooth_words(PrimeSet({2, 5}), Base{10}, 2).exact == 14);

    for (const auto& raw : std::vector<std::vector<std::uint64_t>>{{2}, {2, 5}})
        for (int b : {6, 10})
            for (std::uint64_t k = 1; k <= 12; ++k) {
                const PrimeSet S{std::vector<std::uint64_t>(raw)};
                const auto c = count_smooth_words(S, Base{b}, k);
                REQUIRE(static_cast<double>(c.exact) <= c.corrected_bound);
            }
}

TEST_CASE("fractional log parts follow the closed form for prime powers") {
    std::vector<Nat> values;
    Nat v{1};
    for (int r = 1; r <= 50; ++r) {
        v *= 2;
        values.push_back(v);
    }
    const auto parts = fractional_log_parts(values, Base{6});
    const double step = std::log(2.0) / std::log(6.0);
    for (int r = 1; r <= 50; ++r) {
        const double expected = r * step - std::floor(r * step);
        REQUIRE(parts[r - 1] == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK_THROWS_AS(fractional_log_parts({Nat{1}}, Base{6}), std::invalid_argument);
}

TEST_CASE("star discrepancy of simple samples") {
    CHECK(star_discrepancy({0.5}) == doctest::Approx(0.5));
    CHECK(star_discrepancy({0.25, 0.75}) == doctest::Approx(0.25));
    CHECK_THROWS_AS(star_discrepancy({}), std::invalid_argument);
    CHECK_THROWS_AS(star_discrepancy({1.5}), std::invalid_argument);

    // equidistribution: 100 rotation points spread better than 10
    std::vector<Nat> values;
    Nat v{1};
    for (int r = 1; r <= 100; ++r) {
        v *= 2;
        values.push_back(v);
    }
    const auto parts = fractional_log_parts(values, Base{6});
    const double d10 = star_discrepancy(std::vector<double>(parts.begin(), parts.begin() + 10));
    const double d100 = star_discrepancy(parts);
    CHECK(d100 < d10);
}

TEST_CASE("extendable witness finds the first covering interval") {
    std::vector<Nat> stream;
    Nat v{1};
    for (int r = 0; r <= 40; ++r) {
        stream.push_back(v);
        v *= 2;
    }
    const auto w1 = extendable_witness(stream, Base{6}, Nat{1}, 10);
    REQUIRE(w1.has_value());
    CHECK(w1->first == 1);
    CHECK(w1->second == 8);
    const auto w5 = extendable_witness(stream, Base{6}, Nat{5}, 10);
    REQUIRE(w5.has_value());
    CHECK(w5->first == 1);
    CHECK(w5->second == 32);
    // strict extension required even when m itself is in the stream
    const auto w8 = extendable_witness(stream, Base{6}, Nat{8}, 10);
    REQUIRE(w8.has_value());
    CHECK(w8->first >= 1);
    CHECK(w8->second > 8);
    CHECK_FALSE(extendable_witness({Nat{3}}, Base{6}, Nat{7}, 3).has_value());
}

TEST_CASE("periodic coefficient triple satisfies its defining identity") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const Base base{2 + static_cast<int>(rng() % 9)};
        std::uniform_int_distribution<int> digit(0, base.value() - 1);
        std::vector<int> pre(rng() % 4), per(1 + rng() % 4);
        for (int& d : pre) d = digit(rng);
        for (int& d : per) d = digit(rng);
        const PeriodicWordSpec spec{DigitWord(pre, base), DigitWord(per, base)};
        const auto [A, B, C] = periodic_sunit_coefficients(spec);
        for (std::uint64_t j = 0; j <= 4; ++j) {
            const std::size_t cut = pre.size() + j * per.size();
            const Nat u = cut == 0 ? Nat{0}
                                   : numerator(periodic_word(spec, cut), cut).value;
            REQUIRE(A * pow_nat(base.value(), j * per.size()) - B == C * u);
        }
    }
}

TEST_CASE("factorial index grows along repunit cuts via the q factors") {
    const DigitWord ones(std::vector<int>(16, 1), Base{2});
    std::size_t last = 0;
    for (std::size_t j = 1; j <= 4; ++j) {
        const auto r = factorial_index(ones, {std::size_t{1} << j});
        REQUIRE(r.exact);
        REQUIRE(r.lower_bound > 0);
        const auto cumulative = [&] {
            std::vector<std::size_t> cuts;
            for (std::size_t i = 1; i <= j; ++i) cuts.push_back(std::size_t{1} << i);
            return factorial_index(ones, cuts);
        }();
        REQUIRE(cumulative.lower_bound > last);
        last = cumulative.lower_bound;
    }
    CHECK(last == 4);
}
