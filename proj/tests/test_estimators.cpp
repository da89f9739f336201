/*
 * Copyright 2026 The pbhash Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <limits>
#include <vector>

#include <doctest.h>

#include "pbhash/core.hpp"
#include "pbhash/errors.hpp"
#include "pbhash/estimators.hpp"
#include "pbhash/minhash.hpp"
#include "pbhash/random.hpp"
#include "pbhash/types.hpp"

using namespace pbhash;

namespace {

// Test-side equal-chunk variance, straight from the reduced formula
//   [P_b(1-P_b) + (m-1)(P_2b - P_b^2)] / (m (1-c_b)^2),
// kept independent of the general-scheme implementation.
double equal_chunk_variance(double j, int b, int m, long k) {
    const double c = std::exp2(-b);
    const double pb = c + (1 - c) * j;
    const double c2 = std::exp2(-2 * b);
    const double p2b = c2 + (1 - c2) * j;
    return (pb * (1 - pb) + (m - 1) * (p2b - pb * pb)) /
           (m * (1 - c) * (1 - c)) / static_cast<double>(k);
}

// Long-double direct evaluation of the exact collision probability; an
// independent route used to freeze theorem1 expectations.
long double theorem1_reference(long double j, long double r1, long double r2,
                               int b) {
    const long double n = std::pow(2.0L, static_cast<long double>(b));
    const auto a_coeff = [n](long double r) {
        return r * std::pow(1.0L - r, n - 1.0L) /
               (1.0L - std::pow(1.0L - r, n));
    };
    const long double a1 = a_coeff(r1), a2 = a_coeff(r2);
    const long double c1 = a1 * r2 / (r1 + r2) + a2 * r1 / (r1 + r2);
    const long double c2 = a1 * r1 / (r1 + r2) + a2 * r2 / (r1 + r2);
    return c1 + (1.0L - c2) * j;
}

}  // namespace

TEST_CASE("p_b_theory worked examples") {
    CHECK(p_b_theory(0.0, 1) == 0.5);
    CHECK(p_b_theory(1.0, 1) == 1.0);
    CHECK(p_b_theory(1.0, 13) == 1.0);
    CHECK(p_b_theory(0.1, 1) == doctest::Approx(0.55).epsilon(1e-15));
    CHECK_THROWS_AS(p_b_theory(-0.1, 1), DomainError);
    CHECK_THROWS_AS(p_b_theory(1.1, 1), DomainError);
    CHECK_THROWS_AS(p_b_theory(0.5, 0), ConfigError);
}

TEST_CASE("estimate_j_b worked examples") {
    CHECK(estimate_j_b(0.55, 1) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(estimate_j_b(1.0, 5) == 1.0);
    CHECK(estimate_j_b(0.25, 2) == 0.0);
    // below c_b the unbiased estimate goes negative; no clamping
    CHECK(estimate_j_b(0.2, 2) < 0.0);
}

TEST_CASE("variance_ratio_rb worked examples") {
    CHECK(variance_ratio_rb(0.1, 1) == 11.0);  // exact in double
    CHECK(variance_ratio_rb(1.0, 1) == 2.0);
    CHECK(variance_ratio_rb(0.5, 30) ==
          doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::isinf(variance_ratio_rb(0.0, 4)));
    CHECK_THROWS_AS(variance_ratio_rb(-0.5, 1), DomainError);
}

TEST_CASE("estimate_j_m reductions") {
    // m = 1 reduces to estimate_j_b
    for (const double p_hat : {0.1, 0.3, 0.55, 0.9, 1.0}) {
        const CollisionStats stats{{p_hat}, 100, PartitionScheme({6})};
        CHECK(estimate_j_m(stats) ==
              doctest::Approx(estimate_j_b(p_hat, 6)).epsilon(1e-14));
    }
    // all rates 1 -> 1
    const CollisionStats ones{{1.0, 1.0, 1.0}, 10, PartitionScheme({2, 3, 4})};
    CHECK(estimate_j_m(ones) == doctest::Approx(1.0).epsilon(1e-14));
    // equal chunks with equal rates collapse to the single-chunk form
    const CollisionStats equal{{0.4, 0.4, 0.4, 0.4},
                               10,
                               PartitionScheme({3, 3, 3, 3})};
    CHECK(estimate_j_m(equal) ==
          doctest::Approx(estimate_j_b(0.4, 3)).epsilon(1e-14));
}

TEST_CASE("variance_j_m_theory worked examples") {
    // m=1, b=B=16, J=0.5, k=1; frozen from an independent evaluation of
    // P_B(1-P_B)/(1-c_B)^2 in extended precision.
    CHECK(variance_j_m_theory(0.5, PartitionScheme({16}), 1) ==
          doctest::Approx(0.25000762951094835).epsilon(1e-14));
    // J=1 makes every P term 1
    CHECK(variance_j_m_theory(1.0, PartitionScheme({4, 4, 4}), 1) == 0.0);
    CHECK_THROWS_AS(variance_j_m_theory(0.5, PartitionScheme({4}), 0),
                    ConfigError);
}

TEST_CASE("general variance matches the equal-chunk reduction") {
    RandomStream s(2718, 0, role::generic);
    for (int round = 0; round < 100; ++round) {
        const double j = s.uniform01();
        const int b = 1 + static_cast<int>(s.next_below(12));
        const int m = 1 + static_cast<int>(s.next_below(5));
        if (b * m > 32) continue;
        const auto scheme = PartitionScheme::equal_chunks(b, m);
        const double general = variance_j_m_theory(j, scheme, 7);
        const double reduced = equal_chunk_variance(j, b, m, 7);
        CHECK(general == doctest::Approx(reduced).epsilon(1e-12));
    }
}

TEST_CASE("variance tends to the Bernoulli limit as B grows") {
    const double j = 0.42;
    const double var = variance_j_m_theory(j, PartitionScheme({30}), 1);
    CHECK(std::abs(var - j * (1 - j)) / (j * (1 - j)) < 1e-7);
}

TEST_CASE("variance_ratio_rmb worked examples") {
    // m = 1 reduces to the b-bit ratio formula
    CHECK(variance_ratio_rmb(0.5, 24, 1) ==
          doctest::Approx(1.0 + 1.0 / ((std::exp2(24) - 1.0) * 0.5))
              .epsilon(1e-12));
    CHECK(variance_ratio_rmb(0.5, 24, 1) ==
          doctest::Approx(1.00000011920929).epsilon(1e-12));

    // splitting a 24-bit hash: m=2 sits strictly between m=1 and m=24
    const double r1 = variance_ratio_rmb(0.5, 24, 1);
    const double r2 = variance_ratio_rmb(0.5, 12, 2);
    const double r24 = variance_ratio_rmb(0.5, 1, 24);
    CHECK(r1 < r2);
    CHECK(r2 < r24);

    // B=12, m=12, b=1 against the independent equal-chunk evaluation
    const double expected =
        equal_chunk_variance(0.1, 1, 12, 1) / (0.1 * 0.9);
    CHECK(variance_ratio_rmb(0.1, 1, 12) ==
          doctest::Approx(expected).epsilon(1e-12));

    CHECK(std::isinf(variance_ratio_rmb(0.0, 4, 2)));
    CHECK(std::isinf(variance_ratio_rmb(1.0, 4, 2)));
}

TEST_CASE("lemma_f endpoints, peak, and worked values") {
    for (int b1 : {1, 3, 7})
        for (int b2 : {1, 4, 16}) {
            CHECK(lemma_f(0.0, b1, b2) == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(lemma_f(1.0, b1, b2) == doctest::Approx(0.0).epsilon(1e-12));
        }
    CHECK(lemma_f(0.5, 1, 1) == doctest::Approx(0.0625).epsilon(1e-14));
    CHECK(lemma_f(0.5, 4, 4) ==
          doctest::Approx(0.25 * (15.0 / 16) * (15.0 / 16)).epsilon(1e-14));
    CHECK(lemma_f(0.5, 4, 4) == doctest::Approx(0.2197265625).epsilon(1e-12));
}

TEST_CASE("lemma_f is non-negative and concave on the grid") {
    for (int b1 : {1, 2, 5, 16}) {
        for (int b2 : {1, 3, 8, 16}) {
            const double curvature = -(1 - std::exp2(-b1)) * (1 - std::exp2(-b2));
            for (int step = 0; step <= 100; ++step) {
                const double j = step / 100.0;
                CHECK(lemma_f(j, b1, b2) >= -1e-15);
                if (step >= 1 && step <= 99) {
                    const double second = lemma_f(j + 0.01, b1, b2) -
                                          2 * lemma_f(j, b1, b2) +
                                          lemma_f(j - 0.01, b1, b2);
                    CHECK(second <= 1e-12);
                    CHECK(second / (0.01 * 0.01) ==
                          doctest::Approx(curvature).epsilon(1e-6));
                }
            }
        }
    }
}

TEST_CASE("theorem1_exact_pb recovers the uniform model as r -> 0") {
    for (const double j : {0.0, 0.3, 0.7, 1.0})
        for (const int b : {1, 2, 4, 8})
            CHECK(std::abs(theorem1_exact_pb(j, 1e-9, 1e-9, b) -
                           p_b_theory(j, b)) < 1e-6);
}

TEST_CASE("theorem1_exact_pb worked examples") {
    // symmetric rates at J=1: C_1 == C_2, so P_b == 1
    CHECK(theorem1_exact_pb(1.0, 0.37, 0.37, 3) ==
          doctest::Approx(1.0).epsilon(1e-14));

    // frozen from the extended-precision reference evaluation
    const double expected = 0.49798037182898477;
    CHECK(static_cast<double>(theorem1_reference(0.4L, 0.3L, 0.2L, 2)) ==
          doctest::Approx(expected).epsilon(1e-14));
    CHECK(theorem1_exact_pb(0.4, 0.3, 0.2, 2) ==
          doctest::Approx(expected).epsilon(1e-13));

    // moderate rates across a sweep agree with the reference route
    for (const double r1 : {0.05, 0.3, 0.9})
        for (const double r2 : {0.1, 0.5})
            for (const int b : {1, 2, 6}) {
                const double want = static_cast<double>(theorem1_reference(
                    0.25L, static_cast<long double>(r1),
                    static_cast<long double>(r2), b));
                CHECK(theorem1_exact_pb(0.25, r1, r2, b) ==
                      doctest::Approx(want).epsilon(1e-12));
            }
}

TEST_CASE("theorem1_exact_pb boundary handling") {
    // analytic limit path: A(0) = c_b, so both r = 0 gives p_b_theory
    CHECK(theorem1_exact_pb(0.3, 0.0, 0.5, 2, false) ==
          doctest::Approx(theorem1_exact_pb(0.3, 1e-12, 0.5, 2)).epsilon(1e-9));
    CHECK_THROWS_AS(theorem1_exact_pb(0.3, 0.0, 0.5, 2, true), DomainError);
    CHECK_THROWS_AS(theorem1_exact_pb(0.3, 0.2, 1.0, 2, true), DomainError);
    CHECK_THROWS_AS(theorem1_exact_pb(0.3, -0.1, 0.5, 2), DomainError);
    CHECK_THROWS_AS(theorem1_exact_pb(1.5, 0.1, 0.5, 2), DomainError);
}

TEST_CASE("collision_rate counts per-chunk matches") {
    const PartitionScheme scheme({2, 2});
    const HashSketch a(4, {0x3, 0xF}, "same");
    const auto ca = partition_sketch(a, scheme);
    CHECK(collision_rate(ca, ca).per_chunk_rates ==
          std::vector<double>{1.0, 1.0});

    // k=2: low chunks 3,3 vs 3,0 -> rate 0.5; high chunks 0,3 vs 0,3 -> 1
    const HashSketch b(4, {0x3, 0xC}, "same");
    const auto cb = partition_sketch(b, scheme);
    const auto stats = collision_rate(ca, cb);
    CHECK(stats.per_chunk_rates[0] == 0.5);
    CHECK(stats.per_chunk_rates[1] == 1.0);
    CHECK(stats.num_hashes == 2);

    // rates are always multiples of 1/k
    for (const auto rate : stats.per_chunk_rates) {
        const double scaled = rate * static_cast<double>(stats.num_hashes);
        CHECK(scaled == doctest::Approx(std::round(scaled)).epsilon(1e-12));
    }
}

TEST_CASE("collision_rate rejects incomparable sketches") {
    const PartitionScheme scheme({2, 2});
    const auto a = partition_sketch(HashSketch(4, {0x3}, "s1"), scheme);
    const auto b = partition_sketch(HashSketch(4, {0x3}, "s2"), scheme);
    CHECK_THROWS_AS(collision_rate(a, b), ComparabilityError);

    const auto c = partition_sketch(HashSketch(4, {0x3, 0x1}, "s1"), scheme);
    CHECK_THROWS_AS(collision_rate(a, c), ComparabilityError);

    const auto d = partition_sketch(HashSketch(4, {0x3}, "s1"),
                                    PartitionScheme({4}));
    CHECK_THROWS_AS(collision_rate(a, d), ComparabilityError);
}

TEST_CASE("minhash collision rate at full width matches theory") {
    // D = 2^16 with raw min-positions: the B-bit collision law holds
    // with a pair of known similarity 25/75.
    std::vector<std::uint64_t> pos_a, pos_b;
    for (std::uint64_t p = 0; p < 50; ++p) pos_a.push_back(p * 1301 % 65536);
    for (std::uint64_t p = 25; p < 75; ++p) pos_b.push_back(p * 1301 % 65536);
    std::sort(pos_a.begin(), pos_a.end());
    std::sort(pos_b.begin(), pos_b.end());
    const SparseBinaryVector u(65536, pos_a), v(65536, pos_b);
    REQUIRE(exact_jaccard(u, v) == doctest::Approx(1.0 / 3.0));

    const MinHashConfig cfg{65536, 10000, 91, 16};
    const auto scheme = PartitionScheme({16});
    const auto stats =
        collision_rate(partition_sketch(minhash_sketch(u, cfg), scheme),
                       partition_sketch(minhash_sketch(v, cfg), scheme));
    CHECK(std::abs(stats.per_chunk_rates[0] - 1.0 / 3.0) < 0.019);
}

TEST_CASE("theory report ratio is never below one for a partitioned hash") {
    RandomStream s(1618, 0, role::generic);
    for (int round = 0; round < 200; ++round) {
        const double j = 0.05 + 0.9 * s.uniform01();
        std::vector<int> widths;
        int remaining = 4 + static_cast<int>(s.next_below(28));
        while (remaining > 0) {
            const int b =
                1 + static_cast<int>(s.next_below(std::min(remaining, 8)));
            widths.push_back(b);
            remaining -= b;
        }
        const auto report =
            make_theory_report(j, PartitionScheme(widths), 5);
        CHECK(report.variance_ratio >= 1.0 - 1e-12);
        CHECK(report.per_chunk_pb.size() == widths.size());
    }
}
