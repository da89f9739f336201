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
#include <cstdint>
#include <vector>

#include <doctest.h>

#include "pbhash/core.hpp"
#include "pbhash/cws.hpp"
#include "pbhash/errors.hpp"
#include "pbhash/minhash.hpp"
#include "pbhash/random.hpp"

using namespace pbhash;

namespace {

double sketch_collision_fraction(const HashSketch& a, const HashSketch& b) {
    std::size_t matches = 0;
    for (std::size_t j = 0; j < a.num_hashes(); ++j)
        matches += a.values()[j] == b.values()[j];
    return static_cast<double>(matches) / static_cast<double>(a.num_hashes());
}

}  // namespace

TEST_CASE("icws samples are consistent across calls and vectors") {
    const SparseWeightedVector u(8, {{1, 0.5}, {3, 2.0}, {7, 1.25}});
    for (std::uint64_t j = 0; j < 16; ++j) {
        const CoordinateStreams streams(42, j);
        const auto s1 = icws_sample(u, streams);
        const auto s2 = icws_sample(u, streams);
        CHECK(s1 == s2);
    }
}

TEST_CASE("single-coordinate vectors always select that coordinate") {
    const SparseWeightedVector u(10, {{6, 3.7}});
    for (std::uint64_t j = 0; j < 8; ++j) {
        const auto sample = icws_sample(u, CoordinateStreams(9, j));
        CHECK(sample.star_index == 6);
    }
}

TEST_CASE("icws sample collision rate matches the weighted Jaccard") {
    const SparseWeightedVector u(2, {{0, 1.0}, {1, 2.0}});
    const SparseWeightedVector v(2, {{0, 2.0}, {1, 1.0}});
    REQUIRE(exact_weighted_jaccard(u, v) == doctest::Approx(0.5));
    const int k = 10000;
    int matches = 0;
    for (int j = 0; j < k; ++j) {
        const CoordinateStreams streams(1001, static_cast<std::uint64_t>(j));
        matches += icws_sample(u, streams) == icws_sample(v, streams);
    }
    const double frac = static_cast<double>(matches) / k;
    CHECK(std::abs(frac - 0.5) < 3.0 * std::sqrt(0.25 / k));
}

TEST_CASE("cws sketches are deterministic and width-limited") {
    const SparseWeightedVector u(100, {{5, 0.1}, {40, 7.0}, {99, 2.5}});
    const auto s1 = cws_sketch(u, 256, 16, 77);
    const auto s2 = cws_sketch(u, 256, 16, 77);
    CHECK(s1.values() == s2.values());
    CHECK(s1.scheme_id() == s2.scheme_id());
    for (const auto v : s1.values()) CHECK(v < (std::uint64_t{1} << 16));
    CHECK(cws_sketch(u, 256, 16, 78).values() != s1.values());
}

TEST_CASE("B-bit collision rate tracks the weighted Jaccard") {
    const SparseWeightedVector u(6, {{0, 1.0}, {2, 2.0}, {4, 0.5}});
    const SparseWeightedVector v(6, {{0, 2.0}, {2, 1.0}, {5, 0.5}});
    const double jw = exact_weighted_jaccard(u, v);  // (1+1)/(2+2+0.5+0.5)
    REQUIRE(jw == doctest::Approx(0.4));
    const int k = 10000;
    const double frac = sketch_collision_fraction(cws_sketch(u, k, 16, 12),
                                                  cws_sketch(v, k, 16, 12));
    CHECK(std::abs(frac - jw) < 4.0 * std::sqrt(jw * (1 - jw) / k) + 2e-5);
}

TEST_CASE("scaling one side halves the similarity") {
    const SparseWeightedVector u(4, {{0, 1.0}, {1, 3.0}, {3, 0.25}});
    const SparseWeightedVector u2(4, {{0, 2.0}, {1, 6.0}, {3, 0.5}});
    CHECK(exact_weighted_jaccard(u2, u) == doctest::Approx(0.5));
    const int k = 10000;
    const double frac = sketch_collision_fraction(cws_sketch(u, k, 16, 4),
                                                  cws_sketch(u2, k, 16, 4));
    CHECK(std::abs(frac - 0.5) < 4.0 * std::sqrt(0.25 / k) + 2e-5);
}

TEST_CASE("binary weights reproduce the minhash collision law") {
    // same supports as sets; both families must estimate the same J
    const SparseBinaryVector bu(32, {1, 5, 9, 17, 30});
    const SparseBinaryVector bv(32, {1, 6, 9, 17, 29});
    std::vector<WeightedEntry> we_u, we_v;
    for (const auto p : bu.positions()) we_u.push_back({p, 1.0});
    for (const auto p : bv.positions()) we_v.push_back({p, 1.0});
    const SparseWeightedVector wu(32, we_u), wv(32, we_v);
    const double j = exact_jaccard(bu, bv);
    REQUIRE(exact_weighted_jaccard(wu, wv) == doctest::Approx(j));

    const int k = 10000;
    const double p_cws = sketch_collision_fraction(cws_sketch(wu, k, 16, 21),
                                                   cws_sketch(wv, k, 16, 21));
    const MinHashConfig cfg{32, k, 33, 5};
    const double p_min = sketch_collision_fraction(minhash_sketch(bu, cfg),
                                                   minhash_sketch(bv, cfg));

    // two-proportion z-test at alpha = 0.01 (|z| < 2.576)
    const double pool = (p_cws + p_min) / 2.0;
    const double se = std::sqrt(2.0 * pool * (1.0 - pool) / k);
    CHECK(std::abs(p_cws - p_min) / se < 2.576);
}

TEST_CASE("cws error paths") {
    const SparseWeightedVector empty(4, {});
    CHECK_THROWS_AS(icws_sample(empty, CoordinateStreams(0, 0)),
                    UndefinedHashError);
    CHECK_THROWS_AS(cws_sketch(empty, 4, 8, 0), UndefinedHashError);

    const SparseWeightedVector tiny(4, {{0, 1e-301}});
    CHECK_THROWS_AS(icws_sample(tiny, CoordinateStreams(0, 0)), DomainError);

    const SparseWeightedVector u(4, {{0, 1.0}});
    CHECK_THROWS_AS(cws_sketch(u, 0, 8, 0), ConfigError);
    CHECK_THROWS_AS(cws_sketch(u, 4, 65, 0), ConfigError);
}
