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

#ifndef PBHASH_MINHASH_HPP
#define PBHASH_MINHASH_HPP

#include <cstdint>

#include "pbhash/types.hpp"

namespace pbhash {

// Largest universe for which permutations are materialized.
inline constexpr std::uint64_t kMaxMinHashUniverse = std::uint64_t{1} << 20;

struct MinHashConfig {
    std::uint64_t universe_size;
    int num_hashes;
    std::uint64_t master_seed;
    int output_bits;
};

// Exact fraction in lowest terms.
struct Rational {
    std::uint64_t numerator;
    std::uint64_t denominator;

    bool operator==(const Rational& other) const noexcept {
        return numerator == other.numerator &&
               denominator == other.denominator;
    }
};

// Permutation MinHash: value j is the minimum of pi_j over the vector's
// positions, where pi_j is a fresh uniform permutation of [0, D) per
// hash index. When D == 2^B the raw min-position is emitted; otherwise
// it is re-hashed into B bits through the keyed avalanche mixer (fresh
// keys per hash index), which realizes the uniform collision model for
// the truncated and partitioned values.
HashSketch minhash_sketch(const SparseBinaryVector& u,
                          const MinHashConfig& cfg);

// Exact collision probability of the permutation min-position, obtained
// by enumerating all D! permutations. Limited to D <= 8.
Rational brute_force_collision_prob(const SparseBinaryVector& u,
                                    const SparseBinaryVector& v);

}  // namespace pbhash

#endif  // PBHASH_MINHASH_HPP
