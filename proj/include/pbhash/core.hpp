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

#ifndef PBHASH_CORE_HPP
#define PBHASH_CORE_HPP

#include <cstdint>
#include <vector>

#include "pbhash/types.hpp"

namespace pbhash {

// All-ones mask of the given width; bits == 64 is the full word.
constexpr std::uint64_t mask_bits(int bits) noexcept {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

struct SetCounts {
    std::uint64_t intersection;
    std::uint64_t set_union;
};

// Exact |intersection| and |union| of the position sets.
SetCounts jaccard_counts(const SparseBinaryVector& u,
                         const SparseBinaryVector& v);

// |intersection| / |union|. Throws UndefinedSimilarityError when both
// vectors are empty and ConfigError on mismatched universe sizes.
double exact_jaccard(const SparseBinaryVector& u, const SparseBinaryVector& v);

// sum_i min(u_i, v_i) / sum_i max(u_i, v_i).
double exact_weighted_jaccard(const SparseWeightedVector& u,
                              const SparseWeightedVector& v);

// value mod 2^b: the lowest b bits. Requires 1 <= b <= 64.
std::uint64_t lowest_bits(std::uint64_t value, int b);

// Splits value into the scheme's chunks, least-significant chunk first:
// chunk i holds bits [offset_i, offset_i + b_i). Requires
// value < 2^total_bits.
std::vector<std::uint64_t> partition_value(std::uint64_t value,
                                           const PartitionScheme& scheme);

// Inverse of partition_value: shifts chunk i left by offset_i and ORs.
std::uint64_t reassemble_value(const std::vector<std::uint64_t>& chunks,
                               const PartitionScheme& scheme);

// Applies partition_value to each of the k sketch values. Requires
// sketch.bit_width == scheme.total_bits.
ChunkedSketch partition_sketch(const HashSketch& sketch,
                               const PartitionScheme& scheme);

}  // namespace pbhash

#endif  // PBHASH_CORE_HPP
