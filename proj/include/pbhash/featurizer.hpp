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

#ifndef PBHASH_FEATURIZER_HPP
#define PBHASH_FEATURIZER_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pbhash/types.hpp"

namespace pbhash {

// One-hot expansion of a chunked sketch: exactly k*m active indices out
// of one_hot_dims(scheme, k) dimensions.
struct SparseFeatures {
    std::uint64_t dimension;
    std::vector<std::uint64_t> indices;  // strictly ascending, 0-based
};

// Total one-hot dimension: k * sum_i 2^{b_i}. Raises ResourceLimitError
// when the result would exceed 2^63.
std::uint64_t one_hot_dims(const PartitionScheme& scheme, std::int64_t k);

// Block layout is hash-major, chunk-minor: the active index for hash j,
// chunk i is j * sum_i 2^{b_i} + (2^{b_1} + ... + 2^{b_{i-1}}) + value.
SparseFeatures featurize(const ChunkedSketch& sketch);

// Writes one line per example in sparse `label idx:1 idx:1 ...` text
// form with 1-based ascending indices. All sketches must share the
// scheme and hash count.
void emit_dataset(
    const std::vector<std::pair<std::string, ChunkedSketch>>& examples,
    const std::string& path);

}  // namespace pbhash

#endif  // PBHASH_FEATURIZER_HPP
