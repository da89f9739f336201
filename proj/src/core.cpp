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

#include "pbhash/core.hpp"

#include <algorithm>

#include "pbhash/errors.hpp"

namespace pbhash {

SetCounts jaccard_counts(const SparseBinaryVector& u,
                         const SparseBinaryVector& v) {
    if (u.universe_size() != v.universe_size())
        throw ConfigError("jaccard_counts: universe sizes differ");
    const auto& a = u.positions();
    const auto& b = v.positions();
    std::uint64_t inter = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++inter;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return {inter, a.size() + b.size() - inter};
}

double exact_jaccard(const SparseBinaryVector& u, const SparseBinaryVector& v) {
    const auto counts = jaccard_counts(u, v);
    if (counts.set_union == 0)
        throw UndefinedSimilarityError(
            "exact_jaccard: similarity of two empty vectors is undefined");
    return static_cast<double>(counts.intersection) /
           static_cast<double>(counts.set_union);
}

double exact_weighted_jaccard(const SparseWeightedVector& u,
                              const SparseWeightedVector& v) {
    if (u.universe_size() != v.universe_size())
        throw ConfigError("exact_weighted_jaccard: universe sizes differ");
    const auto& a = u.entries();
    const auto& b = v.entries();
    double min_sum = 0.0, max_sum = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].index == b[j].index) {
            min_sum += std::min(a[i].weight, b[j].weight);
            max_sum += std::max(a[i].weight, b[j].weight);
            ++i;
            ++j;
        } else if (a[i].index < b[j].index) {
            max_sum += a[i].weight;
            ++i;
        } else {
            max_sum += b[j].weight;
            ++j;
        }
    }
    for (; i < a.size(); ++i) max_sum += a[i].weight;
    for (; j < b.size(); ++j) max_sum += b[j].weight;
    if (max_sum == 0.0)
        throw UndefinedSimilarityError(
            "exact_weighted_jaccard: similarity of two all-zero vectors is "
            "undefined");
    return min_sum / max_sum;
}

std::uint64_t lowest_bits(std::uint64_t value, int b) {
    if (b < 1 || b > 64)
        throw ConfigError("lowest_bits: b must be in [1, 64]");
    return value & mask_bits(b);
}

std::vector<std::uint64_t> partition_value(std::uint64_t value,
                                           const PartitionScheme& scheme) {
    const int total = scheme.total_bits();
    if (total < 64 && value >= (std::uint64_t{1} << total))
        throw DomainError("partition_value: value exceeds 2^total_bits");
    std::vector<std::uint64_t> chunks;
    chunks.reserve(scheme.num_chunks());
    for (int i = 0; i < scheme.num_chunks(); ++i) {
        const int b = scheme.chunk_widths()[i];
        chunks.push_back((value >> scheme.offset(i)) & mask_bits(b));
    }
    return chunks;
}

std::uint64_t reassemble_value(const std::vector<std::uint64_t>& chunks,
                               const PartitionScheme& scheme) {
    if (chunks.size() != static_cast<std::size_t>(scheme.num_chunks()))
        throw ConfigError("reassemble_value: chunk count mismatch");
    std::uint64_t value = 0;
    for (int i = 0; i < scheme.num_chunks(); ++i)
        value |= chunks[i] << scheme.offset(i);
    return value;
}

ChunkedSketch partition_sketch(const HashSketch& sketch,
                               const PartitionScheme& scheme) {
    if (sketch.bit_width() != scheme.total_bits())
        throw ConfigError(
            "partition_sketch: sketch bit width does not match scheme total");
    const std::size_t k = sketch.num_hashes();
    const int m = scheme.num_chunks();
    std::vector<std::uint64_t> chunks;
    chunks.reserve(k * m);
    for (const auto value : sketch.values())
        for (int i = 0; i < m; ++i)
            chunks.push_back((value >> scheme.offset(i)) &
                             mask_bits(scheme.chunk_widths()[i]));
    return ChunkedSketch(scheme, k, std::move(chunks), sketch.scheme_id());
}

}  // namespace pbhash
