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

#include "pbhash/types.hpp"

#include <numeric>
#include <utility>

#include "pbhash/core.hpp"
#include "pbhash/errors.hpp"

namespace pbhash {

SparseBinaryVector::SparseBinaryVector(std::uint64_t universe_size,
                                       std::vector<std::uint64_t> positions)
    : universe_size_(universe_size), positions_(std::move(positions)) {
    if (universe_size_ == 0)
        throw ConfigError("SparseBinaryVector: universe size must be positive");
    std::uint64_t prev = 0;
    bool first = true;
    for (const auto p : positions_) {
        if (p >= universe_size_)
            throw ConfigError("SparseBinaryVector: position out of universe");
        if (!first && p <= prev)
            throw ConfigError(
                "SparseBinaryVector: positions must be strictly increasing");
        prev = p;
        first = false;
    }
}

SparseWeightedVector::SparseWeightedVector(std::uint64_t universe_size,
                                           std::vector<WeightedEntry> entries)
    : universe_size_(universe_size), entries_(std::move(entries)) {
    if (universe_size_ == 0)
        throw ConfigError(
            "SparseWeightedVector: universe size must be positive");
    std::uint64_t prev = 0;
    bool first = true;
    for (const auto& e : entries_) {
        if (e.index >= universe_size_)
            throw ConfigError("SparseWeightedVector: index out of universe");
        if (!first && e.index <= prev)
            throw ConfigError(
                "SparseWeightedVector: indices must be strictly increasing");
        if (!(e.weight > 0.0))
            throw ConfigError(
                "SparseWeightedVector: weights must be strictly positive");
        prev = e.index;
        first = false;
    }
}

SparseBinaryVector SparseWeightedVector::support() const {
    std::vector<std::uint64_t> positions;
    positions.reserve(entries_.size());
    for (const auto& e : entries_) positions.push_back(e.index);
    return SparseBinaryVector(universe_size_, std::move(positions));
}

HashSketch::HashSketch(int bit_width, std::vector<std::uint64_t> values,
                       std::string scheme_id)
    : bit_width_(bit_width),
      values_(std::move(values)),
      scheme_id_(std::move(scheme_id)) {
    if (bit_width_ < 1 || bit_width_ > 64)
        throw ConfigError("HashSketch: bit width must be in [1, 64]");
    const std::uint64_t mask = mask_bits(bit_width_);
    for (const auto v : values_)
        if ((v & ~mask) != 0)
            throw ConfigError("HashSketch: value exceeds bit width");
}

PartitionScheme::PartitionScheme(std::vector<int> chunk_widths)
    : widths_(std::move(chunk_widths)) {
    if (widths_.empty())
        throw ConfigError("PartitionScheme: at least one chunk required");
    int total = 0;
    offsets_.reserve(widths_.size());
    for (const int b : widths_) {
        if (b < 1) throw ConfigError("PartitionScheme: chunk widths must be >= 1");
        offsets_.push_back(total);
        total += b;
        if (total > 64)
            throw ConfigError("PartitionScheme: total bits must not exceed 64");
    }
    total_bits_ = total;
}

PartitionScheme PartitionScheme::equal_chunks(int chunk_bits, int num_chunks) {
    if (num_chunks < 1)
        throw ConfigError("PartitionScheme: chunk count must be >= 1");
    return PartitionScheme(std::vector<int>(num_chunks, chunk_bits));
}

ChunkedSketch::ChunkedSketch(PartitionScheme scheme, std::size_t num_hashes,
                             std::vector<std::uint64_t> chunks,
                             std::string scheme_id)
    : scheme_(std::move(scheme)),
      num_hashes_(num_hashes),
      chunks_(std::move(chunks)),
      scheme_id_(std::move(scheme_id)) {
    if (chunks_.size() != num_hashes_ * scheme_.num_chunks())
        throw ConfigError("ChunkedSketch: chunk matrix has wrong shape");
    for (std::size_t j = 0; j < num_hashes_; ++j)
        for (int i = 0; i < scheme_.num_chunks(); ++i)
            if ((chunk(j, i) & ~mask_bits(scheme_.chunk_widths()[i])) != 0)
                throw ConfigError("ChunkedSketch: chunk value exceeds width");
}

}  // namespace pbhash
