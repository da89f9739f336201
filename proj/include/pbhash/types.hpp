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

#ifndef PBHASH_TYPES_HPP
#define PBHASH_TYPES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pbhash {

// Set of non-zero positions in a universe of size D. Positions are
// strictly increasing and all in [0, D). Immutable after construction.
class SparseBinaryVector {
public:
    SparseBinaryVector(std::uint64_t universe_size,
                       std::vector<std::uint64_t> positions);

    std::uint64_t universe_size() const noexcept { return universe_size_; }
    const std::vector<std::uint64_t>& positions() const noexcept {
        return positions_;
    }
    std::size_t support_size() const noexcept { return positions_.size(); }
    bool empty() const noexcept { return positions_.empty(); }

private:
    std::uint64_t universe_size_;
    std::vector<std::uint64_t> positions_;
};

struct WeightedEntry {
    std::uint64_t index;
    double weight;
};

// Non-negative vector stored as (index, weight) pairs with strictly
// increasing indices and strictly positive weights.
class SparseWeightedVector {
public:
    SparseWeightedVector(std::uint64_t universe_size,
                         std::vector<WeightedEntry> entries);

    std::uint64_t universe_size() const noexcept { return universe_size_; }
    const std::vector<WeightedEntry>& entries() const noexcept {
        return entries_;
    }
    bool empty() const noexcept { return entries_.empty(); }

    // The 0/1 vector with the same support.
    SparseBinaryVector support() const;

private:
    std::uint64_t universe_size_;
    std::vector<WeightedEntry> entries_;
};

// k B-bit hash values for one data vector. scheme_id records the hash
// family and master seed; sketches are comparable only when both
// bit_width and scheme_id match. An empty scheme_id means provenance is
// unknown (e.g. the sketch was loaded from a file).
class HashSketch {
public:
    HashSketch(int bit_width, std::vector<std::uint64_t> values,
               std::string scheme_id = {});

    int bit_width() const noexcept { return bit_width_; }
    const std::vector<std::uint64_t>& values() const noexcept {
        return values_;
    }
    const std::string& scheme_id() const noexcept { return scheme_id_; }
    std::size_t num_hashes() const noexcept { return values_.size(); }

private:
    int bit_width_;
    std::vector<std::uint64_t> values_;
    std::string scheme_id_;
};

// Ordered chunk widths (b_1, ..., b_m) with total B = sum b_i <= 64.
// Chunk 1 is the least-significant b_1 bits of a hash value, chunk 2 the
// next b_2 bits, and so on; this low-first convention is fixed
// project-wide.
class PartitionScheme {
public:
    explicit PartitionScheme(std::vector<int> chunk_widths);

    static PartitionScheme equal_chunks(int chunk_bits, int num_chunks);

    const std::vector<int>& chunk_widths() const noexcept { return widths_; }
    int num_chunks() const noexcept { return static_cast<int>(widths_.size()); }
    int total_bits() const noexcept { return total_bits_; }
    // Bit offset of chunk i (0-based): b_1 + ... + b_i.
    int offset(int chunk) const noexcept { return offsets_[chunk]; }

    bool operator==(const PartitionScheme& other) const noexcept {
        return widths_ == other.widths_;
    }

private:
    std::vector<int> widths_;
    std::vector<int> offsets_;
    int total_bits_;
};

// k x m matrix of chunk values; chunk(j, i) holds b_i bits of hash j.
// Reassembling row j under the low-first convention reproduces the
// original B-bit value.
class ChunkedSketch {
public:
    ChunkedSketch(PartitionScheme scheme, std::size_t num_hashes,
                  std::vector<std::uint64_t> chunks,
                  std::string scheme_id = {});

    const PartitionScheme& scheme() const noexcept { return scheme_; }
    const std::string& scheme_id() const noexcept { return scheme_id_; }
    std::size_t num_hashes() const noexcept { return num_hashes_; }
    std::uint64_t chunk(std::size_t hash, int chunk_index) const noexcept {
        return chunks_[hash * scheme_.num_chunks() + chunk_index];
    }
    const std::vector<std::uint64_t>& flat() const noexcept { return chunks_; }

private:
    PartitionScheme scheme_;
    std::size_t num_hashes_;
    std::vector<std::uint64_t> chunks_;  // hash-major
    std::string scheme_id_;
};

}  // namespace pbhash

#endif  // PBHASH_TYPES_HPP
