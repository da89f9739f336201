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

#include "pbhash/featurizer.hpp"

#include <fstream>

#include "pbhash/errors.hpp"

namespace pbhash {

namespace {

constexpr std::uint64_t kDimensionCap = std::uint64_t{1} << 63;

// sum_i 2^{b_i}; fits easily since m <= 64 and b_i <= 64 is rejected
// above 2^63 by the caller-facing check.
unsigned __int128 block_span(const PartitionScheme& scheme) {
    unsigned __int128 span = 0;
    for (const int b : scheme.chunk_widths())
        span += static_cast<unsigned __int128>(1) << b;
    return span;
}

}  // namespace

std::uint64_t one_hot_dims(const PartitionScheme& scheme, std::int64_t k) {
    if (k < 1) throw ConfigError("one_hot_dims: k must be >= 1");
    const unsigned __int128 dims =
        block_span(scheme) * static_cast<unsigned __int128>(k);
    if (dims > kDimensionCap)
        throw ResourceLimitError("one_hot_dims: dimension exceeds 2^63");
    return static_cast<std::uint64_t>(dims);
}

SparseFeatures featurize(const ChunkedSketch& sketch) {
    const auto& scheme = sketch.scheme();
    const std::size_t k = sketch.num_hashes();
    const int m = scheme.num_chunks();
    const std::uint64_t dims =
        one_hot_dims(scheme, static_cast<std::int64_t>(k));
    const std::uint64_t span = static_cast<std::uint64_t>(block_span(scheme));

    SparseFeatures features;
    features.dimension = dims;
    features.indices.reserve(k * m);
    for (std::size_t j = 0; j < k; ++j) {
        std::uint64_t base = j * span;
        for (int i = 0; i < m; ++i) {
            features.indices.push_back(base + sketch.chunk(j, i));
            base += std::uint64_t{1} << scheme.chunk_widths()[i];
        }
    }
    return features;
}

void emit_dataset(
    const std::vector<std::pair<std::string, ChunkedSketch>>& examples,
    const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("emit_dataset: cannot open " + path);
    const ChunkedSketch* first = nullptr;
    for (const auto& [label, sketch] : examples) {
        if (first == nullptr) {
            first = &sketch;
        } else if (!(sketch.scheme() == first->scheme()) ||
                   sketch.num_hashes() != first->num_hashes()) {
            throw InputError(
                "emit_dataset: examples disagree on scheme or hash count");
        }
        out << label;
        for (const auto idx : featurize(sketch).indices)
            out << ' ' << (idx + 1);  // 1-based text convention
        out << '\n';
    }
    if (!out) throw InputError("emit_dataset: write failed for " + path);
}

}  // namespace pbhash
