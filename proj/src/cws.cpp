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

#include "pbhash/cws.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "pbhash/core.hpp"
#include "pbhash/errors.hpp"

namespace pbhash {

CwsSample icws_sample(const SparseWeightedVector& u,
                      const CoordinateStreams& streams) {
    if (u.empty())
        throw UndefinedHashError("cws: all-zero vector has no sample");

    double best_a = std::numeric_limits<double>::infinity();
    CwsSample best{0, 0};
    bool found = false;
    for (const auto& entry : u.entries()) {
        if (entry.weight < 1e-300)
            throw DomainError(
                "cws: weight below 1e-300 would overflow the log scale");
        const double log_weight = std::log(entry.weight);

        // Draw order frozen: r, c, beta.
        RandomStream stream = streams.stream_for(entry.index);
        const double r = stream.gamma21();
        const double c = stream.gamma21();
        const double beta = stream.uniform01();

        const double t = std::floor(log_weight / r + beta);
        const double y = std::exp(r * (t - beta));
        const double a = c / (y * std::exp(r));
        if (!found || a < best_a) {
            found = true;
            best_a = a;
            best = {entry.index, static_cast<std::int64_t>(t)};
        }
    }
    return best;
}

HashSketch cws_sketch(const SparseWeightedVector& u, int num_hashes, int bits,
                      std::uint64_t master_seed) {
    if (num_hashes < 1) throw ConfigError("cws: hash count must be >= 1");
    if (bits < 1 || bits > 64)
        throw ConfigError("cws: output bits must be in [1, 64]");
    if (u.empty())
        throw UndefinedHashError("cws: all-zero vector has no sketch");

    const std::uint64_t out_mask = mask_bits(bits);
    std::vector<std::uint64_t> values;
    values.reserve(num_hashes);
    for (int j = 0; j < num_hashes; ++j) {
        const auto hash_index = static_cast<std::uint64_t>(j);
        const CwsSample sample =
            icws_sample(u, CoordinateStreams(master_seed, hash_index));
        const std::uint64_t key1 =
            derive_state(master_seed, hash_index, role::cws_rehash, 1);
        const std::uint64_t key2 =
            derive_state(master_seed, hash_index, role::cws_rehash, 2);
        values.push_back(keyed_mix2(key1, key2, sample.star_index,
                                    static_cast<std::uint64_t>(sample.t_value)) &
                         out_mask);
    }
    std::ostringstream id;
    id << "cws/B=" << bits << "/seed=" << master_seed;
    return HashSketch(bits, std::move(values), id.str());
}

}  // namespace pbhash
