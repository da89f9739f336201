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

#include "pbhash/minhash.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "pbhash/core.hpp"
#include "pbhash/errors.hpp"
#include "pbhash/random.hpp"

namespace pbhash {

namespace {

void validate_config(const MinHashConfig& cfg) {
    if (cfg.universe_size == 0)
        throw ConfigError("minhash: universe size must be positive");
    if (cfg.universe_size > kMaxMinHashUniverse)
        throw ResourceLimitError(
            "minhash: universe size exceeds the supported envelope (2^20)");
    if (cfg.num_hashes < 1)
        throw ConfigError("minhash: hash count must be >= 1");
    if (cfg.output_bits < 1 || cfg.output_bits > 64)
        throw ConfigError("minhash: output bits must be in [1, 64]");
}

bool is_power_of_two_width(std::uint64_t universe_size, int bits) {
    return bits < 64 && (std::uint64_t{1} << bits) == universe_size;
}

std::string minhash_scheme_id(const MinHashConfig& cfg) {
    std::ostringstream id;
    id << "minhash/D=" << cfg.universe_size << "/B=" << cfg.output_bits
       << "/seed=" << cfg.master_seed;
    return id.str();
}

}  // namespace

HashSketch minhash_sketch(const SparseBinaryVector& u,
                          const MinHashConfig& cfg) {
    validate_config(cfg);
    if (u.universe_size() != cfg.universe_size)
        throw ConfigError("minhash: vector universe does not match config");
    if (u.empty())
        throw UndefinedHashError("minhash: empty vector has no hash");

    // Raw min-positions already are exact B-bit values when D == 2^B;
    // any other universe size requires the re-hash into B bits.
    const bool raw_positions =
        is_power_of_two_width(cfg.universe_size, cfg.output_bits);
    const auto domain = static_cast<std::uint32_t>(cfg.universe_size);
    const std::uint64_t out_mask = mask_bits(cfg.output_bits);

    std::vector<std::uint64_t> values;
    values.reserve(cfg.num_hashes);
    for (int j = 0; j < cfg.num_hashes; ++j) {
        RandomStream perm_stream(cfg.master_seed, static_cast<std::uint64_t>(j),
                                 role::permutation);
        const auto image = random_permutation(domain, perm_stream);
        std::uint32_t min_pos = domain;
        for (const auto p : u.positions())
            min_pos = std::min(min_pos, image[static_cast<std::size_t>(p)]);
        if (raw_positions) {
            values.push_back(min_pos);
        } else {
            const std::uint64_t key1 = derive_state(
                cfg.master_seed, static_cast<std::uint64_t>(j), role::rehash, 1);
            const std::uint64_t key2 = derive_state(
                cfg.master_seed, static_cast<std::uint64_t>(j), role::rehash, 2);
            values.push_back(keyed_mix(key1, key2, min_pos) & out_mask);
        }
    }
    return HashSketch(cfg.output_bits, std::move(values),
                      minhash_scheme_id(cfg));
}

Rational brute_force_collision_prob(const SparseBinaryVector& u,
                                    const SparseBinaryVector& v) {
    if (u.universe_size() != v.universe_size())
        throw ConfigError("brute_force: universe sizes differ");
    if (u.universe_size() > 8)
        throw ResourceLimitError(
            "brute_force: universe size above 8 enumerates too many "
            "permutations");
    if (u.empty() || v.empty())
        throw UndefinedHashError("brute_force: empty vector has no hash");

    const auto domain = static_cast<std::uint32_t>(u.universe_size());
    std::vector<std::uint32_t> image(domain);
    std::iota(image.begin(), image.end(), 0u);

    std::uint64_t collisions = 0;
    std::uint64_t total = 0;
    do {
        std::uint32_t min_u = domain, min_v = domain;
        for (const auto p : u.positions()) min_u = std::min(min_u, image[p]);
        for (const auto p : v.positions()) min_v = std::min(min_v, image[p]);
        collisions += (min_u == min_v);
        ++total;
    } while (std::next_permutation(image.begin(), image.end()));

    const std::uint64_t g = std::gcd(collisions, total);
    if (collisions == 0) return {0, 1};
    return {collisions / g, total / g};
}

}  // namespace pbhash
