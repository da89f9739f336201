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

#include "pbhash/random.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <utility>

#include "pbhash/errors.hpp"

namespace pbhash {

std::uint64_t RandomStream::next_below(std::uint64_t bound) {
    if (bound == 0) throw ConfigError("next_below: bound must be positive");
    if (bound == 1) return 0;
    const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
    for (;;) {
        const std::uint64_t v = next_u64() & mask;
        if (v < bound) return v;
    }
}

double RandomStream::exponential1() noexcept {
    return -std::log1p(-uniform01());
}

std::vector<std::uint32_t> random_permutation(std::uint32_t domain_size,
                                              RandomStream& stream) {
    if (domain_size == 0)
        throw ConfigError("random_permutation: domain size must be positive");
    std::vector<std::uint32_t> image(domain_size);
    std::iota(image.begin(), image.end(), 0u);
    for (std::uint32_t i = domain_size - 1; i > 0; --i) {
        const auto j = static_cast<std::uint32_t>(stream.next_below(i + 1));
        std::swap(image[i], image[j]);
    }
    return image;
}

}  // namespace pbhash
