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

#ifndef PBHASH_CWS_HPP
#define PBHASH_CWS_HPP

#include <cstdint>

#include "pbhash/random.hpp"
#include "pbhash/types.hpp"

namespace pbhash {

// One consistent weighted sample: the selected coordinate and its
// quantized log-weight level. Two vectors produce the same sample with
// probability equal to their weighted Jaccard similarity.
struct CwsSample {
    std::uint64_t star_index;
    std::int64_t t_value;

    bool operator==(const CwsSample& other) const noexcept {
        return star_index == other.star_index && t_value == other.t_value;
    }
};

// Per-coordinate variate source for one hash index. The variates depend
// only on (master_seed, hash_index, coordinate), never on the vector, so
// every vector sees the same (r_i, c_i, beta_i) triple per coordinate --
// the consistency property the sampler relies on.
class CoordinateStreams {
public:
    CoordinateStreams(std::uint64_t master_seed, std::uint64_t hash_index)
        : master_seed_(master_seed), hash_index_(hash_index) {}

    RandomStream stream_for(std::uint64_t coordinate) const {
        return RandomStream(derive_state(master_seed_, hash_index_,
                                         role::cws_variates, coordinate));
    }

private:
    std::uint64_t master_seed_;
    std::uint64_t hash_index_;
};

// One draw of the improved-consistent-sampling recipe: per non-zero
// coordinate i with weight S_i draw r_i, c_i ~ Gamma(2,1) and
// beta_i ~ U[0,1), set
//   t_i = floor(ln S_i / r_i + beta_i)
//   y_i = exp(r_i (t_i - beta_i))
//   a_i = c_i / (y_i exp(r_i))
// and return (argmin_i a_i, t at the argmin).
CwsSample icws_sample(const SparseWeightedVector& u,
                      const CoordinateStreams& streams);

// k independent samples, each packed into B bits by the keyed avalanche
// mixer over the (star_index, t_value) pair.
HashSketch cws_sketch(const SparseWeightedVector& u, int num_hashes, int bits,
                      std::uint64_t master_seed);

}  // namespace pbhash

#endif  // PBHASH_CWS_HPP
