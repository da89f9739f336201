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

#ifndef PBHASH_SIMULATOR_HPP
#define PBHASH_SIMULATOR_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pbhash/random.hpp"
#include "pbhash/types.hpp"

namespace pbhash {

// Synthetic pair with exactly realizable Jaccard similarity: the union
// has round(density * D) positions and round(J * union) of them are
// shared.
struct SyntheticPairSpec {
    double j_target;
    std::uint64_t universe_size;
    double density = 0.75;
};

// Two vectors picked by line index from a file in the shared vector
// text format.
struct FilePairSpec {
    std::string path;
    std::size_t index_a;
    std::size_t index_b;
};

using PairSource = std::variant<SyntheticPairSpec, FilePairSpec>;

enum class HashFamily { minhash, cws };

struct SimConfig {
    PairSource pair_source;
    HashFamily hash_family = HashFamily::minhash;
    int bits = 16;
    std::vector<int> k_grid;
    std::vector<int> m_list;
    int trials = 10000;
    std::uint64_t master_seed = 0;
};

struct BiasVarianceRow {
    int m;
    int k;
    double j_true;
    double bias;
    double var_emp;     // NaN sentinel when trials == 1
    double var_theory;
    double rel_dev;     // NaN when var_emp or var_theory is unusable
    bool degenerate;    // some chunk saw 0 or k*trials collisions
};

struct BiasVarianceReport {
    double j_target;
    double j_true;
    bool nearest_j_used;  // synthetic target was not exactly realizable
    int trials;
    std::vector<BiasVarianceRow> rows;
};

struct PairWithJaccard {
    SparseBinaryVector a;
    SparseBinaryVector b;
    std::uint64_t intersection;
    std::uint64_t union_size;
    double realized_j;
};

// Builds a pair whose exact Jaccard similarity equals realized_j
// exactly; realized_j is the closest fraction to j_target with the
// union size fixed by density. Positions are scattered by the stream.
PairWithJaccard make_pair_with_jaccard(double j_target,
                                       std::uint64_t universe_size,
                                       RandomStream& stream,
                                       double density = 0.75);

// Monte Carlo protocol: per trial a fresh derived seed re-sketches the
// same pair; each (m, k) cell aggregates the multi-chunk estimate over
// the first k hashes. Deterministic given the config, including across
// changes of the trial count.
BiasVarianceReport run_trials(const SimConfig& cfg);

// CSV with columns exactly (m,k,j_true,bias,var_emp,var_theory,rel_dev).
std::string report_to_csv(const BiasVarianceReport& report);

// Acceptance-style tolerance check: every cell must satisfy
// |bias| < 4 sqrt(var_theory / trials), and cells with k >= 100,
// trials >= 10^4 and j_true in [0.1, 0.9] must have rel_dev < 0.05.
// Returns one message per violated cell.
std::vector<std::string> check_report(const BiasVarianceReport& report);

}  // namespace pbhash

#endif  // PBHASH_SIMULATOR_HPP
