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

#ifndef PBHASH_ESTIMATORS_HPP
#define PBHASH_ESTIMATORS_HPP

#include <cstdint>
#include <vector>

#include "pbhash/types.hpp"

namespace pbhash {

// Empirical per-chunk collision rates between two chunked sketches.
// Each rate is a multiple of 1/k by construction.
struct CollisionStats {
    std::vector<double> per_chunk_rates;
    std::size_t num_hashes;
    PartitionScheme scheme;
};

// Closed-form summary for a (J, scheme, k) configuration.
struct TheoryReport {
    double j_true;
    double variance_theory;           // Var(J_hat_m) at sample size k
    double variance_ratio;            // k * Var(J_hat_m) / (J (1 - J))
    std::vector<double> per_chunk_pb; // P_{b_i} under the uniform model
};

// per_chunk_rates[i] = (1/k) #{j : a.chunk(j,i) == b.chunk(j,i)}.
// Requires identical scheme, scheme_id and hash count.
CollisionStats collision_rate(const ChunkedSketch& a, const ChunkedSketch& b);

// Collision probability of b-bit values under the uniform re-hash model:
// P_b = c_b + (1 - c_b) J with c_b = 2^-b.
double p_b_theory(double j, int b);

// Unbiased inversion of p_b_theory: (P_hat - c_b) / (1 - c_b). Not
// clamped to [0, 1]; clamping would bias the estimator.
double estimate_j_b(double p_hat, int b);

// Variance multiplier of the b-bit estimator against the full-width
// one: R_b = 1 + 1 / ((2^b - 1) J). Returns +infinity at J = 0.
double variance_ratio_rb(double j, int b);

// Unbiased multi-chunk estimator:
// (sum_i P_hat_{b_i} - sum_i c_{b_i}) / sum_i (1 - c_{b_i}).
double estimate_j_m(const CollisionStats& stats);

// One-sample variance of the multi-chunk estimator divided by k:
//   [ sum_i P_{b_i}(1 - P_{b_i})
//     + sum_{i != i'} (P_{b_i + b_{i'}} - P_{b_i} P_{b_{i'}}) ]
//   / ( sum_i (1 - c_{b_i}) )^2 / k.
// This general form is the single source of truth; the equal-chunk
// reduction exists only as a test-side cross-check.
double variance_j_m_theory(double j, const PartitionScheme& scheme, long k);

// Equal-chunk variance ratio R_{m,b} = k Var(J_hat_m) / (J (1 - J)) for
// m chunks of b bits. Returns +infinity at J in {0, 1}.
double variance_ratio_rmb(double j, int b, int m);

// Covariance building block f(J) = P_{b1+b2} - P_{b1} P_{b2}; concave on
// [0, 1], zero at both ends, maximal at J = 1/2 with peak
// (1 - 2^-b1)(1 - 2^-b2)/4.
double lemma_f(double j, int b1, int b2);

// Exact b-bit collision probability for min-position hashing over a
// large universe with occupancy rates r1 = f1/D and r2 = f2/D:
//   A_{i,b} = r_i (1-r_i)^{2^b - 1} / (1 - (1-r_i)^{2^b})
//   C_{1,b} = A_1 r2/(r1+r2) + A_2 r1/(r1+r2)
//   C_{2,b} = A_1 r1/(r1+r2) + A_2 r2/(r1+r2)
//   P_b     = C_{1,b} + (1 - C_{2,b}) J.
// As r1, r2 -> 0 this tends to p_b_theory(J, b). With strict_domain,
// r in {0, 1} raises DomainError; otherwise the analytic limits
// A(0) = 2^-b and A(1) = 0 are used.
double theorem1_exact_pb(double j, double r1, double r2, int b,
                         bool strict_domain = false);

// Evaluates the closed-form theory for a configuration.
TheoryReport make_theory_report(double j_true, const PartitionScheme& scheme,
                                long k);

}  // namespace pbhash

#endif  // PBHASH_ESTIMATORS_HPP
