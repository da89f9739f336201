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

#include "pbhash/estimators.hpp"

#include <cmath>
#include <limits>

#include "pbhash/errors.hpp"

namespace pbhash {

namespace {

double c_b(int b) { return std::exp2(static_cast<double>(-b)); }

void check_j_range(double j, const char* where) {
    if (!(j >= 0.0 && j <= 1.0))
        throw DomainError(std::string(where) + ": J must be in [0, 1]");
}

void check_b_positive(int b, const char* where) {
    if (b < 1) throw ConfigError(std::string(where) + ": b must be >= 1");
}

// A_{i,b} = r (1-r)^(n-1) / (1 - (1-r)^n) with n = 2^b, evaluated via
// log1p/expm1 so it stays stable for r anywhere in (0, 1) and any n.
double theorem1_a_coefficient(double r, int b, bool strict_domain) {
    const double n = std::exp2(static_cast<double>(b));
    if (r == 0.0) {
        if (strict_domain)
            throw DomainError("theorem1_exact_pb: r = 0 outside open domain");
        return 1.0 / n;  // analytic limit
    }
    if (r == 1.0) {
        if (strict_domain)
            throw DomainError("theorem1_exact_pb: r = 1 outside open domain");
        return 0.0;  // (1-r)^(n-1) vanishes
    }
    if (!(r > 0.0 && r < 1.0))
        throw DomainError("theorem1_exact_pb: r must be in (0, 1)");
    const double log_one_minus_r = std::log1p(-r);
    const double t = n * log_one_minus_r;          // log((1-r)^n), <= 0
    const double denom = -std::expm1(t);           // 1 - (1-r)^n, > 0
    const double numer = r * std::exp(t - log_one_minus_r);
    return numer / denom;
}

}  // namespace

CollisionStats collision_rate(const ChunkedSketch& a, const ChunkedSketch& b) {
    if (!(a.scheme() == b.scheme()))
        throw ComparabilityError("collision_rate: partition schemes differ");
    if (a.scheme_id() != b.scheme_id())
        throw ComparabilityError("collision_rate: sketch provenance differs");
    if (a.num_hashes() != b.num_hashes())
        throw ComparabilityError("collision_rate: hash counts differ");
    const std::size_t k = a.num_hashes();
    if (k == 0) throw ComparabilityError("collision_rate: empty sketches");
    const int m = a.scheme().num_chunks();
    std::vector<double> rates(m, 0.0);
    std::vector<std::size_t> matches(m, 0);
    for (std::size_t j = 0; j < k; ++j)
        for (int i = 0; i < m; ++i)
            matches[i] += (a.chunk(j, i) == b.chunk(j, i));
    for (int i = 0; i < m; ++i)
        rates[i] = static_cast<double>(matches[i]) / static_cast<double>(k);
    return {std::move(rates), k, a.scheme()};
}

double p_b_theory(double j, int b) {
    check_j_range(j, "p_b_theory");
    check_b_positive(b, "p_b_theory");
    const double c = c_b(b);
    return c + (1.0 - c) * j;
}

double estimate_j_b(double p_hat, int b) {
    check_b_positive(b, "estimate_j_b");
    const double c = c_b(b);
    return (p_hat - c) / (1.0 - c);
}

double variance_ratio_rb(double j, int b) {
    check_b_positive(b, "variance_ratio_rb");
    if (!(j >= 0.0 && j <= 1.0))
        throw DomainError("variance_ratio_rb: J must be in [0, 1]");
    if (j == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 + 1.0 / ((std::exp2(static_cast<double>(b)) - 1.0) * j);
}

double estimate_j_m(const CollisionStats& stats) {
    const int m = stats.scheme.num_chunks();
    if (static_cast<int>(stats.per_chunk_rates.size()) != m)
        throw ConfigError("estimate_j_m: rate count does not match scheme");
    double rate_sum = 0.0, c_sum = 0.0, weight_sum = 0.0;
    for (int i = 0; i < m; ++i) {
        const double c = c_b(stats.scheme.chunk_widths()[i]);
        rate_sum += stats.per_chunk_rates[i];
        c_sum += c;
        weight_sum += 1.0 - c;
    }
    return rate_sum / weight_sum - c_sum / weight_sum;
}

double variance_j_m_theory(double j, const PartitionScheme& scheme, long k) {
    check_j_range(j, "variance_j_m_theory");
    if (k < 1) throw ConfigError("variance_j_m_theory: k must be >= 1");
    const int m = scheme.num_chunks();
    double numerator = 0.0;
    double weight_sum = 0.0;
    for (int i = 0; i < m; ++i) {
        const int bi = scheme.chunk_widths()[i];
        const double p = p_b_theory(j, bi);
        numerator += p * (1.0 - p);
        weight_sum += 1.0 - c_b(bi);
        for (int i2 = 0; i2 < m; ++i2) {
            if (i2 == i) continue;
            const int bi2 = scheme.chunk_widths()[i2];
            numerator += p_b_theory(j, bi + bi2) - p * p_b_theory(j, bi2);
        }
    }
    return numerator / (weight_sum * weight_sum) / static_cast<double>(k);
}

double variance_ratio_rmb(double j, int b, int m) {
    check_b_positive(b, "variance_ratio_rmb");
    if (m < 1) throw ConfigError("variance_ratio_rmb: m must be >= 1");
    if (!(j >= 0.0 && j <= 1.0))
        throw DomainError("variance_ratio_rmb: J must be in [0, 1]");
    if (j == 0.0 || j == 1.0)
        return std::numeric_limits<double>::infinity();
    const auto scheme = PartitionScheme::equal_chunks(b, m);
    return variance_j_m_theory(j, scheme, 1) / (j * (1.0 - j));
}

double lemma_f(double j, int b1, int b2) {
    check_j_range(j, "lemma_f");
    check_b_positive(b1, "lemma_f");
    check_b_positive(b2, "lemma_f");
    return p_b_theory(j, b1 + b2) - p_b_theory(j, b1) * p_b_theory(j, b2);
}

double theorem1_exact_pb(double j, double r1, double r2, int b,
                         bool strict_domain) {
    check_j_range(j, "theorem1_exact_pb");
    check_b_positive(b, "theorem1_exact_pb");
    if (r1 + r2 == 0.0)
        throw DomainError("theorem1_exact_pb: r1 + r2 must be positive");
    const double a1 = theorem1_a_coefficient(r1, b, strict_domain);
    const double a2 = theorem1_a_coefficient(r2, b, strict_domain);
    const double w1 = r1 / (r1 + r2);
    const double w2 = r2 / (r1 + r2);
    const double c1 = a1 * w2 + a2 * w1;
    const double c2 = a1 * w1 + a2 * w2;
    return c1 + (1.0 - c2) * j;
}

TheoryReport make_theory_report(double j_true, const PartitionScheme& scheme,
                                long k) {
    TheoryReport report;
    report.j_true = j_true;
    report.variance_theory = variance_j_m_theory(j_true, scheme, k);
    report.variance_ratio =
        (j_true > 0.0 && j_true < 1.0)
            ? report.variance_theory * static_cast<double>(k) /
                  (j_true * (1.0 - j_true))
            : std::numeric_limits<double>::infinity();
    report.per_chunk_pb.reserve(scheme.num_chunks());
    for (const int b : scheme.chunk_widths())
        report.per_chunk_pb.push_back(p_b_theory(j_true, b));
    return report;
}

}  // namespace pbhash
