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

#include "pbhash/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "pbhash/core.hpp"
#include "pbhash/cws.hpp"
#include "pbhash/errors.hpp"
#include "pbhash/estimators.hpp"
#include "pbhash/io.hpp"
#include "pbhash/minhash.hpp"

namespace pbhash {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

SparseWeightedVector unit_weights(const SparseBinaryVector& v) {
    std::vector<WeightedEntry> entries;
    entries.reserve(v.positions().size());
    for (const auto p : v.positions()) entries.push_back({p, 1.0});
    return SparseWeightedVector(v.universe_size(), std::move(entries));
}

struct PreparedPair {
    SparseWeightedVector a;
    SparseWeightedVector b;
    double j_target;
    double j_true;
    bool nearest_j_used;
};

PreparedPair prepare_pair(const SimConfig& cfg) {
    if (const auto* spec = std::get_if<SyntheticPairSpec>(&cfg.pair_source)) {
        RandomStream stream(cfg.master_seed, 0, role::pair_builder);
        const auto pair = make_pair_with_jaccard(
            spec->j_target, spec->universe_size, stream, spec->density);
        const bool nearest =
            std::abs(pair.realized_j - spec->j_target) > 1e-12;
        return {unit_weights(pair.a), unit_weights(pair.b), spec->j_target,
                pair.realized_j, nearest};
    }
    const auto& spec = std::get<FilePairSpec>(cfg.pair_source);
    const auto vectors = read_weighted_vectors(spec.path);
    if (spec.index_a >= vectors.size() || spec.index_b >= vectors.size())
        throw InputError("simulate: pair index beyond end of " + spec.path);
    const auto& a = vectors[spec.index_a];
    const auto& b = vectors[spec.index_b];
    double j_true = 0.0;
    if (cfg.hash_family == HashFamily::minhash) {
        // Permutation hashing needs genuinely binary data.
        j_true = exact_jaccard(a.support(), b.support());
        for (const auto& v : {a, b})
            for (const auto& e : v.entries())
                if (e.weight != 1.0)
                    throw InputError(
                        "simulate: minhash requires binary vectors (weight 1)");
    } else {
        j_true = exact_weighted_jaccard(a, b);
    }
    return {a, b, j_true, j_true, false};
}

void validate(const SimConfig& cfg) {
    if (cfg.trials < 1) throw ConfigError("simulate: trials must be >= 1");
    if (cfg.bits < 1 || cfg.bits > 64)
        throw ConfigError("simulate: bits must be in [1, 64]");
    if (cfg.k_grid.empty()) throw ConfigError("simulate: empty k grid");
    for (const int k : cfg.k_grid)
        if (k < 1) throw ConfigError("simulate: k values must be >= 1");
    if (cfg.m_list.empty()) throw ConfigError("simulate: empty m list");
    for (const int m : cfg.m_list)
        if (m < 1 || cfg.bits % m != 0)
            throw ConfigError("simulate: every m must divide B");
}

std::string format_cell(double value) {
    if (std::isnan(value)) return "na";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

}  // namespace

PairWithJaccard make_pair_with_jaccard(double j_target,
                                       std::uint64_t universe_size,
                                       RandomStream& stream, double density) {
    if (!(j_target >= 0.0 && j_target <= 1.0))
        throw DomainError("make_pair: J target must be in [0, 1]");
    if (!(density > 0.0 && density <= 1.0))
        throw ConfigError("make_pair: density must be in (0, 1]");
    if (universe_size == 0)
        throw ConfigError("make_pair: universe size must be positive");
    if (universe_size > kMaxMinHashUniverse)
        throw ResourceLimitError("make_pair: universe size exceeds 2^20");

    const auto union_size = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(
               std::llround(density * static_cast<double>(universe_size))));
    const auto shared = std::min<std::uint64_t>(
        union_size, static_cast<std::uint64_t>(std::llround(
                        j_target * static_cast<double>(union_size))));

    // Scatter the union across the universe, then split it into a
    // shared block and two exclusive blocks.
    const auto domain = static_cast<std::uint32_t>(universe_size);
    const auto image = random_permutation(domain, stream);
    std::vector<std::uint64_t> shuffled(union_size);
    for (std::uint64_t i = 0; i < union_size; ++i) shuffled[i] = image[i];

    const std::uint64_t exclusive = union_size - shared;
    const std::uint64_t extra_a = exclusive - exclusive / 2;

    std::vector<std::uint64_t> pos_a(shuffled.begin(),
                                     shuffled.begin() + shared + extra_a);
    std::vector<std::uint64_t> pos_b(shuffled.begin(),
                                     shuffled.begin() + shared);
    pos_b.insert(pos_b.end(), shuffled.begin() + shared + extra_a,
                 shuffled.end());
    std::sort(pos_a.begin(), pos_a.end());
    std::sort(pos_b.begin(), pos_b.end());

    PairWithJaccard result{
        SparseBinaryVector(universe_size, std::move(pos_a)),
        SparseBinaryVector(universe_size, std::move(pos_b)), shared,
        union_size,
        static_cast<double>(shared) / static_cast<double>(union_size)};
    return result;
}

BiasVarianceReport run_trials(const SimConfig& cfg) {
    validate(cfg);
    const PreparedPair pair = prepare_pair(cfg);

    std::vector<int> k_grid = cfg.k_grid;
    std::sort(k_grid.begin(), k_grid.end());
    k_grid.erase(std::unique(k_grid.begin(), k_grid.end()), k_grid.end());
    const int k_max = k_grid.back();

    const int num_m = static_cast<int>(cfg.m_list.size());
    const int num_k = static_cast<int>(k_grid.size());

    std::vector<PartitionScheme> schemes;
    schemes.reserve(num_m);
    for (const int m : cfg.m_list)
        schemes.push_back(PartitionScheme::equal_chunks(cfg.bits / m, m));

    // estimates[(mi * num_k + ki) * trials + t]
    std::vector<double> estimates(
        static_cast<std::size_t>(num_m) * num_k * cfg.trials);
    // total collision count per (m, k, chunk), for degeneracy flags
    std::vector<std::vector<std::uint64_t>> totals(
        static_cast<std::size_t>(num_m) * num_k);
    for (int mi = 0; mi < num_m; ++mi)
        for (int ki = 0; ki < num_k; ++ki)
            totals[mi * num_k + ki].assign(cfg.m_list[mi], 0);

    const bool binary_family = cfg.hash_family == HashFamily::minhash;
    const auto universe = pair.a.universe_size();
    const SparseBinaryVector support_a =
        binary_family ? pair.a.support() : SparseBinaryVector(1, {0});
    const SparseBinaryVector support_b =
        binary_family ? pair.b.support() : SparseBinaryVector(1, {0});

    std::vector<std::uint64_t> matches;  // per chunk, current prefix
    for (int t = 0; t < cfg.trials; ++t) {
        const std::uint64_t trial_seed =
            derive_state(cfg.master_seed, static_cast<std::uint64_t>(t),
                         role::trial);
        std::vector<std::uint64_t> values_a, values_b;
        if (binary_family) {
            const MinHashConfig hash_cfg{universe, k_max, trial_seed,
                                         cfg.bits};
            values_a = minhash_sketch(support_a, hash_cfg).values();
            values_b = minhash_sketch(support_b, hash_cfg).values();
        } else {
            values_a = cws_sketch(pair.a, k_max, cfg.bits, trial_seed).values();
            values_b = cws_sketch(pair.b, k_max, cfg.bits, trial_seed).values();
        }

        for (int mi = 0; mi < num_m; ++mi) {
            const auto& scheme = schemes[mi];
            const int m = scheme.num_chunks();
            const int b = scheme.chunk_widths()[0];
            matches.assign(m, 0);
            int ki = 0;
            for (int j = 0; j < k_max && ki < num_k; ++j) {
                const std::uint64_t diff = values_a[j] ^ values_b[j];
                for (int i = 0; i < m; ++i)
                    matches[i] +=
                        ((diff >> scheme.offset(i)) & mask_bits(b)) == 0;
                while (ki < num_k && j + 1 == k_grid[ki]) {
                    const int k = k_grid[ki];
                    std::vector<double> rates(m);
                    for (int i = 0; i < m; ++i) {
                        rates[i] = static_cast<double>(matches[i]) / k;
                        totals[mi * num_k + ki][i] += matches[i];
                    }
                    const CollisionStats stats{std::move(rates),
                                               static_cast<std::size_t>(k),
                                               scheme};
                    estimates[(static_cast<std::size_t>(mi) * num_k + ki) *
                                  cfg.trials +
                              t] = estimate_j_m(stats);
                    ++ki;
                }
            }
        }
    }

    BiasVarianceReport report{pair.j_target, pair.j_true, pair.nearest_j_used,
                              cfg.trials, {}};
    for (int mi = 0; mi < num_m; ++mi) {
        for (int ki = 0; ki < num_k; ++ki) {
            const int k = k_grid[ki];
            const double* cell =
                &estimates[(static_cast<std::size_t>(mi) * num_k + ki) *
                           cfg.trials];
            double mean = 0.0;
            for (int t = 0; t < cfg.trials; ++t) mean += cell[t];
            mean /= cfg.trials;
            double var_emp = kNaN;
            if (cfg.trials > 1) {
                double ss = 0.0;
                for (int t = 0; t < cfg.trials; ++t) {
                    const double d = cell[t] - mean;
                    ss += d * d;
                }
                var_emp = ss / (cfg.trials - 1);
            }
            const double var_theory =
                variance_j_m_theory(pair.j_true, schemes[mi], k);
            double rel_dev = kNaN;
            if (!std::isnan(var_emp) && var_theory > 0.0)
                rel_dev = std::abs(var_emp - var_theory) / var_theory;

            const std::uint64_t cap =
                static_cast<std::uint64_t>(k) * cfg.trials;
            bool degenerate = false;
            for (const auto total : totals[mi * num_k + ki])
                degenerate = degenerate || total == 0 || total == cap;

            report.rows.push_back({cfg.m_list[mi], k, pair.j_true,
                                   mean - pair.j_true, var_emp, var_theory,
                                   rel_dev, degenerate});
        }
    }
    return report;
}

std::string report_to_csv(const BiasVarianceReport& report) {
    std::ostringstream out;
    out << "m,k,j_true,bias,var_emp,var_theory,rel_dev\n";
    for (const auto& row : report.rows) {
        out << row.m << ',' << row.k << ',' << format_cell(row.j_true) << ','
            << format_cell(row.bias) << ',' << format_cell(row.var_emp) << ','
            << format_cell(row.var_theory) << ',' << format_cell(row.rel_dev)
            << '\n';
    }
    return out.str();
}

std::vector<std::string> check_report(const BiasVarianceReport& report) {
    std::vector<std::string> violations;
    for (const auto& row : report.rows) {
        std::ostringstream cell;
        cell << "m=" << row.m << " k=" << row.k;
        const double bias_bound =
            4.0 * std::sqrt(row.var_theory / report.trials);
        if (!(std::abs(row.bias) < bias_bound)) {
            std::ostringstream msg;
            msg << cell.str() << ": |bias| " << std::abs(row.bias)
                << " exceeds " << bias_bound;
            violations.push_back(msg.str());
        }
        const bool variance_checked = report.trials >= 10000 && row.k >= 100 &&
                                      row.j_true >= 0.1 && row.j_true <= 0.9;
        if (variance_checked && !(row.rel_dev < 0.05)) {
            std::ostringstream msg;
            msg << cell.str() << ": rel_dev " << row.rel_dev
                << " exceeds 0.05";
            violations.push_back(msg.str());
        }
    }
    return violations;
}

}  // namespace pbhash
