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

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pbhash/core.hpp"
#include "pbhash/cws.hpp"
#include "pbhash/errors.hpp"
#include "pbhash/estimators.hpp"
#include "pbhash/featurizer.hpp"
#include "pbhash/io.hpp"
#include "pbhash/minhash.hpp"
#include "pbhash/random.hpp"
#include "pbhash/simulator.hpp"
#include "pbhash/types.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::string version_string() {
    std::ostringstream out;
    out << "pbhash " << kVersion << " (prng=" << pbhash::kPrngId
        << ", mixer=" << pbhash::kMixerId << ", rehash=keyed-" << pbhash::kMixerId
        << "x2)";
    return out.str();
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw pbhash::InputError("cannot open " + path + " for writing");
    return out;
}

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

struct HashArgs {
    std::string input;
    std::string output;
    int k = 0;
    int bits = 0;
    std::uint64_t seed = 0;
};

void add_hash_flags(CLI::App* cmd, HashArgs& args) {
    cmd->add_option("--input", args.input,
                    "Vector file: one vector per line, D<TAB>idx:weight ...")
        ->required();
    cmd->add_option("--k", args.k, "Number of hashes per vector")->required();
    cmd->add_option("--bits", args.bits, "Output bits B (1..64)")->required();
    cmd->add_option("--seed", args.seed, "Master seed (decimal 64-bit)")
        ->default_val("0");
    cmd->add_option("--output", args.output,
                    "Sketch file: one line per vector, B<TAB>v_1 ... v_k")
        ->required();
}

void run_hash_minhash(const HashArgs& args) {
    const auto vectors = pbhash::read_binary_vectors(args.input);
    std::vector<pbhash::HashSketch> sketches;
    sketches.reserve(vectors.size());
    for (const auto& v : vectors) {
        const pbhash::MinHashConfig cfg{v.universe_size(), args.k, args.seed,
                                        args.bits};
        sketches.push_back(pbhash::minhash_sketch(v, cfg));
    }
    pbhash::write_sketch_file(sketches, args.output);
}

void run_hash_cws(const HashArgs& args) {
    const auto vectors = pbhash::read_weighted_vectors(args.input);
    std::vector<pbhash::HashSketch> sketches;
    sketches.reserve(vectors.size());
    for (const auto& v : vectors)
        sketches.push_back(pbhash::cws_sketch(v, args.k, args.bits, args.seed));
    pbhash::write_sketch_file(sketches, args.output);
}

void run_partition(const std::string& input, const std::string& scheme_text,
                   const std::string& output) {
    const auto scheme = pbhash::parse_scheme(scheme_text);
    const auto sketches = pbhash::read_sketch_file(input);
    std::vector<pbhash::ChunkedSketch> chunked;
    chunked.reserve(sketches.size());
    for (const auto& s : sketches)
        chunked.push_back(pbhash::partition_sketch(s, scheme));
    pbhash::write_chunked_file(chunked, output);
}

void run_estimate(const std::string& path_a, const std::string& path_b,
                  std::size_t index_a, std::size_t index_b,
                  const std::string& scheme_text, double j_true,
                  bool have_j_true) {
    const auto scheme = pbhash::parse_scheme(scheme_text);
    const auto file_a = pbhash::read_sketch_file(path_a);
    const auto file_b = pbhash::read_sketch_file(path_b);
    if (index_a >= file_a.size() || index_b >= file_b.size())
        throw pbhash::InputError("estimate: sketch index beyond end of file");
    const auto& a = file_a[index_a];
    const auto& b = file_b[index_b];

    const auto stats = pbhash::collision_rate(
        pbhash::partition_sketch(a, scheme), pbhash::partition_sketch(b, scheme));
    std::cout << "k: " << stats.num_hashes << "\n";
    std::cout << "scheme: " << scheme_text << "\n";
    std::cout << "chunk_rates:";
    for (const auto rate : stats.per_chunk_rates)
        std::cout << ' ' << format_real(rate);
    std::cout << "\n";
    std::cout << "j_hat: " << format_real(pbhash::estimate_j_m(stats)) << "\n";
    if (have_j_true) {
        const auto report = pbhash::make_theory_report(
            j_true, scheme, static_cast<long>(stats.num_hashes));
        std::cout << "var_theory: " << format_real(report.variance_theory)
                  << "\n";
        std::cout << "variance_ratio: " << format_real(report.variance_ratio)
                  << "\n";
    }
}

void run_ratio_table(int total_bits, const std::string& m_list_text,
                     const std::string& grid_text, const std::string& output) {
    const auto m_list = pbhash::parse_int_list(m_list_text);
    const auto grid = pbhash::parse_grid(grid_text);
    for (const int m : m_list)
        if (m < 1 || total_bits % m != 0)
            throw pbhash::ConfigError("ratio-table: every m must divide B");
    auto out = open_output(output);
    out << "J,m,b,R_mb\n";
    for (const int m : m_list) {
        const int b = total_bits / m;
        for (const double j : grid)
            out << format_real(j) << ',' << m << ',' << b << ','
                << format_real(pbhash::variance_ratio_rmb(j, b, m)) << '\n';
    }
}

void run_lemma_curve(int b1, int b2, const std::string& grid_text,
                     const std::string& output) {
    const auto grid = pbhash::parse_grid(grid_text);
    auto out = open_output(output);
    out << "J,f\n";
    for (const double j : grid)
        out << format_real(j) << ','
            << format_real(pbhash::lemma_f(j, b1, b2)) << '\n';
}

struct SimulateArgs {
    std::string family = "minhash";
    int bits = 16;
    double j_target = 0.5;
    std::uint64_t universe = 1024;
    double density = 0.75;
    std::string pair_file;
    std::size_t pair_a = 0;
    std::size_t pair_b = 1;
    std::string k_grid = "10,100,1000";
    std::string m_list = "1";
    int trials = 10000;
    std::uint64_t seed = 0;
    std::string output;
    bool check = false;
};

void run_simulate(const SimulateArgs& args) {
    pbhash::SimConfig cfg;
    if (!args.pair_file.empty()) {
        cfg.pair_source =
            pbhash::FilePairSpec{args.pair_file, args.pair_a, args.pair_b};
    } else {
        cfg.pair_source = pbhash::SyntheticPairSpec{args.j_target,
                                                    args.universe,
                                                    args.density};
    }
    if (args.family == "minhash") {
        cfg.hash_family = pbhash::HashFamily::minhash;
    } else if (args.family == "cws") {
        cfg.hash_family = pbhash::HashFamily::cws;
    } else {
        throw pbhash::ConfigError("simulate: family must be minhash or cws");
    }
    cfg.bits = args.bits;
    cfg.k_grid = pbhash::parse_int_list(args.k_grid);
    cfg.m_list = pbhash::parse_int_list(args.m_list);
    cfg.trials = args.trials;
    cfg.master_seed = args.seed;

    const auto report = pbhash::run_trials(cfg);
    if (report.nearest_j_used)
        std::cerr << "warning: target J " << format_real(report.j_target)
                  << " not exactly realizable; using nearest J "
                  << format_real(report.j_true) << "\n";
    for (const auto& row : report.rows)
        if (row.degenerate)
            std::cerr << "warning: cell m=" << row.m << " k=" << row.k
                      << " saw a chunk with 0 or all collisions\n";

    auto out = open_output(args.output);
    out << pbhash::report_to_csv(report);
    out.close();

    if (args.check) {
        const auto violations = pbhash::check_report(report);
        if (!violations.empty()) {
            for (const auto& v : violations)
                std::cerr << "check failed: " << v << "\n";
            throw pbhash::Error("simulate --check: " +
                                std::to_string(violations.size()) +
                                " cell(s) out of tolerance");
        }
    }
}

void run_featurize(const std::string& sketches_path,
                   const std::string& scheme_text,
                   const std::string& labels_path,
                   const std::string& output) {
    const auto scheme = pbhash::parse_scheme(scheme_text);
    const auto sketches = pbhash::read_sketch_file(sketches_path);
    const auto labels = pbhash::read_labels(labels_path);
    if (labels.size() != sketches.size())
        throw pbhash::InputError("featurize: label count does not match "
                                 "sketch count");
    std::vector<std::pair<std::string, pbhash::ChunkedSketch>> examples;
    examples.reserve(sketches.size());
    for (std::size_t i = 0; i < sketches.size(); ++i)
        examples.emplace_back(labels[i],
                              pbhash::partition_sketch(sketches[i], scheme));
    pbhash::emit_dataset(examples, output);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partitioned b-bit hashing toolkit: MinHash/CWS sketching, "
                 "chunked similarity estimation, and Monte Carlo validation"};
    app.set_version_flag("--version", version_string());
    app.require_subcommand(0, 1);

    // hash
    auto* hash = app.add_subcommand("hash", "Sketch vectors from a file");
    hash->require_subcommand(1);
    HashArgs minhash_args;
    auto* hash_minhash = hash->add_subcommand(
        "minhash", "Permutation MinHash for binary vectors");
    add_hash_flags(hash_minhash, minhash_args);
    hash_minhash->callback([&] { run_hash_minhash(minhash_args); });
    HashArgs cws_args;
    auto* hash_cws = hash->add_subcommand(
        "cws", "Consistent weighted sampling for non-negative vectors");
    add_hash_flags(hash_cws, cws_args);
    hash_cws->callback([&] { run_hash_cws(cws_args); });

    // partition
    std::string part_input, part_scheme, part_output;
    std::uint64_t part_seed = 0;
    auto* partition = app.add_subcommand(
        "partition", "Split sketch values into chunks (low bits first)");
    partition->add_option("--input", part_input, "Sketch file")->required();
    partition
        ->add_option("--scheme", part_scheme,
                     "Chunk widths b_1,b_2,... summing to the sketch width")
        ->required();
    partition->add_option("--seed", part_seed, "Unused; accepted everywhere");
    partition
        ->add_option("--output", part_output,
                     "Chunked file: b_1,b_2,...<TAB>hash-major chunk values")
        ->required();
    partition->callback(
        [&] { run_partition(part_input, part_scheme, part_output); });

    // estimate
    std::string est_a, est_b, est_scheme;
    std::size_t est_index_a = 0, est_index_b = 0;
    double est_j_true = 0.0;
    std::uint64_t est_seed = 0;
    auto* estimate = app.add_subcommand(
        "estimate", "Chunked similarity estimate between two sketch files");
    estimate->add_option("--a", est_a, "First sketch file")->required();
    estimate->add_option("--b", est_b, "Second sketch file")->required();
    estimate->add_option("--index-a", est_index_a, "Line index in --a");
    estimate->add_option("--index-b", est_index_b, "Line index in --b");
    estimate->add_option("--scheme", est_scheme, "Chunk widths b_1,b_2,...")
        ->required();
    auto* j_true_opt = estimate->add_option(
        "--j-true", est_j_true, "True similarity; enables theory output");
    estimate->add_option("--seed", est_seed, "Unused; accepted everywhere");
    estimate->callback([&] {
        run_estimate(est_a, est_b, est_index_a, est_index_b, est_scheme,
                     est_j_true, !j_true_opt->empty());
    });

    // theory
    auto* theory = app.add_subcommand("theory", "Closed-form curve tables");
    theory->require_subcommand(1);
    int rt_bits = 0;
    std::string rt_m_list, rt_grid = "0.01:0.99:0.01", rt_output;
    std::uint64_t rt_seed = 0;
    auto* ratio_table = theory->add_subcommand(
        "ratio-table", "Variance ratio R_{m,b} over a J grid (CSV)");
    ratio_table->add_option("--B", rt_bits, "Total bits")->required();
    ratio_table->add_option("--m-list", rt_m_list, "Chunk counts, e.g. 1,2,4")
        ->required();
    ratio_table->add_option("--J-grid", rt_grid, "Grid start:stop:step");
    ratio_table->add_option("--seed", rt_seed, "Unused; accepted everywhere");
    ratio_table->add_option("--output", rt_output, "CSV path")->required();
    ratio_table->callback(
        [&] { run_ratio_table(rt_bits, rt_m_list, rt_grid, rt_output); });

    int lc_b1 = 0, lc_b2 = 0;
    std::string lc_grid = "0:1:0.01", lc_output;
    std::uint64_t lc_seed = 0;
    auto* lemma_curve = theory->add_subcommand(
        "lemma-curve", "Covariance term P_{b1+b2} - P_{b1}P_{b2} over J (CSV)");
    lemma_curve->add_option("--b1", lc_b1, "First chunk width")->required();
    lemma_curve->add_option("--b2", lc_b2, "Second chunk width")->required();
    lemma_curve->add_option("--J-grid", lc_grid, "Grid start:stop:step");
    lemma_curve->add_option("--seed", lc_seed, "Unused; accepted everywhere");
    lemma_curve->add_option("--output", lc_output, "CSV path")->required();
    lemma_curve->callback(
        [&] { run_lemma_curve(lc_b1, lc_b2, lc_grid, lc_output); });

    // simulate
    SimulateArgs sim;
    auto* simulate = app.add_subcommand(
        "simulate", "Monte Carlo bias/variance of the chunked estimator");
    simulate->set_config("--config", "",
                         "Flat key=value config file; flags take precedence");
    simulate->add_option("--family", sim.family, "minhash or cws")
        ->default_val("minhash");
    simulate->add_option("--B,--bits", sim.bits, "Hash bits")->default_val(16);
    simulate->add_option("--j-target", sim.j_target,
                         "Target similarity for the synthetic pair");
    simulate->add_option("--universe", sim.universe,
                         "Universe size for the synthetic pair");
    simulate->add_option("--density", sim.density,
                         "Union size as a fraction of the universe");
    simulate->add_option("--pair-file", sim.pair_file,
                         "Vector file; overrides the synthetic pair");
    simulate->add_option("--pair-a", sim.pair_a, "Line index of vector a");
    simulate->add_option("--pair-b", sim.pair_b, "Line index of vector b");
    simulate->add_option("--k-grid", sim.k_grid, "Hash counts, e.g. 10,100");
    simulate->add_option("--m-list", sim.m_list,
                         "Chunk counts; each must divide B");
    simulate->add_option("--trials", sim.trials, "Monte Carlo repetitions");
    simulate->add_option("--seed", sim.seed, "Master seed");
    simulate->add_option("--output", sim.output, "Report CSV path")->required();
    simulate->add_flag("--check", sim.check,
                       "Exit nonzero when a cell exceeds tolerance");
    simulate->callback([&] { run_simulate(sim); });

    // featurize
    std::string ft_sketches, ft_scheme, ft_labels, ft_output;
    std::uint64_t ft_seed = 0;
    auto* featurize = app.add_subcommand(
        "featurize", "One-hot expansion of chunked sketches (sparse text)");
    featurize->add_option("--sketches", ft_sketches, "Sketch file")->required();
    featurize->add_option("--scheme", ft_scheme, "Chunk widths b_1,b_2,...")
        ->required();
    featurize->add_option("--labels", ft_labels, "One label per line")
        ->required();
    featurize->add_option("--seed", ft_seed, "Unused; accepted everywhere");
    featurize->add_option("--output", ft_output, "Dataset path")->required();
    featurize->callback([&] {
        run_featurize(ft_sketches, ft_scheme, ft_labels, ft_output);
    });

    try {
        app.parse(argc, argv);
        if (app.get_subcommands().empty()) {
            std::cout << app.help();
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const pbhash::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
