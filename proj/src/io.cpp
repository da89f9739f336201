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

#include "pbhash/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pbhash/errors.hpp"

namespace pbhash {

namespace {

std::uint64_t parse_u64(const std::string& token, const char* what) {
    std::uint64_t value = 0;
    const auto* begin = token.data();
    const auto* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw InputError(std::string("invalid ") + what + ": '" + token + "'");
    return value;
}

double parse_weight(const std::string& token) {
    try {
        std::size_t used = 0;
        const double w = std::stod(token, &used);
        if (used != token.size()) throw InputError("");
        return w;
    } catch (...) {
        throw InputError("invalid weight: '" + token + "'");
    }
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::ifstream open_for_read(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return in;
}

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open " + path + " for writing");
    return out;
}

}  // namespace

SparseWeightedVector parse_vector_line(const std::string& line) {
    const auto tab = line.find('\t');
    const std::string head = line.substr(0, tab);
    const std::uint64_t universe = parse_u64(head, "universe size");

    std::vector<WeightedEntry> entries;
    if (tab != std::string::npos) {
        std::istringstream rest(line.substr(tab + 1));
        std::string token;
        while (rest >> token) {
            const auto colon = token.find(':');
            if (colon == std::string::npos)
                throw InputError("missing ':' in entry '" + token + "'");
            const std::uint64_t index =
                parse_u64(token.substr(0, colon), "index");
            const double weight = parse_weight(token.substr(colon + 1));
            entries.push_back({index, weight});
        }
    }
    try {
        return SparseWeightedVector(universe, std::move(entries));
    } catch (const ConfigError& e) {
        throw InputError(std::string("bad vector line: ") + e.what());
    }
}

std::string format_vector_line(const SparseWeightedVector& v) {
    std::ostringstream out;
    out << v.universe_size();
    bool first = true;
    for (const auto& e : v.entries()) {
        out << (first ? "\t" : " ") << e.index << ':' << format_double(e.weight);
        first = false;
    }
    return out.str();
}

std::vector<SparseWeightedVector> read_weighted_vectors(
    const std::string& path) {
    auto in = open_for_read(path);
    std::vector<SparseWeightedVector> vectors;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            vectors.push_back(parse_vector_line(line));
        } catch (const InputError& e) {
            throw InputError(path + ":" + std::to_string(line_no) + ": " +
                             e.what());
        }
    }
    return vectors;
}

std::vector<SparseBinaryVector> read_binary_vectors(const std::string& path) {
    std::vector<SparseBinaryVector> vectors;
    std::size_t line_no = 0;
    for (const auto& v : read_weighted_vectors(path)) {
        ++line_no;
        std::vector<std::uint64_t> positions;
        positions.reserve(v.entries().size());
        for (const auto& e : v.entries()) {
            if (e.weight != 1.0)
                throw InputError(path + ":" + std::to_string(line_no) +
                                 ": binary vectors must use weight 1");
            positions.push_back(e.index);
        }
        vectors.emplace_back(v.universe_size(), std::move(positions));
    }
    return vectors;
}

void write_vectors(const std::vector<SparseWeightedVector>& vectors,
                   const std::string& path) {
    auto out = open_for_write(path);
    for (const auto& v : vectors) out << format_vector_line(v) << '\n';
    if (!out) throw InputError("write failed for " + path);
}

std::string format_sketch_line(const HashSketch& sketch) {
    std::ostringstream out;
    out << sketch.bit_width() << '\t';
    bool first = true;
    for (const auto v : sketch.values()) {
        if (!first) out << ' ';
        out << v;
        first = false;
    }
    return out.str();
}

std::vector<HashSketch> read_sketch_file(const std::string& path) {
    auto in = open_for_read(path);
    std::vector<HashSketch> sketches;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw InputError(path + ":" + std::to_string(line_no) +
                             ": missing tab after bit width");
        try {
            const auto bits = parse_u64(line.substr(0, tab), "bit width");
            std::istringstream rest(line.substr(tab + 1));
            std::vector<std::uint64_t> values;
            std::string token;
            while (rest >> token) values.push_back(parse_u64(token, "value"));
            sketches.emplace_back(static_cast<int>(bits), std::move(values));
        } catch (const Error& e) {
            throw InputError(path + ":" + std::to_string(line_no) + ": " +
                             e.what());
        }
    }
    return sketches;
}

void write_sketch_file(const std::vector<HashSketch>& sketches,
                       const std::string& path) {
    auto out = open_for_write(path);
    for (const auto& s : sketches) out << format_sketch_line(s) << '\n';
    if (!out) throw InputError("write failed for " + path);
}

std::string format_chunked_line(const ChunkedSketch& sketch) {
    std::ostringstream out;
    const auto& widths = sketch.scheme().chunk_widths();
    for (std::size_t i = 0; i < widths.size(); ++i)
        out << (i ? "," : "") << widths[i];
    out << '\t';
    bool first = true;
    for (std::size_t j = 0; j < sketch.num_hashes(); ++j)
        for (int i = 0; i < sketch.scheme().num_chunks(); ++i) {
            if (!first) out << ' ';
            out << sketch.chunk(j, i);
            first = false;
        }
    return out.str();
}

void write_chunked_file(const std::vector<ChunkedSketch>& sketches,
                        const std::string& path) {
    auto out = open_for_write(path);
    for (const auto& s : sketches) out << format_chunked_line(s) << '\n';
    if (!out) throw InputError("write failed for " + path);
}

std::vector<std::string> read_labels(const std::string& path) {
    auto in = open_for_read(path);
    std::vector<std::string> labels;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream tokens(line);
        std::string label;
        if (tokens >> label) labels.push_back(label);
    }
    return labels;
}

PartitionScheme parse_scheme(const std::string& text) {
    const auto widths = parse_int_list(text);
    try {
        return PartitionScheme(widths);
    } catch (const ConfigError& e) {
        throw InputError(std::string("bad scheme '") + text + "': " + e.what());
    }
}

std::vector<double> parse_grid(const std::string& text) {
    std::istringstream in(text);
    std::string a, b, c;
    if (!std::getline(in, a, ':') || !std::getline(in, b, ':') ||
        !std::getline(in, c))
        throw InputError("grid spec must be start:stop:step, got '" + text +
                         "'");
    double start = 0, stop = 0, step = 0;
    try {
        start = std::stod(a);
        stop = std::stod(b);
        step = std::stod(c);
    } catch (...) {
        throw InputError("invalid grid spec '" + text + "'");
    }
    if (!(step > 0) || stop < start)
        throw InputError("grid spec requires step > 0 and stop >= start");
    std::vector<double> grid;
    for (long i = 0;; ++i) {
        const double v = start + static_cast<double>(i) * step;
        if (v > stop + step * 1e-9) break;
        grid.push_back(v);
    }
    return grid;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(token, &used);
            if (used != token.size()) throw InputError("");
            values.push_back(v);
        } catch (...) {
            throw InputError("invalid integer '" + token + "' in list '" +
                             text + "'");
        }
    }
    if (values.empty()) throw InputError("empty integer list '" + text + "'");
    return values;
}

}  // namespace pbhash
