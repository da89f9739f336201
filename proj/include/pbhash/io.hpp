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

#ifndef PBHASH_IO_HPP
#define PBHASH_IO_HPP

#include <string>
#include <vector>

#include "pbhash/types.hpp"

namespace pbhash {

// Shared sparse vector text format: one vector per line,
//   D<TAB>idx:weight idx:weight ...
// with strictly increasing indices; binary vectors use weight 1. A line
// holding only D is an empty vector.

SparseWeightedVector parse_vector_line(const std::string& line);
std::string format_vector_line(const SparseWeightedVector& v);

std::vector<SparseWeightedVector> read_weighted_vectors(
    const std::string& path);

// Same file format, but every weight must be exactly 1.
std::vector<SparseBinaryVector> read_binary_vectors(const std::string& path);

void write_vectors(const std::vector<SparseWeightedVector>& vectors,
                   const std::string& path);

// Sketch text format: one line per vector, B<TAB>v_1 v_2 ... v_k with
// decimal values. Provenance is not persisted; loaded sketches carry an
// empty scheme_id.
std::string format_sketch_line(const HashSketch& sketch);
std::vector<HashSketch> read_sketch_file(const std::string& path);
void write_sketch_file(const std::vector<HashSketch>& sketches,
                       const std::string& path);

// Chunked sketch text format: one line per vector,
//   b_1,b_2,...<TAB>c_{1,1} ... c_{1,m} c_{2,1} ...
// with hash-major chunk values.
std::string format_chunked_line(const ChunkedSketch& sketch);
void write_chunked_file(const std::vector<ChunkedSketch>& sketches,
                        const std::string& path);

// One label token per line.
std::vector<std::string> read_labels(const std::string& path);

// Comma-separated chunk widths, e.g. "4,4" or "8".
PartitionScheme parse_scheme(const std::string& text);

// Grid spec "start:stop:step", inclusive of both ends up to rounding.
std::vector<double> parse_grid(const std::string& text);

// Comma-separated integer list, e.g. "1,2,4,8,16".
std::vector<int> parse_int_list(const std::string& text);

}  // namespace pbhash

#endif  // PBHASH_IO_HPP
