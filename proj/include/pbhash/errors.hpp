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

#ifndef PBHASH_ERRORS_HPP
#define PBHASH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pbhash {

// Base of all library errors. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid parameters or incompatible objects (mismatched universes,
// scheme/width mismatches, malformed schemes).
class ConfigError : public Error {
public:
    using Error::Error;
};

// A value outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Similarity requested for two empty (or all-zero) vectors; the Jaccard
// ratio has an empty union and is undefined.
class UndefinedSimilarityError : public DomainError {
public:
    using DomainError::DomainError;
};

// Hash requested for an empty (or all-zero) vector; no minimum exists.
class UndefinedHashError : public DomainError {
public:
    using DomainError::DomainError;
};

// Two sketches cannot be compared (different width, provenance, or size).
class ComparabilityError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

// A request exceeds a hard implementation envelope (brute-force universe
// size, one-hot dimension overflow, permutation size).
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// Malformed input file or inconsistent records.
class InputError : public Error {
public:
    using Error::Error;
};

}  // namespace pbhash

#endif  // PBHASH_ERRORS_HPP
