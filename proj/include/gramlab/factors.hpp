#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gramlab/word.hpp"

// Data-parallel factor statistics. Each kernel has an OpenMP implementation in
// `kernels` and a straightforward serial reference in `kernels::serial` that the
// tests and the benchmark compare against.

namespace gramlab::kernels {

/// counts[k-1] = number of distinct length-k factors of w, for k = 1..max_k.
std::vector<std::size_t> distinct_factor_counts(std::span<const symbol_t> w, std::size_t max_k);

/// Greedy left-to-right count of pairwise non-overlapping occurrences of `pattern` in `text`.
std::size_t nonoverlapping_count(std::span<const symbol_t> text, std::span<const symbol_t> pattern);

/// True iff some factor of length `ell` has at least `n` pairwise non-overlapping occurrences.
bool has_repeated_factor(std::span<const symbol_t> w, std::size_t n, std::size_t ell);

/// True iff w has a length-2 factor occurring 3 times or a length-3 factor occurring twice,
/// both counted without overlap.
bool is_compressible(std::span<const symbol_t> w);

struct SweepResult {
    std::uint64_t words = 0;
    std::uint64_t incompressible = 0;
    /// Smallest (in base-k order) incompressible word, if any.
    std::vector<symbol_t> example;
    bool has_example = false;
};

/// Exhaustive sweep over all k^n words of length n over [0, k).
SweepResult incompressible_sweep(std::uint32_t k, std::size_t n);

namespace serial {

std::vector<std::size_t> distinct_factor_counts(std::span<const symbol_t> w, std::size_t max_k);
bool has_repeated_factor(std::span<const symbol_t> w, std::size_t n, std::size_t ell);
SweepResult incompressible_sweep(std::uint32_t k, std::size_t n);

} // namespace serial

/// Decodes index `idx` into a base-k word of length n (most significant symbol first).
void word_from_index(std::uint64_t idx, std::uint32_t k, std::size_t n, std::vector<symbol_t>& out);

} // namespace gramlab::kernels
