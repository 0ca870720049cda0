#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gramlab/compressors.hpp"
#include "gramlab/slp.hpp"

namespace gramlab::oracle {

/// Longest word the exact search accepts.
constexpr std::size_t max_exact_length = 13;
constexpr std::uint64_t default_budget = 50'000'000;

struct ExactResult {
    std::size_t size = 0;
    Slp witness;
    /// Candidate rule sets whose cost was evaluated.
    std::uint64_t evaluated = 0;
};

/// g(w) by exhaustive search over sets of repeated factors.
///
/// Every SLP can be inlined into one whose non-start rules have length >= 2 and are
/// referenced at least twice without growing; the values of such rules are factors of
/// length 2..|w|/2 with two non-overlapping occurrences. For each candidate set the
/// cheapest SLP whose rule values are exactly that set is a shortest-parse computation,
/// so the minimum over candidate sets is g(w). Throws length_limit past `max_length`
/// and budget_exceeded once more than `budget` sets have been costed.
ExactResult smallest_slp_exact(const Word& w, std::uint64_t budget = default_budget,
                               std::size_t max_length = max_exact_length);

struct GBounds {
    std::size_t lower = 0;
    std::size_t upper = 0;
    Slp upper_witness;
    /// Name of the source of upper_witness: a compressor, "trivial", "witness" or "exact".
    std::string upper_source;
    std::optional<std::size_t> exact;
};

/// lower = max(distinct-factor bound for lengths <= 8, number of distinct symbols);
/// upper = smallest of the trivial grammar, the requested compressors and `witness`.
/// When `exact_budget` is set and |w| <= max_exact_length the exact search also runs.
GBounds g_bounds(const Word& w, const std::vector<Algorithm>& compressors, const Slp* witness = nullptr,
                 std::optional<std::uint64_t> exact_budget = std::nullopt);

struct Prop2Row {
    std::size_t n = 0;
    std::uint64_t words = 0;
    std::uint64_t incompressible = 0;
    std::vector<symbol_t> example;
};

struct Prop2Report {
    std::size_t k = 0;
    /// 2k^2 + 2k + 1
    std::size_t n_k = 0;
    std::vector<Prop2Row> rows;
    /// Incompressible words exist for every n <= n_k and none for n_k < n <= n_max.
    bool boundary_holds = false;
};

constexpr std::size_t prop2_max_length = 14;

/// Exhaustive sweep of the compressibility predicate over all k^n words, n = 1..n_max.
Prop2Report verify_prop2(std::size_t k, std::size_t n_max);

struct PredicateCheck {
    std::uint64_t words = 0;
    std::uint64_t mismatches = 0;
    std::vector<symbol_t> first_mismatch;
};

/// Compares g(w) < |w| (exact search) with the predicate for all words over [0, k) of
/// length 1..max_len.
PredicateCheck cross_validate_predicate(std::size_t k, std::size_t max_len);

} // namespace gramlab::oracle
