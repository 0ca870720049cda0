#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gramlab/slp.hpp"

namespace gramlab {

// ---------------------------------------------------------------------------
// BISECTION

/// Splits w = w1 w2 with |w1| the largest power of two strictly below |w| and recurses;
/// equal factors share one nonterminal. Every non-start rule has exactly two tokens.
Slp bisection(const Word& w);

// ---------------------------------------------------------------------------
// LZ78

struct Lz78Factorization {
    /// f_1 .. f_l; the last factor may be empty and always equals an earlier one (or epsilon).
    std::vector<Word> factors;
    /// refs[i] = (j, a) with f_{i+1} = f_j a, for every factor but the last; j = 0 is epsilon.
    std::vector<std::pair<std::size_t, symbol_t>> refs;
    /// f_l = f_{last_ref}; 0 when the last factor is empty.
    std::size_t last_ref = 0;

    std::size_t count() const noexcept { return factors.size(); }
    /// Factor count excluding a trailing empty factor.
    std::size_t nonempty_count() const noexcept {
        return factors.empty() ? 0 : factors.size() - (factors.back().empty() ? 1 : 0);
    }
};

Lz78Factorization lz78_factorize(const Word& w);

/// F_i -> F_j a per factor plus a start rule over F_1 .. F_{l-1} and the last factor.
/// Nonterminal F_i has id i; the start has id 0.
Slp lz78(const Word& w);
Slp lz78(const Lz78Factorization& f);

// ---------------------------------------------------------------------------
// RePair

enum class RepairVariant { maximal_string, digram };

const char* to_string(RepairVariant v) noexcept;
RepairVariant parse_repair_variant(const std::string& name);

struct RepairRound {
    std::vector<Token> selected;
    std::size_t count = 0;
    nt_t nonterminal = 0;
    std::size_t size_after = 0;
};

struct RepairTrace {
    std::size_t initial_size = 0;
    std::vector<RepairRound> rounds;
};

struct RepairResult {
    Slp grammar;
    RepairTrace trace;
};

/// Starts from {S -> w}; each round replaces the leftmost-greedy non-overlapping
/// occurrences of the selected string by a fresh nonterminal X_r (id r; start has id 0).
///
/// Selection: maximal_string picks a most frequent maximal string, longest first, then
/// earliest first occurrence; digram picks a most frequent pair, earliest first occurrence.
/// Right-hand sides are scanned children-first (X_1, X_2, ..., S) and occurrences never
/// span two rules.
RepairResult repair(const Word& w, RepairVariant variant = RepairVariant::maximal_string);

/// CSV with header `round,string,count,size`; tokens rendered as t:<id> / n:<id>.
void write_trace_csv(std::ostream& out, const RepairTrace& trace);

struct MaximalString {
    std::vector<Token> tokens;
    std::size_t count = 0;
    friend bool operator==(const MaximalString&, const MaximalString&) = default;
};

/// All maximal strings of g with their non-overlapping occurrence counts, ordered by
/// count (desc), length (desc), then first occurrence.
std::vector<MaximalString> maximal_strings(const Slp& g);

// ---------------------------------------------------------------------------
// selection by name

enum class Algorithm { bisection, lz78, repair, repair_digram };

const char* to_string(Algorithm a) noexcept;
/// bisection | lz78 | repair | repair-digram
Algorithm parse_algorithm(const std::string& name);
/// repair with an explicit variant maps to repair / repair_digram.
Algorithm repair_algorithm(RepairVariant v) noexcept;
Slp run_compressor(Algorithm a, const Word& w);

namespace detail {

/// Right-hand sides of g concatenated children-first, each followed by a separator.
std::vector<Token> flatten_rules(const Slp& g, std::vector<nt_t>* rule_order = nullptr);

struct RepeatedFactor {
    std::vector<Token> tokens;
    std::size_t count = 0;
    /// All (possibly overlapping) start positions in the flattened sequence, ascending.
    std::vector<std::uint32_t> positions;
};

/// Factors of length >= 2 whose greedy non-overlapping count is >= threshold, grouped by
/// length: levels[i] holds length i + 2. Separators never occur inside a factor.
std::vector<std::vector<RepeatedFactor>> repeated_factors(const std::vector<Token>& seq,
                                                          std::size_t threshold);

} // namespace detail

} // namespace gramlab
