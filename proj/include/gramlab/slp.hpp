#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gramlab/error.hpp"
#include "gramlab/word.hpp"

namespace gramlab {

using nt_t = std::uint32_t;

/// Unsigned 128-bit length; expansion lengths of composed grammars can be astronomically large.
using length_t = unsigned __int128;

std::string to_string(length_t v);

/// A right-hand-side symbol: either a terminal id or a nonterminal id.
/// Packed into 32 bits; the top two bits hold the kind.
class Token {
public:
    enum class Kind : std::uint8_t { terminal = 0, nonterminal = 1, separator = 2 };

    static constexpr std::uint32_t max_id = (1u << 30) - 1;

    constexpr Token() = default;

    static constexpr Token terminal(symbol_t id) { return Token{Kind::terminal, id}; }
    static constexpr Token nonterminal(nt_t id) { return Token{Kind::nonterminal, id}; }
    /// Internal marker used by pattern-counting code to keep rules apart.
    static constexpr Token separator(std::uint32_t id) { return Token{Kind::separator, id}; }

    constexpr Kind kind() const { return static_cast<Kind>(m_raw >> 30); }
    constexpr std::uint32_t id() const { return m_raw & max_id; }
    constexpr bool is_terminal() const { return kind() == Kind::terminal; }
    constexpr bool is_nonterminal() const { return kind() == Kind::nonterminal; }
    constexpr bool is_separator() const { return kind() == Kind::separator; }
    constexpr std::uint32_t raw() const { return m_raw; }

    constexpr auto operator<=>(const Token&) const = default;

private:
    constexpr Token(Kind k, std::uint32_t id)
        : m_raw((static_cast<std::uint32_t>(k) << 30) | (id & max_id)) {}
    std::uint32_t m_raw = 0;
};

using Rhs = std::vector<Token>;

/// Shorthand for terminal / nonterminal tokens in literals and tests.
constexpr Token T(symbol_t id) { return Token::terminal(id); }
constexpr Token N(nt_t id) { return Token::nonterminal(id); }

/// A straight-line program: one right-hand side per nonterminal plus a start symbol.
///
/// The container itself does not enforce the SLP conditions (acyclicity, no dangling
/// references); `validate` reports violations and the algebra below requires a valid
/// input.
class Slp {
public:
    Slp() = default;
    Slp(nt_t start, std::map<nt_t, Rhs> rules)
        : m_start(start), m_rules(std::move(rules)) {}

    nt_t start() const noexcept { return m_start; }
    void set_start(nt_t s) noexcept { m_start = s; }

    const std::map<nt_t, Rhs>& rules() const noexcept { return m_rules; }
    bool has_rule(nt_t a) const { return m_rules.count(a) != 0; }
    const Rhs& rhs(nt_t a) const;
    void set_rule(nt_t a, Rhs rhs) { m_rules[a] = std::move(rhs); }
    void erase_rule(nt_t a) { m_rules.erase(a); }
    std::size_t rule_count() const noexcept { return m_rules.size(); }

    /// Smallest id strictly above every nonterminal in use (including the start).
    nt_t fresh_id() const;

    /// Sum of right-hand-side lengths.
    std::size_t size() const;

    friend bool operator==(const Slp& a, const Slp& b) = default;

private:
    nt_t m_start = 0;
    std::map<nt_t, Rhs> m_rules;
};

// ---------------------------------------------------------------------------
// validation

struct Violation {
    enum class Kind { missing_start, empty_rhs, dangling_reference, cycle };
    Kind kind;
    /// The offending nonterminal(s): the rule owner, the dangling target, or the cycle members.
    std::vector<nt_t> nonterminals;
    std::string message;
};

struct ValidationResult {
    std::vector<Violation> violations;
    bool ok() const noexcept { return violations.empty(); }
    explicit operator bool() const noexcept { return ok(); }
};

ValidationResult validate(const Slp& g);

/// Throws GrammarError(invalid_slp) listing every violation.
void require_valid(const Slp& g);

/// Nonterminals reachable from the start, children before parents.
std::vector<nt_t> topological_order(const Slp& g);

// ---------------------------------------------------------------------------
// evaluation

/// Length of val(nt) for every reachable nonterminal, computed without expanding.
/// Throws GrammarError(length_overflow) if a length does not fit in 127 bits.
std::map<nt_t, length_t> expansion_lengths(const Slp& g);
length_t expansion_length(const Slp& g, nt_t nt);
length_t expansion_length(const Slp& g);

constexpr std::size_t default_length_cap = std::size_t{1} << 32;

/// val(g). Throws cap_exceeded if |val(g)| > length_cap.
Word expand(const Slp& g, std::size_t length_cap = default_length_cap);
/// val(nt) for a non-start nonterminal.
Word expand_nonterminal(const Slp& g, nt_t nt, std::size_t length_cap = default_length_cap);

std::size_t size(const Slp& g);

// ---------------------------------------------------------------------------
// constructions

/// {S -> w}
Slp trivial(const Word& w);

/// Block-table SLP of size O(n / log_sigma n).
Slp build_block(const Word& w);

/// val = val(g)^n by repeated squaring.
Slp power(const Slp& g, std::uint64_t n);

/// val = val(a) val(b) with size(a) + size(b).
Slp concat(const Slp& a, const Slp& b);

/// Replaces the terminal x in `pattern` by val(replacement).
Slp substitute(const Slp& pattern, const Slp& replacement, symbol_t x);

/// Symbol-wise image under a morphism: terminal t becomes image[t] (nonempty).
Slp apply_morphism(const Slp& g, const std::vector<std::vector<symbol_t>>& image);

/// Renames every terminal id t to rename[t].
Slp rename_terminals(const Slp& g, const std::vector<symbol_t>& rename);

/// Adds `offset` to every nonterminal id.
Slp shift_nonterminals(const Slp& g, nt_t offset);

/// Drops rules unreachable from the start.
Slp prune(const Slp& g);

/// Renumbers nonterminals by first visit in a left-to-right preorder walk from the
/// start (start becomes 0). Two SLPs equal up to renaming have equal canonical forms.
Slp canonicalize(const Slp& g);

/// Terminal ids occurring in reachable rules, ascending.
std::vector<symbol_t> terminals_used(const Slp& g);

// ---------------------------------------------------------------------------
// lower bounds

/// max over k in [1, max_k] of ceil(d_k / k), d_k = number of distinct length-k factors.
std::size_t distinct_factor_lower_bound(const Word& w, std::size_t max_k);

} // namespace gramlab
