#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "gramlab/slp.hpp"

// Transcoding between SLPs over an arbitrary alphabet c_0..c_{k-1} and SLPs over {a, b}
// under phi(c_i) = a^i b. Binary terminals: a = 0, b = 1.

namespace gramlab::bridge {

constexpr symbol_t sym_a = 0;
constexpr symbol_t sym_b = 1;

Word phi_encode_word(const Word& w, std::size_t k);

/// Throws not_in_image if v ends inside an a-run or has an a-run of length >= k.
Word phi_decode_word(const Word& v, std::size_t k);

/// Adds A_0 -> b and A_i -> a A_{i-1} and replaces c_i by A_i; size grows by exactly 2k - 1.
/// Throws precondition if some c_i (i < k) does not occur in val(g).
Slp encode_slp(const Slp& g, std::size_t k);

/// psi(val(A)) = left middle right.
struct PsiDecomposition {
    std::optional<symbol_t> left;
    /// Nonterminal producing m(val(A)); absent when m is empty.
    std::optional<nt_t> middle_nt;
    std::size_t right = 0;

    friend bool operator==(const PsiDecomposition&, const PsiDecomposition&) = default;
};

/// Symbol of an interleaved right-hand side: alphabet letter c_j, middle nonterminal A'_i, or digit.
struct PsiToken {
    enum class Kind : std::uint8_t { letter, middle, digit };
    Kind kind;
    std::uint32_t value;

    static PsiToken letter(symbol_t c) { return {Kind::letter, c}; }
    static PsiToken middle(nt_t a) { return {Kind::middle, a}; }
    static PsiToken digit(std::uint32_t d) { return {Kind::digit, d}; }

    friend bool operator==(const PsiToken&, const PsiToken&) = default;
};

struct DecodeStats {
    /// Tokens emitted plus rewrite steps; linear in size(b).
    std::size_t operations = 0;
};

/// Builds psi(v_0) l_1 A'_1 r_1 psi(v_1) ... for the right-hand side `alpha`, skipping
/// A'_i whose middle is empty.
std::vector<PsiToken> interleave(const Rhs& alpha, const std::map<nt_t, PsiDecomposition>& children,
                                 DecodeStats* stats = nullptr);

/// Normal form under i j -> (i+j) and i c_j -> c_{i+j}, computed in one sweep.
/// Throws not_in_image when a sum reaches k.
std::vector<PsiToken> reduce(const std::vector<PsiToken>& word, std::size_t k, DecodeStats* stats = nullptr);

/// Same rewrite system, applying a uniformly chosen applicable rule at each step.
std::vector<PsiToken> reduce_random_order(std::vector<PsiToken> word, std::size_t k, std::mt19937_64& rng);

/// Decodes one production given the decompositions of the nonterminals it references.
/// The new middle rule, if nonempty, is returned in `middle_rhs` and named `self`.
PsiDecomposition decode_production(nt_t self, const Rhs& alpha, const std::map<nt_t, PsiDecomposition>& children,
                                   std::size_t k, Rhs& middle_rhs, DecodeStats* stats = nullptr);

/// SLP for w from an SLP b for phi(w); size(result) <= 2 size(b).
Slp decode_slp(const Slp& b, std::size_t k, DecodeStats* stats = nullptr);

using BinaryCompressor = std::function<Slp(const Word&)>;

struct BridgeResult {
    Slp grammar;
    /// remap[i] = original symbol of dense symbol c_i.
    std::vector<symbol_t> remap;
    /// size of C(phi(w)).
    std::size_t binary_size = 0;
};

/// Dense remap, C on phi(w), decode, map back.
BridgeResult compressor_D(const Word& w, const BinaryCompressor& c);

/// Dense renaming of the symbols occurring in w, ascending; returns the remapped word.
Word dense_remap(const Word& w, std::vector<symbol_t>& remap);

} // namespace gramlab::bridge
