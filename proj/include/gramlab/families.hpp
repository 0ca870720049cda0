#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gramlab/slp.hpp"

namespace gramlab::families {

enum class Family { bisection, bisection_binary, lz78, repair, incompressible };

const char* to_string(Family f) noexcept;
Family parse_family(const std::string& name);

/// Closed-form statistics the family construction predicts for its word.
struct Predicted {
    /// bisection: the block set F_k (or its binary image); empty otherwise.
    std::vector<Word> factor_set;
    /// bisection: (m_k + 1) k; lz78: k + 2m + k(2m+2) + k^2 m; 0 when not applicable.
    std::size_t factor_count = 0;
    /// lz78: whether factor_count is backed by the even-m analysis.
    bool count_asserted = true;
    /// bisection: block length 2^(k - ceil log2 k) (doubled for the binary image).
    std::size_t block_length = 0;
    /// repair: the exponents of the a-blocks, i.e. the integer values of w_k[1 : k+i].
    std::vector<std::uint64_t> block_exponents;
    /// repair: w_k = h(B[1:k]).
    std::vector<symbol_t> repair_bits;
};

struct FamilyInstance {
    Family family;
    std::size_t k = 0;
    std::optional<std::size_t> m;
    Word word;
    Alphabet alphabet;
    Slp witness;
    Predicted predicted;
};

// ---------------------------------------------------------------------------
// BISECTION family

/// ceil(log2 k)
std::size_t ceil_log2(std::uint64_t k);

/// Binary representation of j padded to ceil(log2 k) bits (symbols 0/1).
Word bin_pad(std::size_t k, std::size_t j);

/// m_k = 2^(k - ceil log2 k) - ceil log2 k; throws when m_k < 1.
std::size_t bisection_m(std::size_t k);

/// u_k over {0, 1, a} (ids 0, 1, 2).
Word bisection_u(std::size_t k);

/// The factor set F_k = { a^i bin_k(j) a^(m_k - i) } in block order.
std::vector<Word> bisection_factor_set(std::size_t k);

/// s_k = (u_k a^(m_k+1))^m_k u_k with the composed witness grammar.
FamilyInstance bisection_hard(std::size_t k);

/// f(0) = 00, f(1) = 01, f(a) = 10.
Word binary_image(const Word& ternary);

/// f(s_k) with the symbol-wise image of the ternary witness.
FamilyInstance bisection_hard_binary(std::size_t k);

// ---------------------------------------------------------------------------
// LZ78 family (a = 0, b = 1)

Word lz78_u(std::size_t m, std::size_t k);
Word lz78_v(std::size_t m, std::size_t k);

/// k + 2m + k(2m+2) + k^2 m
std::size_t lz78_predicted_factors(std::size_t m, std::size_t k);

/// s_{m,k} = a^(k(k+1)/2) b^(m(2m+1)) u_{m,k} v_{m,k}
FamilyInstance lz78_hard(std::size_t m, std::size_t k);

// ---------------------------------------------------------------------------
// RePair family (a = 0, b = 1)

struct DeBruijn {
    std::size_t order = 0;
    Word bits;
};

/// Prefer-one De Bruijn sequence of order n, rotated to start with 1^n.
DeBruijn de_bruijn(std::size_t n);

/// w_k = h(B_{ceil log2 k}[1:k]) with h(0) = 01, h(1) = 10.
std::vector<symbol_t> repair_bits(std::size_t k);

/// Value of bits[0 : len) read most significant bit first.
std::uint64_t prefix_value(const std::vector<symbol_t>& bits, std::size_t len);

/// Total length of s_k without building it.
std::uint64_t repair_word_length(std::size_t k);

/// s_k = prod_{i=1}^{k-1} (a^{w_k[1:k+i]} b) a^{w_k}
FamilyInstance repair_hard(std::size_t k);

// ---------------------------------------------------------------------------
// incompressible words

/// w_k over a_1..a_k (ids 0..k-1), length 2k^2 + 2k + 1.
FamilyInstance incompressible_word(std::size_t k);

/// Some length-ell factor has at least n pairwise non-overlapping occurrences.
bool in_M(const Word& w, std::size_t n, std::size_t ell);

/// in_M(w, 3, 2) or in_M(w, 2, 3).
bool is_compressible(const Word& w);

} // namespace gramlab::families
