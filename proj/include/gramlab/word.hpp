#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gramlab {

using symbol_t = std::uint32_t;

/// A finite word over the dense alphabet [0, alphabet_size).
struct Word {
    std::vector<symbol_t> symbols;
    std::size_t alphabet_size = 0;

    Word() = default;
    Word(std::vector<symbol_t> syms, std::size_t sigma);

    /// Alphabet size is inferred as 1 + max id in use.
    static Word from(std::vector<symbol_t> syms);
    static Word from(std::initializer_list<symbol_t> syms);

    std::size_t size() const noexcept { return symbols.size(); }
    bool empty() const noexcept { return symbols.empty(); }
    symbol_t operator[](std::size_t i) const { return symbols[i]; }
    std::span<const symbol_t> view() const noexcept { return symbols; }

    /// Number of distinct symbol ids that actually occur.
    std::size_t distinct_symbols() const;

    friend bool operator==(const Word& a, const Word& b) { return a.symbols == b.symbols; }
};

/// Display table mapping symbol ids to characters.
class Alphabet {
public:
    Alphabet() : Alphabet(std::string("abcdefghijklmnopqrstuvwxyz")) {}
    explicit Alphabet(std::string chars);

    /// 'a'=0, 'b'=1, ...
    static Alphabet letters() { return Alphabet{}; }
    /// '0'=0, '1'=1, 'a'=2 (the ternary alphabet of the bisection family).
    static Alphabet bits_and_a() { return Alphabet{"01a"}; }
    static Alphabet bits() { return Alphabet{"01"}; }

    const std::string& chars() const noexcept { return m_chars; }
    std::size_t size() const noexcept { return m_chars.size(); }
    bool covers(std::size_t sigma) const noexcept { return sigma <= m_chars.size(); }

    char char_of(symbol_t id) const;
    symbol_t id_of(char c) const;

private:
    std::string m_chars;
    int m_index[256] = {};
    void build_index();
};

Word parse_word(std::string_view text, const Alphabet& alphabet = {});
std::string to_string(const Word& w, const Alphabet& alphabet = {});

/// Space-separated integer rendering used by the `int` word format.
std::string to_int_string(const Word& w);

/// a^n
Word repeat_symbol(symbol_t s, std::size_t n, std::size_t sigma = 0);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, std::size_t n);

} // namespace gramlab
