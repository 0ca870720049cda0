#include "gramlab/word.hpp"

#include <algorithm>
#include <unordered_set>

#include "gramlab/error.hpp"

namespace gramlab {

const char* to_string(Errc code) noexcept {
    switch (code) {
    case Errc::invalid_slp: return "invalid-slp";
    case Errc::cap_exceeded: return "cap-exceeded";
    case Errc::length_overflow: return "length-overflow";
    case Errc::empty_word: return "empty-word";
    case Errc::precondition: return "precondition";
    case Errc::out_of_range: return "out-of-range";
    case Errc::parse: return "parse";
    case Errc::not_in_image: return "not-in-image";
    case Errc::budget_exceeded: return "budget-exceeded";
    case Errc::length_limit: return "length-limit";
    case Errc::round_trip: return "round-trip";
    }
    return "unknown";
}

Word::Word(std::vector<symbol_t> syms, std::size_t sigma)
    : symbols(std::move(syms)), alphabet_size(sigma) {
    for (auto s : symbols) {
        if (s >= alphabet_size) {
            throw GrammarError(Errc::out_of_range,
                               "symbol " + std::to_string(s) + " outside alphabet of size " +
                                   std::to_string(alphabet_size));
        }
    }
}

Word Word::from(std::vector<symbol_t> syms) {
    std::size_t sigma = 0;
    for (auto s : syms) sigma = std::max<std::size_t>(sigma, std::size_t{s} + 1);
    Word w;
    w.symbols = std::move(syms);
    w.alphabet_size = sigma;
    return w;
}

Word Word::from(std::initializer_list<symbol_t> syms) {
    return from(std::vector<symbol_t>(syms));
}

std::size_t Word::distinct_symbols() const {
    std::unordered_set<symbol_t> seen(symbols.begin(), symbols.end());
    return seen.size();
}

Alphabet::Alphabet(std::string chars) : m_chars(std::move(chars)) { build_index(); }

void Alphabet::build_index() {
    std::fill(std::begin(m_index), std::end(m_index), -1);
    for (std::size_t i = 0; i < m_chars.size(); ++i) {
        auto c = static_cast<unsigned char>(m_chars[i]);
        if (m_index[c] != -1) {
            throw GrammarError(Errc::parse, std::string("duplicate alphabet character '") +
                                                m_chars[i] + "'");
        }
        m_index[c] = static_cast<int>(i);
    }
}

char Alphabet::char_of(symbol_t id) const {
    if (id >= m_chars.size()) {
        throw GrammarError(Errc::out_of_range,
                           "symbol " + std::to_string(id) + " has no display character");
    }
    return m_chars[id];
}

symbol_t Alphabet::id_of(char c) const {
    int id = m_index[static_cast<unsigned char>(c)];
    if (id < 0) {
        throw GrammarError(Errc::parse, std::string("character '") + c + "' not in alphabet \"" +
                                            m_chars + "\"");
    }
    return static_cast<symbol_t>(id);
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
    std::vector<symbol_t> syms;
    syms.reserve(text.size());
    for (char c : text) syms.push_back(alphabet.id_of(c));
    return Word::from(std::move(syms));
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
    std::string out;
    out.reserve(w.size());
    for (auto s : w.symbols) out.push_back(alphabet.char_of(s));
    return out;
}

std::string to_int_string(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(w.symbols[i]);
    }
    return out;
}

Word repeat_symbol(symbol_t s, std::size_t n, std::size_t sigma) {
    Word w;
    w.symbols.assign(n, s);
    w.alphabet_size = std::max<std::size_t>(sigma, std::size_t{s} + 1);
    return w;
}

Word concat(const Word& a, const Word& b) {
    Word w;
    w.symbols.reserve(a.size() + b.size());
    w.symbols.insert(w.symbols.end(), a.symbols.begin(), a.symbols.end());
    w.symbols.insert(w.symbols.end(), b.symbols.begin(), b.symbols.end());
    w.alphabet_size = std::max(a.alphabet_size, b.alphabet_size);
    return w;
}

Word power(const Word& w, std::size_t n) {
    Word out;
    out.alphabet_size = w.alphabet_size;
    out.symbols.reserve(w.size() * n);
    for (std::size_t i = 0; i < n; ++i) {
        out.symbols.insert(out.symbols.end(), w.symbols.begin(), w.symbols.end());
    }
    return out;
}

} // namespace gramlab
