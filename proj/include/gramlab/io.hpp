#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gramlab/slp.hpp"

namespace gramlab::io {

// Grammar text format:
//
//   start n:<id>
//   map <dense-id> <original-id>        (optional, zero or more)
//   n:<id> -> <tok> <tok> ...           (one per production, children first)
//
// where <tok> is t:<int> or n:<int>, single spaces, trailing newline.

struct GrammarFile {
    Slp slp;
    /// remap[dense] = original terminal id; empty when the file carries no map lines.
    std::vector<symbol_t> remap;
};

void write_grammar(std::ostream& out, const Slp& g, const std::vector<symbol_t>& remap = {});
std::string grammar_to_string(const Slp& g, const std::vector<symbol_t>& remap = {});

GrammarFile read_grammar(std::istream& in);
GrammarFile grammar_from_string(const std::string& text);

void save_grammar(const std::string& path, const Slp& g, const std::vector<symbol_t>& remap = {});
GrammarFile load_grammar(const std::string& path);

enum class WordFormat { chars, ints };

WordFormat parse_word_format(const std::string& name);

struct WordFile {
    std::vector<Word> words;
    Alphabet alphabet;
};

// Word files hold one word per line. In `chars` mode an optional first line
// `#alphabet <chars>` overrides the default a=0, b=1, ... table.

WordFile read_words(std::istream& in, WordFormat format);
void write_words(std::ostream& out, const std::vector<Word>& words, WordFormat format,
                 const Alphabet& alphabet = {});

WordFile load_words(const std::string& path, WordFormat format);
void save_words(const std::string& path, const std::vector<Word>& words, WordFormat format,
                const Alphabet& alphabet = {});

} // namespace gramlab::io
