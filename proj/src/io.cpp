#include "gramlab/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace gramlab::io {

namespace {

void write_token(std::ostream& out, Token t) {
    out << (t.is_terminal() ? "t:" : "n:") << t.id();
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& why) {
    throw GrammarError(Errc::parse, "line " + std::to_string(line) + ": " + why);
}

std::uint32_t parse_uint(std::string_view s, std::size_t line) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        parse_fail(line, "expected a non-negative integer, got '" + std::string(s) + "'");
    }
    if (v > Token::max_id) parse_fail(line, "id " + std::string(s) + " too large");
    return v;
}

Token parse_token(std::string_view s, std::size_t line) {
    if (s.size() < 3 || s[1] != ':' || (s[0] != 't' && s[0] != 'n')) {
        parse_fail(line, "malformed token '" + std::string(s) + "'");
    }
    auto id = parse_uint(s.substr(2), line);
    return s[0] == 't' ? T(id) : N(id);
}

std::vector<std::string_view> split_spaces(std::string_view line, std::size_t lineno) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        auto next = line.find(' ', pos);
        if (next == std::string_view::npos) next = line.size();
        if (next == pos) parse_fail(lineno, "tokens must be separated by single spaces");
        parts.push_back(line.substr(pos, next - pos));
        pos = next + 1;
    }
    return parts;
}

} // namespace

void write_grammar(std::ostream& out, const Slp& g, const std::vector<symbol_t>& remap) {
    out << "start n:" << g.start() << '\n';
    for (std::size_t i = 0; i < remap.size(); ++i) out << "map " << i << ' ' << remap[i] << '\n';
    // Reachable rules children-first; unreachable ones (if any) follow in id order.
    std::vector<nt_t> order = topological_order(g);
    std::set<nt_t> done(order.begin(), order.end());
    for (const auto& [lhs, rhs] : g.rules()) {
        if (done.count(lhs)) continue;
        Slp rooted = g;
        rooted.set_start(lhs);
        for (nt_t a : topological_order(rooted)) {
            if (done.insert(a).second) order.push_back(a);
        }
    }
    for (nt_t a : order) {
        out << "n:" << a << " ->";
        for (auto t : g.rhs(a)) {
            out << ' ';
            write_token(out, t);
        }
        out << '\n';
    }
}

std::string grammar_to_string(const Slp& g, const std::vector<symbol_t>& remap) {
    std::ostringstream ss;
    write_grammar(ss, g, remap);
    return ss.str();
}

GrammarFile read_grammar(std::istream& in) {
    GrammarFile file;
    std::map<nt_t, Rhs> rules;
    std::string line;
    std::size_t lineno = 0;
    bool have_start = false;
    nt_t start = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::string_view sv(line);
        if (!have_start) {
            if (sv.substr(0, 8) != "start n:") parse_fail(lineno, "expected 'start n:<id>'");
            start = parse_uint(sv.substr(8), lineno);
            have_start = true;
            continue;
        }
        if (sv.substr(0, 4) == "map ") {
            auto parts = split_spaces(sv.substr(4), lineno);
            if (parts.size() != 2) parse_fail(lineno, "expected 'map <dense-id> <original-id>'");
            auto dense = parse_uint(parts[0], lineno);
            if (dense != file.remap.size()) parse_fail(lineno, "map lines must list dense ids in order");
            file.remap.push_back(parse_uint(parts[1], lineno));
            continue;
        }
        auto arrow = sv.find(" ->");
        if (sv.substr(0, 2) != "n:" || arrow == std::string_view::npos) {
            parse_fail(lineno, "expected 'n:<id> -> <tokens>'");
        }
        nt_t lhs = parse_uint(sv.substr(2, arrow - 2), lineno);
        Rhs rhs;
        auto rest = sv.substr(arrow + 3);
        if (!rest.empty()) {
            if (rest.front() != ' ') parse_fail(lineno, "expected a space after '->'");
            for (auto part : split_spaces(rest.substr(1), lineno)) rhs.push_back(parse_token(part, lineno));
        }
        if (!rules.emplace(lhs, std::move(rhs)).second) {
            parse_fail(lineno, "second production for n:" + std::to_string(lhs));
        }
    }
    if (!have_start) throw GrammarError(Errc::parse, "empty grammar file");
    file.slp = Slp(start, std::move(rules));
    return file;
}

GrammarFile grammar_from_string(const std::string& text) {
    std::istringstream ss(text);
    return read_grammar(ss);
}

void save_grammar(const std::string& path, const Slp& g, const std::vector<symbol_t>& remap) {
    std::ofstream out(path);
    if (!out) throw GrammarError(Errc::parse, "cannot write " + path);
    write_grammar(out, g, remap);
}

GrammarFile load_grammar(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GrammarError(Errc::parse, "cannot open " + path);
    return read_grammar(in);
}

WordFormat parse_word_format(const std::string& name) {
    if (name == "char") return WordFormat::chars;
    if (name == "int") return WordFormat::ints;
    throw GrammarError(Errc::parse, "unknown word format '" + name + "' (expected char or int)");
}

WordFile read_words(std::istream& in, WordFormat format) {
    WordFile file;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (format == WordFormat::chars) {
            if (line.rfind("#alphabet ", 0) == 0) {
                if (!file.words.empty()) parse_fail(lineno, "#alphabet must precede the words");
                file.alphabet = Alphabet(line.substr(10));
                continue;
            }
            if (line.empty()) continue;
            file.words.push_back(parse_word(line, file.alphabet));
        } else {
            std::istringstream ss(line);
            std::vector<symbol_t> syms;
            std::string tok;
            while (ss >> tok) syms.push_back(parse_uint(tok, lineno));
            if (syms.empty()) continue;
            file.words.push_back(Word::from(std::move(syms)));
        }
    }
    if (file.words.empty()) throw GrammarError(Errc::parse, "word file contains no words");
    return file;
}

void write_words(std::ostream& out, const std::vector<Word>& words, WordFormat format,
                 const Alphabet& alphabet) {
    if (format == WordFormat::chars) {
        if (alphabet.chars() != Alphabet{}.chars()) out << "#alphabet " << alphabet.chars() << '\n';
        for (const auto& w : words) out << to_string(w, alphabet) << '\n';
    } else {
        for (const auto& w : words) out << to_int_string(w) << '\n';
    }
}

WordFile load_words(const std::string& path, WordFormat format) {
    std::ifstream in(path);
    if (!in) throw GrammarError(Errc::parse, "cannot open " + path);
    return read_words(in, format);
}

void save_words(const std::string& path, const std::vector<Word>& words, WordFormat format,
                const Alphabet& alphabet) {
    std::ofstream out(path);
    if (!out) throw GrammarError(Errc::parse, "cannot write " + path);
    write_words(out, words, format, alphabet);
}

} // namespace gramlab::io
