#include <cctype>
#include <functional>
#include <sstream>

#include "gramlab/bridge.hpp"
#include "gramlab/compressors.hpp"
#include "gramlab/families.hpp"
#include "gramlab/oracle.hpp"
#include "gramlab/reference.hpp"

namespace gramlab::reference {

namespace {

Word letters(const std::string& s) { return parse_word(s, Alphabet::letters()); }

Rhs rhs_of(const std::string& s) {
    // Lowercase letters are terminals, "N<id>" tokens are nonterminals; tokens separated by spaces.
    Rhs out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == 'N') {
            out.push_back(N(static_cast<nt_t>(std::stoul(tok.substr(1)))));
        } else {
            for (char c : tok) out.push_back(T(static_cast<symbol_t>(c - 'a')));
        }
    }
    return out;
}

std::string show(const Slp& g) {
    std::ostringstream out;
    out << "start " << g.start() << ':';
    for (const auto& [lhs, rhs] : g.rules()) {
        out << ' ' << lhs << "->";
        for (auto t : rhs) out << (t.is_terminal() ? std::string(1, static_cast<char>('a' + t.id())) : "N" + std::to_string(t.id()));
    }
    return out.str();
}

CheckResult expect(const std::string& name, bool ok, const std::string& detail) { return {name, ok, ok ? "" : detail}; }

CheckResult check_bin_pad() {
    auto w = families::bin_pad(9, 3);
    return expect("bin-pad", w == Word::from({0, 0, 1, 1}), "bin_9(3) = " + to_int_string(w));
}

CheckResult check_u4() {
    auto inst = families::bisection_hard(4);
    const auto alpha = Alphabet::bits_and_a();
    const std::string u = to_string(families::bisection_u(4), alpha);
    std::vector<std::string> blocks;
    for (std::size_t i = 0; i < inst.word.size(); i += 4) {
        blocks.push_back(to_string(Word(std::vector<symbol_t>(inst.word.symbols.begin() + static_cast<std::ptrdiff_t>(i),
                                                              inst.word.symbols.begin() + static_cast<std::ptrdiff_t>(i + 4)),
                                        3),
                                   alpha));
    }
    const std::vector<std::string> listed{"00aa", "01aa", "10aa", "11aa", "a00a", "a01a",
                                          "a10a", "a11a", "aa00", "aa01", "aa10", "aa11"};
    const bool ok = families::bisection_m(4) == 2 && u == "00aa01aa10aa11" && blocks == listed &&
                    expand(inst.witness) == inst.word;
    return expect("u4", ok, "u_4 = " + u);
}

CheckResult check_bisection_sample() {
    const Word w = letters("ababbbaabbaaab");
    // S=0, W1=1, W2=2, X1=3, X2=4, X3=5, Y1=6, Y2=7
    Slp expected(0, {{0, rhs_of("N1 N2")},
                     {1, rhs_of("N3 N4")},
                     {2, rhs_of("N4 N5")},
                     {3, rhs_of("N5 N5")},
                     {4, rhs_of("N6 N7")},
                     {5, rhs_of("ab")},
                     {6, rhs_of("bb")},
                     {7, rhs_of("aa")}});
    Slp got = bisection(w);
    const bool ok = canonicalize(got) == canonicalize(expected) && got.size() == 16 && got.rule_count() == 8;
    return expect("bisection-sample", ok, show(got));
}

CheckResult check_lz78_sample() {
    const Word w = letters("aabaaababababaa");
    auto f = lz78_factorize(w);
    std::vector<std::string> factors;
    for (const auto& x : f.factors) factors.push_back(to_string(x, Alphabet::letters()));
    const std::vector<std::string> listed{"a", "ab", "aa", "aba", "b", "abab", "aa"};
    Slp expected(0, {{0, rhs_of("N1 N2 N3 N4 N5 N6 N3")},
                     {1, rhs_of("a")},
                     {2, rhs_of("N1 b")},
                     {3, rhs_of("N1 a")},
                     {4, rhs_of("N2 a")},
                     {5, rhs_of("b")},
                     {6, rhs_of("N4 b")}});
    Slp got = lz78(f);
    return expect("lz78-sample", factors == listed && got == expected, show(got));
}

CheckResult check_repair_unary() {
    Slp e27(0, {{0, rhs_of("N3 N3 N3 N1 a")}, {1, rhs_of("aa")}, {2, rhs_of("N1 N1")}, {3, rhs_of("N2 N2")}});
    Slp e22(0, {{0, rhs_of("N3 N3 N2 N1")}, {1, rhs_of("aa")}, {2, rhs_of("N1 N1")}, {3, rhs_of("N2 N2")}});
    Slp g27 = repair(repeat_symbol(0, 27)).grammar;
    Slp g22 = repair(repeat_symbol(0, 22)).grammar;
    return expect("repair-unary", g27 == e27 && g22 == e22, show(g27) + " | " + show(g22));
}

CheckResult check_abcabc() {
    const Word w = letters("abcabc");
    Slp maximal = repair(w, RepairVariant::maximal_string).grammar;
    Slp digram = repair(w, RepairVariant::digram).grammar;
    Slp em(0, {{0, rhs_of("N1 N1")}, {1, rhs_of("abc")}});
    Slp ed(0, {{0, rhs_of("N2 N2")}, {1, rhs_of("ab")}, {2, rhs_of("N1 c")}});
    const bool ok = maximal == em && digram == ed && maximal.size() == 5 && digram.size() == 6;
    return expect("abcabc", ok, show(maximal) + " | " + show(digram));
}

CheckResult check_lz78_listing() {
    auto inst = families::lz78_hard(2, 4);
    auto f = lz78_factorize(inst.word);
    const auto& listed = lz78_s24_listing();
    bool ok = f.nonempty_count() == listed.size() && listed.size() == 64 &&
              inst.predicted.factor_count == 64 && inst.word.size() == 10 + 10 + families::lz78_u(2, 4).size() + families::lz78_v(2, 4).size();
    std::string detail = "factors: " + std::to_string(f.nonempty_count());
    for (std::size_t i = 0; ok && i < listed.size(); ++i) {
        if (f.factors[i].symbols != expand_runs(listed[i])) {
            ok = false;
            detail = "factor " + std::to_string(i + 1) + " differs from " + listed[i];
        }
    }
    const std::string u = to_string(families::lz78_u(2, 4), Alphabet::letters());
    std::string u_expected;
    for (int t = 0; t < 4; ++t) u_expected += "aaaabbbbbaaaaabbbbbaaaaabbbaaaabbb";
    u_expected += "aaaa";
    std::string v_expected;
    for (int t = 0; t < 16; ++t) v_expected += "baaaabbaaaa";
    if (u != u_expected || to_string(families::lz78_v(2, 4), Alphabet::letters()) != v_expected) {
        ok = false;
        detail = "u_{2,4} or v_{2,4} differs";
    }
    return expect("lz78-listing", ok, detail);
}

CheckResult check_decode_production() {
    using namespace bridge;
    const std::size_t k = 12;
    auto bin = [](const std::string& s) {
        Rhs r;
        for (char c : s) r.push_back(T(c == 'a' ? sym_a : sym_b));
        return r;
    };
    std::map<nt_t, PsiDecomposition> psi;
    Rhs mid;
    psi[1] = decode_production(1, bin("aa"), {}, k, mid);
    psi[2] = decode_production(2, bin("abaaaba"), {}, k, mid);
    psi[3] = decode_production(3, bin("baabaaa"), {}, k, mid);
    Rhs alpha = bin("aaabaaaaa");
    alpha.push_back(N(1));
    for (auto t : bin("aaa")) alpha.push_back(t);
    alpha.push_back(N(2));
    for (auto t : bin("aabb")) alpha.push_back(t);
    alpha.push_back(N(3));
    for (auto t : bin("aa")) alpha.push_back(t);
    auto d = decode_production(0, alpha, psi, k, mid);
    const Rhs expected{T(11), N(2), T(3), T(0), T(0), N(3)};
    const bool children = !psi[1].left && !psi[1].middle_nt && psi[1].right == 2 && psi[2].left == 1u &&
                          psi[2].right == 1 && psi[3].left == 0u && psi[3].right == 3;
    const bool ok = children && mid == expected && d.left == 3u && d.right == 5 && d.middle_nt == 0u;
    std::string detail = "A' ->";
    for (auto t : mid) detail += t.is_terminal() ? " c" + std::to_string(t.id()) : " A'" + std::to_string(t.id());
    return expect("decode-production", ok, detail);
}

CheckResult check_de_bruijn() {
    auto b = families::de_bruijn(2);
    return expect("de-bruijn", b.bits == Word::from({1, 1, 0, 0}), "B_2 = " + to_int_string(b.bits));
}

CheckResult check_repair_s4() {
    auto bits = families::repair_bits(4);
    auto inst = families::repair_hard(4);
    const std::vector<symbol_t> w4{1, 0, 1, 0, 0, 1, 0, 1};
    const std::vector<std::uint64_t> exps{20, 41, 82, 165};
    std::vector<symbol_t> s4;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (i) s4.push_back(1);
        s4.insert(s4.end(), exps[i], 0);
    }
    const bool ok = bits == w4 && inst.predicted.block_exponents == exps && inst.word.symbols == s4 &&
                    expand(inst.witness) == inst.word;
    return expect("repair-s4", ok, "w_4 differs or s_4 differs");
}

CheckResult check_w3() {
    auto inst = families::incompressible_word(3);
    // a_i -> letter i-1
    const Word expected = letters("cccccbbbbbaaaaacacababcbc");
    const bool ok = inst.word == expected && inst.word.size() == 25 && !families::in_M(inst.word, 3, 2) &&
                    !families::in_M(inst.word, 2, 3);
    return expect("w3", ok, to_string(inst.word, Alphabet::letters()));
}

CheckResult check_unary_boundary() {
    const auto g5 = oracle::smallest_slp_exact(repeat_symbol(0, 5)).size;
    const auto g6 = oracle::smallest_slp_exact(repeat_symbol(0, 6)).size;
    return expect("unary-boundary", g5 == 5 && g6 == 5,
                  "g(a^5) = " + std::to_string(g5) + ", g(a^6) = " + std::to_string(g6));
}

struct Entry {
    const char* name;
    CheckResult (*run)();
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> all{
        {"bin-pad", check_bin_pad},     {"u4", check_u4},           {"bisection-sample", check_bisection_sample},
        {"lz78-sample", check_lz78_sample},   {"repair-unary", check_repair_unary}, {"abcabc", check_abcabc},
        {"lz78-listing", check_lz78_listing},   {"decode-production", check_decode_production},   {"de-bruijn", check_de_bruijn},
        {"repair-s4", check_repair_s4}, {"w3", check_w3},           {"unary-boundary", check_unary_boundary},
    };
    return all;
}

} // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.push_back(e.name);
    return out;
}

std::vector<CheckResult> run_checks(const std::string& only) {
    std::vector<CheckResult> out;
    bool matched = false;
    for (const auto& e : entries()) {
        if (!only.empty() && only != e.name) continue;
        matched = true;
        try {
            out.push_back(e.run());
        } catch (const std::exception& ex) {
            out.push_back({e.name, false, std::string("threw: ") + ex.what()});
        }
    }
    if (!matched) throw GrammarError(Errc::precondition, "unknown check '" + only + "'");
    return out;
}

const std::vector<std::string>& lz78_s24_listing() {
    static const std::vector<std::string> listing{
        // a^10, b^10
        "a", "a2", "a3", "a4", "b", "b2", "b3", "b4",
        // u_{2,4}, row by row
        "a4b", "b4a", "a4b2", "b3a", "a4b3", "a4b3a",
        "a3b", "b4a2", "a3b2", "b3a2", "a3b3", "a4b3a2",
        "a2b", "b4a3", "a2b2", "b3a3", "a2b3", "a4b3a3",
        "ab", "b4a4", "ab2", "b3a4", "ab3", "a4b3a4",
        // v_{2,4}, row by row
        "ba", "a3b2a", "a3ba", "a3b2a2", "a2ba", "a3b2a3", "aba", "a3b2a4",
        "ba2", "a2b2a", "a3ba2", "a2b2a2", "a2ba2", "a2b2a3", "aba2", "a2b2a4",
        "ba3", "ab2a", "a3ba3", "ab2a2", "a2ba3", "ab2a3", "aba3", "ab2a4",
        "ba4", "b2a", "a3ba4", "b2a2", "a2ba4", "b2a3", "aba4", "b2a4",
    };
    return listing;
}

std::vector<symbol_t> expand_runs(const std::string& runs) {
    std::vector<symbol_t> out;
    std::size_t i = 0;
    while (i < runs.size()) {
        const char c = runs[i++];
        if (c != 'a' && c != 'b') throw GrammarError(Errc::parse, "run string: unexpected '" + std::string(1, c) + "'");
        std::size_t n = 0;
        while (i < runs.size() && std::isdigit(static_cast<unsigned char>(runs[i]))) n = n * 10 + static_cast<std::size_t>(runs[i++] - '0');
        out.insert(out.end(), n == 0 ? 1 : n, c == 'a' ? 0u : 1u);
    }
    return out;
}

} // namespace gramlab::reference
