#include "doctest.h"

#include "gramlab/bridge.hpp"
#include "gramlab/compressors.hpp"
#include "util.hpp"

using namespace gramlab;
using namespace gramlab::bridge;

namespace {

Rhs bin(const std::string& s) {
    Rhs r;
    for (char c : s) r.push_back(T(c == 'a' ? sym_a : sym_b));
    return r;
}

Word dense_random(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    // Every symbol below k occurs.
    auto w = testutil::repetitive_word(rng, std::max(n, k), k);
    for (std::size_t i = 0; i < k; ++i) w.symbols[rng() % w.size()] = static_cast<symbol_t>(i);
    std::vector<bool> seen(k);
    for (auto s : w.symbols) seen[s] = true;
    for (std::size_t i = 0; i < k; ++i) {
        if (!seen[i]) w.symbols.push_back(static_cast<symbol_t>(i));
    }
    return w;
}

} // namespace

TEST_CASE("phi on words") {
    auto w = Word::from({0, 1, 0});
    CHECK(phi_encode_word(w, 2) == parse_word("babb"));
    CHECK(phi_encode_word(Word::from({0}), 1) == parse_word("b"));
    CHECK(phi_decode_word(parse_word("babb"), 2) == w);
    CHECK(phi_decode_word(Word{}, 2).empty());
    CHECK_THROWS_AS(phi_decode_word(parse_word("aab"), 2), GrammarError);
    CHECK_THROWS_AS(phi_decode_word(parse_word("ba"), 3), GrammarError);
    CHECK_THROWS_AS(phi_encode_word(Word::from({3}), 3), GrammarError);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const std::size_t k = 1 + rng() % 8;
        auto x = testutil::random_word(rng, rng() % 100, k);
        CHECK(phi_decode_word(phi_encode_word(x, k), k) == x);
    }
}

TEST_CASE("encode_slp") {
    Slp g(0, {{0, {T(0), T(1), T(0)}}});
    auto e = encode_slp(g, 2);
    CHECK(e.size() == 6);
    CHECK(expand(e) == parse_word("babb"));
    auto one = encode_slp(Slp(0, {{0, {T(0), T(0)}}}), 1);
    CHECK(one.size() == 3);
    CHECK(expand(one) == parse_word("bb"));
    CHECK_THROWS_AS(encode_slp(Slp(0, {{0, {T(0), T(2)}}}), 3), GrammarError);
}

TEST_CASE("decode_production reproduces the worked example") {
    const std::size_t k = 12;
    std::map<nt_t, PsiDecomposition> psi;
    Rhs mid;
    psi[1] = decode_production(1, bin("aa"), {}, k, mid);
    CHECK(mid.empty());
    CHECK(psi[1] == PsiDecomposition{std::nullopt, std::nullopt, 2});
    psi[2] = decode_production(2, bin("abaaaba"), {}, k, mid);
    CHECK(mid == Rhs{T(3)});
    CHECK(psi[2] == PsiDecomposition{1, 2, 1});
    psi[3] = decode_production(3, bin("baabaaa"), {}, k, mid);
    CHECK(mid == Rhs{T(2)});
    CHECK(psi[3] == PsiDecomposition{0, 3, 3});

    Rhs alpha = bin("aaabaaaaa");
    alpha.push_back(N(1));
    for (auto t : bin("aaa")) alpha.push_back(t);
    alpha.push_back(N(2));
    for (auto t : bin("aabb")) alpha.push_back(t);
    alpha.push_back(N(3));
    for (auto t : bin("aa")) alpha.push_back(t);
    auto d = decode_production(0, alpha, psi, k, mid);
    CHECK(mid == Rhs{T(11), N(2), T(3), T(0), T(0), N(3)});
    CHECK(d.left == 3u);
    CHECK(d.right == 5);
    CHECK(d.middle_nt == 0u);

    CHECK_THROWS_AS(decode_production(4, bin("aaaa"), {}, 3, mid), GrammarError);
}

TEST_CASE("decode_slp single letter") {
    auto d = decode_slp(Slp(0, {{0, {T(sym_b)}}}), 1);
    CHECK(d == Slp(0, {{0, {T(0)}}}));
    CHECK_THROWS_AS(decode_slp(Slp(0, {{0, {T(sym_a)}}}), 2), GrammarError);
}

TEST_CASE("reduction is order independent") {
    std::mt19937_64 rng(12);
    const std::size_t k = 1000;
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<PsiToken> w;
        const std::size_t len = rng() % 20;
        nt_t next = 1;
        for (std::size_t i = 0; i < len; ++i) {
            if (rng() % 2) {
                w.push_back(PsiToken::digit(static_cast<std::uint32_t>(rng() % 10)));
            } else {
                w.push_back(PsiToken::letter(static_cast<symbol_t>(rng() % 10)));
                if (rng() % 2) w.push_back(PsiToken::middle(next++));
            }
        }
        auto expected = reduce(w, k);
        for (int rep = 0; rep < 5; ++rep) CHECK(reduce_random_order(w, k, rng) == expected);
    }
}

TEST_CASE("bridge round trip and size bounds") {
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t k = 2 + rng() % 7;
        auto w = dense_random(rng, 1 + rng() % 300, k);
        Slp g = repair(w).grammar;
        Slp e = encode_slp(g, k);
        CHECK(e.size() == g.size() + 2 * k - 1);
        if (k <= g.size()) CHECK(e.size() <= 3 * g.size());
        CHECK(expand(e) == phi_encode_word(w, k));
        Slp d = decode_slp(e, k);
        CHECK(validate(d).ok());
        CHECK(expand(d) == w);
        CHECK(d.size() <= 2 * e.size());

        auto bw = phi_encode_word(w, k);
        for (auto a : {Algorithm::repair, Algorithm::lz78, Algorithm::bisection}) {
            Slp b = run_compressor(a, bw);
            Slp back = decode_slp(b, k);
            CHECK(expand(back) == w);
            CHECK(back.size() <= 2 * b.size());
        }
    }
}

TEST_CASE("decode_slp does linear work") {
    std::mt19937_64 rng(14);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t k = 2 + rng() % 7;
        auto w = dense_random(rng, 1 + rng() % 2000, k);
        Slp b = lz78(phi_encode_word(w, k));
        DecodeStats st;
        decode_slp(b, k, &st);
        CHECK(st.operations <= 8 * b.size());
    }
}

TEST_CASE("compressor D") {
    BinaryCompressor rp = [](const Word& v) { return repair(v).grammar; };
    std::mt19937_64 rng(15);
    for (int iter = 0; iter < 100; ++iter) {
        auto w = testutil::repetitive_word(rng, 1 + rng() % 300, 5);
        for (auto& s : w.symbols) s = s * 7 + 3;
        auto r = compressor_D(w, rp);
        CHECK(expand(r.grammar) == w);
        CHECK(r.grammar.size() <= 2 * r.binary_size);
        CHECK(r.remap.size() == w.distinct_symbols());
    }
    auto single = compressor_D(Word::from({4}), rp);
    CHECK(single.grammar == trivial(Word::from({4})));
    CHECK_THROWS_AS(compressor_D(Word{}, rp), GrammarError);

    std::vector<symbol_t> remap;
    CHECK(dense_remap(Word::from({9, 2, 9, 5}), remap) == Word::from({2, 0, 2, 1}));
    CHECK(remap == std::vector<symbol_t>{2, 5, 9});
}
