#include "doctest.h"

#include "gramlab/families.hpp"
#include "gramlab/slp.hpp"
#include "util.hpp"

using namespace gramlab;

namespace {

Slp sample_grammar() {
    return Slp(0, {{0, {N(1), N(2)}},
                   {1, {N(3), N(4)}},
                   {2, {N(4), N(5)}},
                   {3, {N(5), N(5)}},
                   {4, {N(6), N(7)}},
                   {5, {T(0), T(1)}},
                   {6, {T(1), T(1)}},
                   {7, {T(0), T(0)}}});
}

Word ab(const char* s) { return parse_word(s); }

bool has_kind(const ValidationResult& r, Violation::Kind k) {
    for (const auto& v : r.violations) {
        if (v.kind == k) return true;
    }
    return false;
}

} // namespace

TEST_CASE("validate") {
    CHECK(validate(Slp(0, {{0, {T(0), T(1)}}})).ok());

    auto cyc = validate(Slp(0, {{0, {N(1)}}, {1, {N(0)}}}));
    REQUIRE(has_kind(cyc, Violation::Kind::cycle));
    CHECK(cyc.violations.back().nonterminals == std::vector<nt_t>{0, 1});

    auto dangling = validate(Slp(0, {{0, {N(1)}}}));
    REQUIRE(dangling.violations.size() == 1);
    CHECK(dangling.violations[0].kind == Violation::Kind::dangling_reference);
    CHECK(dangling.violations[0].nonterminals == std::vector<nt_t>{1});

    auto many = validate(Slp(5, {{0, {}}, {1, {N(1)}}}));
    CHECK(has_kind(many, Violation::Kind::missing_start));
    CHECK(has_kind(many, Violation::Kind::empty_rhs));
    CHECK(has_kind(many, Violation::Kind::cycle));

    CHECK_THROWS_AS(require_valid(Slp(0, {{0, {N(1)}}})), GrammarError);
}

TEST_CASE("validate agrees with a naive evaluator on random small grammars") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 2000; ++iter) {
        std::map<nt_t, Rhs> rules;
        const nt_t count = 1 + rng() % 4;
        for (nt_t a = 0; a < count; ++a) {
            if (rng() % 10 == 0) continue;
            Rhs rhs;
            const std::size_t len = rng() % 4;
            for (std::size_t i = 0; i < len; ++i) {
                rhs.push_back(rng() % 2 ? T(rng() % 2) : N(static_cast<nt_t>(rng() % (count + 1))));
            }
            rules[a] = rhs;
        }
        Slp g(0, rules);
        const bool ok = validate(g).ok();
        // Unreachable rules still have to be well formed, so evaluate every rule.
        bool naive_ok = g.has_rule(0);
        for (const auto& [a, rhs] : g.rules()) {
            std::vector<nt_t> path;
            if (!testutil::naive_eval(g, a, path)) naive_ok = false;
        }
        CHECK(ok == naive_ok);
        if (ok) {
            std::vector<nt_t> path;
            CHECK(expand(g).symbols == *testutil::naive_eval(g, 0, path));
        }
    }
}

TEST_CASE("expand and expansion_length") {
    const Slp g = sample_grammar();
    CHECK(expand(g) == ab("ababbbaabbaaab"));
    CHECK(expansion_length(g) == 14);
    CHECK(expansion_length(g, 5) == 2);
    CHECK(expand(Slp(0, {{0, {T(0)}}})) == ab("a"));
    CHECK(expand(power(trivial(ab("ab")), 3)) == ab("ababab"));
    CHECK(expand_nonterminal(g, 4) == ab("bbaa"));

    const Slp huge = power(trivial(ab("a")), std::uint64_t{1} << 40);
    CHECK(expansion_length(huge) == (length_t{1} << 40));
    CHECK_THROWS_WITH_AS(expand(huge), doctest::Contains("exceeds"), GrammarError);
    try {
        expand(huge, 100);
    } catch (const GrammarError& e) {
        CHECK(e.code() == Errc::cap_exceeded);
    }

    // 2^130 does not fit in 127 bits.
    Slp over = power(power(trivial(ab("a")), std::uint64_t{1} << 63), std::uint64_t{1} << 63);
    over = power(over, 16);
    try {
        (void)expansion_length(over);
        FAIL("expected overflow");
    } catch (const GrammarError& e) {
        CHECK(e.code() == Errc::length_overflow);
    }
    CHECK(to_string(length_t{1} << 100) == "1267650600228229401496703205376");
}

TEST_CASE("size and trivial") {
    CHECK(size(sample_grammar()) == 16);
    CHECK(size(Slp(0, {{0, {T(0), T(1)}}})) == 2);
    CHECK(size(Slp(0, {{0, {N(1), N(1)}}, {1, {T(0), T(1), T(2)}}})) == 5);
    CHECK(trivial(ab("a")) == Slp(0, {{0, {T(0)}}}));
    CHECK(trivial(ab("ababbbaabbaaab")).size() == 14);
    CHECK_THROWS_AS(trivial(Word{}), GrammarError);
}

TEST_CASE("build_block") {
    SUBCASE("unary") {
        auto g = build_block(repeat_symbol(0, 1024, 1));
        CHECK(expand(g) == repeat_symbol(0, 1024));
        CHECK(g.size() < 1024);
    }
    SUBCASE("short words stay trivial") {
        auto w = ab("abcab");
        CHECK(build_block(w) == trivial(w));
    }
    SUBCASE("random binary") {
        std::mt19937_64 rng(3);
        auto w = testutil::random_word(rng, 4096, 2);
        auto g = build_block(w);
        CHECK(expand(g) == w);
        CHECK(g.size() <= 4096 / 2);
    }
    SUBCASE("size bound counts the prefix rules") {
        std::mt19937_64 rng(11);
        for (std::size_t sigma : {2u, 3u, 5u}) {
            for (std::size_t n : {10u, 100u, 1000u, 20000u}) {
                auto w = testutil::random_word(rng, n, sigma);
                auto g = build_block(w);
                REQUIRE(expand(g) == w);
                // b = max(1, floor(log_sigma(n) / 2))
                std::size_t b = 1;
                while (true) {
                    std::size_t p = 1;
                    for (std::size_t i = 0; i < 2 * (b + 1); ++i) p *= sigma;
                    if (p > n) break;
                    ++b;
                }
                std::size_t prefix_rules = 0;
                std::size_t pw = sigma;
                for (std::size_t j = 2; j <= b; ++j) {
                    pw *= sigma;
                    prefix_rules += std::min(pw, n / b);
                }
                CHECK(g.size() <= std::min(n, 2 * prefix_rules + (n + b - 1) / b + 2 * b));
            }
        }
    }
}

TEST_CASE("power") {
    const Slp g = trivial(ab("ab"));
    CHECK(power(g, 1) == g);
    CHECK(expand(power(g, 3)) == ab("ababab"));
    CHECK(power(g, 3).size() <= 2 + 6);
    CHECK(expand(power(trivial(ab("a")), 27)) == repeat_symbol(0, 27));
    CHECK_THROWS_AS(power(g, 0), GrammarError);

    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 300; ++iter) {
        Slp base = testutil::random_slp(rng, 1 + rng() % 5, 3);
        const Word v = expand(base);
        if (v.size() > 100) continue;
        const std::uint64_t n = 1 + rng() % 50;
        Slp p = power(base, n);
        CHECK(expand(p) == power(v, n));
        CHECK(p.size() <= base.size() + 4 * (std::bit_width(n) - 1) + 2);
    }
}

TEST_CASE("concat") {
    auto g = concat(trivial(ab("ab")), trivial(ab("ba")));
    CHECK(expand(g) == ab("abba"));
    CHECK(g.size() <= 4);
    auto twice = concat(sample_grammar(), sample_grammar());
    CHECK(expand(twice) == concat(ab("ababbbaabbaaab"), ab("ababbbaabbaaab")));
    CHECK(twice.size() <= 32);
    CHECK(expand(concat(trivial(ab("a")), trivial(ab("a")))) == ab("aa"));

    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 300; ++iter) {
        Slp a = testutil::random_slp(rng, 1 + rng() % 5, 3);
        Slp b = testutil::random_slp(rng, 1 + rng() % 5, 3);
        Slp c = concat(a, b);
        CHECK(validate(c).ok());
        CHECK(expand(c) == concat(expand(a), expand(b)));
        CHECK(c.size() <= a.size() + b.size());
    }
}

TEST_CASE("substitute") {
    // x = 2
    Slp pattern(0, {{0, {T(2), T(1), T(2)}}});
    auto g = substitute(pattern, trivial(ab("aa")), 2);
    CHECK(expand(g) == ab("aabaa"));
    CHECK(g.size() <= pattern.size() + 2);

    Slp plain = trivial(ab("abab"));
    CHECK(expand(substitute(plain, trivial(ab("cc")), 23)) == ab("abab"));

    // x inside the replacement is rejected
    CHECK_THROWS_AS(substitute(pattern, trivial(ab("c")), 2), GrammarError);

    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 300; ++iter) {
        Slp p = testutil::random_slp(rng, 1 + rng() % 5, 4);
        Slp r = testutil::random_slp(rng, 1 + rng() % 4, 3);
        Slp s = substitute(p, r, 3);
        CHECK(validate(s).ok());
        std::vector<symbol_t> expected;
        const Word rv = expand(r);
        for (auto c : expand(p).symbols) {
            if (c == 3) {
                expected.insert(expected.end(), rv.symbols.begin(), rv.symbols.end());
            } else {
                expected.push_back(c);
            }
        }
        CHECK(expand(s).symbols == expected);
        CHECK(s.size() <= p.size() + r.size());
    }
}

TEST_CASE("morphisms, renaming and canonical form") {
    const Slp g = sample_grammar();
    auto img = apply_morphism(g, {{1, 1}, {0}});
    std::vector<symbol_t> mapped;
    for (auto c : ab("ababbbaabbaaab").symbols) {
        if (c == 0) {
            mapped.insert(mapped.end(), {1, 1});
        } else {
            mapped.push_back(0);
        }
    }
    CHECK(expand(img).symbols == mapped);
    CHECK(img.size() == g.size() + 3);
    CHECK(expand(rename_terminals(g, {1, 0})) == ab("babaaabbaabbba"));
    CHECK(canonicalize(shift_nonterminals(g, 40)) == canonicalize(g));
    CHECK(canonicalize(g).start() == 0);
    CHECK(terminals_used(g) == std::vector<symbol_t>{0, 1});

    Slp extra = g;
    extra.set_rule(99, {T(5)});
    CHECK(prune(extra) == g);
}

TEST_CASE("distinct_factor_lower_bound") {
    CHECK(distinct_factor_lower_bound(repeat_symbol(0, 5), 4) == 1);
    CHECK(distinct_factor_lower_bound(families::de_bruijn(4).bits, 4) == 4);
    CHECK(distinct_factor_lower_bound(ab("ababbbaabbaaab"), 8) <= 16);

    std::mt19937_64 rng(21);
    for (int iter = 0; iter < 100; ++iter) {
        auto w = testutil::random_word(rng, 1 + rng() % 60, 1 + rng() % 4);
        std::size_t expected = 0;
        for (std::size_t k = 1; k <= 8; ++k) {
            expected = std::max(expected, (testutil::distinct_factors(w.symbols, k) + k - 1) / k);
        }
        CHECK(distinct_factor_lower_bound(w, 8) == expected);
    }
}

TEST_CASE("words and alphabets") {
    CHECK(Word::from({0, 3, 1}).alphabet_size == 4);
    CHECK_THROWS_AS(Word({0, 5}, 3), GrammarError);
    CHECK(to_string(parse_word("01a", Alphabet::bits_and_a()), Alphabet::bits_and_a()) == "01a");
    CHECK(parse_word("01a", Alphabet::bits_and_a()).symbols == std::vector<symbol_t>{0, 1, 2});
    CHECK_THROWS_AS(parse_word("x", Alphabet::bits()), GrammarError);
    CHECK(to_int_string(Word::from({3, 0, 12})) == "3 0 12");
}
