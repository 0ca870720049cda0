#include "doctest.h"

#include "gramlab/factors.hpp"
#include "util.hpp"

using namespace gramlab;

TEST_CASE("factor counts: parallel matches serial") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 50; ++iter) {
        auto w = testutil::repetitive_word(rng, 1 + rng() % 3000, 1 + rng() % 4);
        auto p = kernels::distinct_factor_counts(w.symbols, 8);
        CHECK(p == kernels::serial::distinct_factor_counts(w.symbols, 8));
        for (std::size_t k = 1; k <= 8 && iter < 10; ++k) CHECK(p[k - 1] == testutil::distinct_factors(w.symbols, k));
    }
}

TEST_CASE("repeated factor search: parallel matches serial") {
    std::mt19937_64 rng(32);
    for (int iter = 0; iter < 300; ++iter) {
        auto w = testutil::random_word(rng, 1 + rng() % 40, 2 + rng() % 3);
        for (std::size_t n : {2, 3}) {
            for (std::size_t ell : {1, 2, 3, 4}) {
                CHECK(kernels::has_repeated_factor(w.symbols, n, ell) ==
                      kernels::serial::has_repeated_factor(w.symbols, n, ell));
            }
        }
        CHECK(kernels::is_compressible(w.symbols) == (kernels::serial::has_repeated_factor(w.symbols, 3, 2) ||
                                                      kernels::serial::has_repeated_factor(w.symbols, 2, 3)));
    }
}

TEST_CASE("exhaustive sweep: parallel matches serial") {
    for (std::uint32_t k : {1u, 2u, 3u}) {
        for (std::size_t n = 1; n <= (k == 3 ? 7u : 12u); ++n) {
            auto p = kernels::incompressible_sweep(k, n);
            auto s = kernels::serial::incompressible_sweep(k, n);
            CHECK(p.words == s.words);
            CHECK(p.incompressible == s.incompressible);
            CHECK(p.has_example == s.has_example);
            CHECK(p.example == s.example);
        }
    }
}

TEST_CASE("nonoverlapping count and word indexing") {
    auto a = parse_word("aaaaa").symbols;
    std::vector<symbol_t> aa{0, 0};
    CHECK(kernels::nonoverlapping_count(a, aa) == 2);
    std::vector<symbol_t> w;
    kernels::word_from_index(5, 2, 4, w);
    CHECK(w == std::vector<symbol_t>{0, 1, 0, 1});
}
