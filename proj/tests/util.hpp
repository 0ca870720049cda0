#pragma once

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "gramlab/slp.hpp"

namespace testutil {

inline gramlab::Word random_word(std::mt19937_64& rng, std::size_t n, std::size_t sigma) {
    std::uniform_int_distribution<gramlab::symbol_t> d(0, static_cast<gramlab::symbol_t>(sigma - 1));
    std::vector<gramlab::symbol_t> w(n);
    for (auto& s : w) s = d(rng);
    return gramlab::Word(std::move(w), sigma);
}

/// Word with planted repeats so that compressors have something to find.
inline gramlab::Word repetitive_word(std::mt19937_64& rng, std::size_t n, std::size_t sigma) {
    std::vector<gramlab::symbol_t> w;
    std::uniform_int_distribution<int> coin(0, 2);
    while (w.size() < n) {
        if (w.size() > 4 && coin(rng) == 0) {
            std::uniform_int_distribution<std::size_t> from(0, w.size() - 2);
            std::size_t a = from(rng);
            std::size_t len = std::min<std::size_t>(w.size() - a, 1 + rng() % 12);
            for (std::size_t i = 0; i < len && w.size() < n; ++i) w.push_back(w[a + i]);
        } else {
            w.push_back(static_cast<gramlab::symbol_t>(rng() % sigma));
        }
    }
    return gramlab::Word(std::move(w), sigma);
}

/// Random valid SLP: rules over earlier nonterminals and terminals below sigma.
inline gramlab::Slp random_slp(std::mt19937_64& rng, std::size_t rules, std::size_t sigma) {
    using namespace gramlab;
    std::map<nt_t, Rhs> prods;
    for (nt_t a = 1; a <= rules; ++a) {
        std::size_t len = 1 + rng() % 4;
        Rhs rhs;
        for (std::size_t i = 0; i < len; ++i) {
            if (a > 1 && rng() % 2) {
                rhs.push_back(N(static_cast<nt_t>(1 + rng() % (a - 1))));
            } else {
                rhs.push_back(T(static_cast<symbol_t>(rng() % sigma)));
            }
        }
        prods[a] = std::move(rhs);
    }
    return Slp(static_cast<nt_t>(rules), std::move(prods));
}

/// Brute-force val with cycle detection; nullopt when the grammar is not an SLP.
inline std::optional<std::vector<gramlab::symbol_t>> naive_eval(const gramlab::Slp& g, gramlab::nt_t a,
                                                               std::vector<gramlab::nt_t>& path) {
    using namespace gramlab;
    if (!g.has_rule(a) || g.rhs(a).empty()) return std::nullopt;
    for (auto p : path) {
        if (p == a) return std::nullopt;
    }
    path.push_back(a);
    std::vector<symbol_t> out;
    for (auto t : g.rhs(a)) {
        if (t.is_terminal()) {
            out.push_back(t.id());
        } else {
            auto sub = naive_eval(g, t.id(), path);
            if (!sub) return std::nullopt;
            out.insert(out.end(), sub->begin(), sub->end());
        }
        if (out.size() > 100000) return std::nullopt;
    }
    path.pop_back();
    return out;
}

inline std::size_t distinct_factors(const std::vector<gramlab::symbol_t>& w, std::size_t k) {
    std::set<std::vector<gramlab::symbol_t>> s;
    for (std::size_t i = 0; i + k <= w.size(); ++i) s.emplace(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + k));
    return s.size();
}

} // namespace testutil
