#include <unordered_map>

#include "gramlab/compressors.hpp"

namespace gramlab {

Lz78Factorization lz78_factorize(const Word& w) {
    Lz78Factorization f;
    if (w.empty()) throw GrammarError(Errc::empty_word, "LZ78 factorization of the empty word");

    // Trie over the factors; node i is factor f_i, node 0 is epsilon.
    std::unordered_map<std::uint64_t, std::size_t> child;
    auto key = [](std::size_t node, symbol_t a) { return (std::uint64_t{node} << 32) | a; };

    const std::size_t n = w.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t node = 0;
        std::size_t j = i;
        while (j < n) {
            auto it = child.find(key(node, w[j]));
            if (it == child.end()) break;
            node = it->second;
            ++j;
        }
        if (j == n) {
            // The unprocessed suffix is already a factor.
            f.factors.emplace_back(std::vector<symbol_t>(w.symbols.begin() + i, w.symbols.end()),
                                   w.alphabet_size);
            f.last_ref = node;
            return f;
        }
        const std::size_t id = f.factors.size() + 1;
        child.emplace(key(node, w[j]), id);
        f.refs.emplace_back(node, w[j]);
        f.factors.emplace_back(std::vector<symbol_t>(w.symbols.begin() + i, w.symbols.begin() + j + 1),
                               w.alphabet_size);
        i = j + 1;
    }
    f.factors.emplace_back(std::vector<symbol_t>{}, w.alphabet_size);
    f.last_ref = 0;
    return f;
}

Slp lz78(const Lz78Factorization& f) {
    std::map<nt_t, Rhs> rules;
    Rhs start;
    for (std::size_t i = 0; i < f.refs.size(); ++i) {
        const auto [j, a] = f.refs[i];
        const auto id = static_cast<nt_t>(i + 1);
        rules[id] = j == 0 ? Rhs{T(a)} : Rhs{N(static_cast<nt_t>(j)), T(a)};
        start.push_back(N(id));
    }
    if (f.last_ref != 0) start.push_back(N(static_cast<nt_t>(f.last_ref)));
    if (start.size() == 1) return Slp(start.front().id(), std::move(rules));
    rules[0] = std::move(start);
    return Slp(0, std::move(rules));
}

Slp lz78(const Word& w) { return lz78(lz78_factorize(w)); }

} // namespace gramlab
