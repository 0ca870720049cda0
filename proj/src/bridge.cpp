#include <algorithm>

#include "gramlab/bridge.hpp"

namespace gramlab::bridge {

namespace {

[[noreturn]] void not_in_image(const std::string& what) {
    throw GrammarError(Errc::not_in_image, what);
}

void count(DecodeStats* stats, std::size_t n = 1) {
    if (stats) stats->operations += n;
}

} // namespace

Word phi_encode_word(const Word& w, std::size_t k) {
    std::vector<symbol_t> out;
    for (auto s : w.symbols) {
        if (s >= k) {
            throw GrammarError(Errc::out_of_range,
                               "phi: symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(k));
        }
        out.insert(out.end(), s, sym_a);
        out.push_back(sym_b);
    }
    return Word(std::move(out), 2);
}

Word phi_decode_word(const Word& v, std::size_t k) {
    std::vector<symbol_t> out;
    std::size_t run = 0;
    for (auto s : v.symbols) {
        if (s == sym_a) {
            if (++run >= k) not_in_image("a-run of length >= " + std::to_string(k));
        } else if (s == sym_b) {
            out.push_back(static_cast<symbol_t>(run));
            run = 0;
        } else {
            not_in_image("symbol " + std::to_string(s) + " is not binary");
        }
    }
    if (run) not_in_image("word ends inside an a-run");
    return Word(std::move(out), k);
}

Slp encode_slp(const Slp& g, std::size_t k) {
    require_valid(g);
    if (k == 0) throw GrammarError(Errc::precondition, "encode_slp: empty alphabet");
    auto used = terminals_used(g);
    for (std::size_t i = 0; i < k; ++i) {
        if (!std::binary_search(used.begin(), used.end(), static_cast<symbol_t>(i))) {
            throw GrammarError(Errc::precondition,
                               "encode_slp: symbol " + std::to_string(i) + " does not occur in the expansion");
        }
    }
    const nt_t base = g.fresh_id();
    Slp out(g.start(), {});
    for (const auto& [lhs, rhs] : g.rules()) {
        Rhs next = rhs;
        for (auto& t : next) {
            if (!t.is_terminal()) continue;
            if (t.id() >= k) {
                throw GrammarError(Errc::out_of_range,
                                   "encode_slp: terminal " + std::to_string(t.id()) + " outside alphabet");
            }
            t = N(base + t.id());
        }
        out.set_rule(lhs, std::move(next));
    }
    out.set_rule(base, {T(sym_b)});
    for (std::size_t i = 1; i < k; ++i) {
        out.set_rule(static_cast<nt_t>(base + i), {T(sym_a), N(static_cast<nt_t>(base + i - 1))});
    }
    return out;
}

std::vector<PsiToken> interleave(const Rhs& alpha, const std::map<nt_t, PsiDecomposition>& children,
                                 DecodeStats* stats) {
    std::vector<PsiToken> out;
    out.reserve(2 * alpha.size());
    for (auto t : alpha) {
        if (t.is_terminal()) {
            // psi(a) = 1, psi(b) = c_0 0; the normal form is unchanged by splitting psi(v) letterwise.
            if (t.id() == sym_a) {
                out.push_back(PsiToken::digit(1));
            } else if (t.id() == sym_b) {
                out.push_back(PsiToken::letter(0));
            } else {
                not_in_image("terminal " + std::to_string(t.id()) + " is not binary");
            }
            count(stats);
            continue;
        }
        const auto& d = children.at(t.id());
        if (d.left) out.push_back(PsiToken::letter(*d.left));
        if (d.middle_nt) out.push_back(PsiToken::middle(*d.middle_nt));
        out.push_back(PsiToken::digit(static_cast<std::uint32_t>(d.right)));
        count(stats, 3);
    }
    return out;
}

std::vector<PsiToken> reduce(const std::vector<PsiToken>& word, std::size_t k, DecodeStats* stats) {
    std::vector<PsiToken> out;
    out.reserve(word.size() + 1);
    std::size_t pending = 0;
    bool has_pending = false;
    for (const auto& t : word) {
        count(stats);
        switch (t.kind) {
        case PsiToken::Kind::digit:
            pending += t.value;
            has_pending = true;
            if (pending >= k) not_in_image("a-run of length >= " + std::to_string(k));
            break;
        case PsiToken::Kind::letter:
            pending += t.value;
            if (pending >= k) not_in_image("a-run of length >= " + std::to_string(k));
            out.push_back(PsiToken::letter(static_cast<symbol_t>(pending)));
            pending = 0;
            has_pending = false;
            break;
        case PsiToken::Kind::middle:
            if (has_pending) not_in_image("digit directly before a middle nonterminal");
            out.push_back(t);
            break;
        }
    }
    out.push_back(PsiToken::digit(static_cast<std::uint32_t>(pending)));
    return out;
}

std::vector<PsiToken> reduce_random_order(std::vector<PsiToken> word, std::size_t k, std::mt19937_64& rng) {
    using K = PsiToken::Kind;
    while (true) {
        std::vector<std::size_t> sites;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            if (word[i].kind == K::digit && word[i + 1].kind != K::middle) sites.push_back(i);
        }
        if (sites.empty()) break;
        const std::size_t i = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
        const std::size_t sum = std::size_t{word[i].value} + word[i + 1].value;
        if (sum >= k) not_in_image("a-run of length >= " + std::to_string(k));
        word[i + 1].value = static_cast<std::uint32_t>(sum);
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(i));
    }
    if (word.empty() || word.back().kind != K::digit) word.push_back(PsiToken::digit(0));
    return word;
}

PsiDecomposition decode_production(nt_t self, const Rhs& alpha, const std::map<nt_t, PsiDecomposition>& children,
                                   std::size_t k, Rhs& middle_rhs, DecodeStats* stats) {
    auto reduced = reduce(interleave(alpha, children, stats), k, stats);
    PsiDecomposition d;
    d.right = reduced.back().value;
    reduced.pop_back();
    middle_rhs.clear();
    if (reduced.empty()) return d;
    if (reduced.front().kind != PsiToken::Kind::letter) not_in_image("middle nonterminal without a left symbol");
    d.left = reduced.front().value;
    for (std::size_t i = 1; i < reduced.size(); ++i) {
        const auto& t = reduced[i];
        middle_rhs.push_back(t.kind == PsiToken::Kind::letter ? T(t.value) : N(t.value));
    }
    if (!middle_rhs.empty()) d.middle_nt = self;
    return d;
}

Slp decode_slp(const Slp& b, std::size_t k, DecodeStats* stats) {
    require_valid(b);
    if (k == 0) throw GrammarError(Errc::precondition, "decode_slp: empty alphabet");
    std::map<nt_t, PsiDecomposition> psi;
    std::map<nt_t, Rhs> rules;
    for (nt_t a : topological_order(b)) {
        Rhs middle;
        psi[a] = decode_production(a, b.rhs(a), psi, k, middle, stats);
        if (!middle.empty()) rules[a] = std::move(middle);
    }
    const auto& s = psi.at(b.start());
    if (s.right != 0) not_in_image("the start expansion ends inside an a-run");
    if (!s.left) not_in_image("the start expands to a word without b");
    Rhs start{T(*s.left)};
    if (s.middle_nt) {
        auto it = rules.find(b.start());
        start.insert(start.end(), it->second.begin(), it->second.end());
    }
    rules[b.start()] = std::move(start);
    return prune(Slp(b.start(), std::move(rules)));
}

Word dense_remap(const Word& w, std::vector<symbol_t>& remap) {
    remap = w.symbols;
    std::sort(remap.begin(), remap.end());
    remap.erase(std::unique(remap.begin(), remap.end()), remap.end());
    std::vector<symbol_t> out;
    out.reserve(w.size());
    for (auto s : w.symbols) {
        out.push_back(static_cast<symbol_t>(std::lower_bound(remap.begin(), remap.end(), s) - remap.begin()));
    }
    return Word(std::move(out), remap.size());
}

BridgeResult compressor_D(const Word& w, const BinaryCompressor& c) {
    if (w.empty()) throw GrammarError(Errc::empty_word, "compressor D on the empty word");
    BridgeResult r;
    const Word dense = dense_remap(w, r.remap);
    const std::size_t k = r.remap.size();
    Slp b = c(phi_encode_word(dense, k));
    r.binary_size = b.size();
    r.grammar = rename_terminals(decode_slp(b, k), r.remap);
    return r;
}

} // namespace gramlab::bridge
