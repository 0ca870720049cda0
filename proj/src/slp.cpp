#include "gramlab/slp.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>

#include "gramlab/factors.hpp"

namespace gramlab {

std::string to_string(length_t v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

const Rhs& Slp::rhs(nt_t a) const {
    auto it = m_rules.find(a);
    if (it == m_rules.end()) {
        throw GrammarError(Errc::invalid_slp, "no production for n:" + std::to_string(a));
    }
    return it->second;
}

nt_t Slp::fresh_id() const {
    nt_t top = m_start;
    for (const auto& [lhs, rhs] : m_rules) {
        top = std::max(top, lhs);
        for (auto t : rhs) {
            if (t.is_nonterminal()) top = std::max(top, t.id());
        }
    }
    return top + 1;
}

std::size_t Slp::size() const {
    std::size_t total = 0;
    for (const auto& [lhs, rhs] : m_rules) total += rhs.size();
    return total;
}

std::size_t size(const Slp& g) { return g.size(); }

// ---------------------------------------------------------------------------
// validation

namespace {

/// Tarjan's SCC over the rule graph, iterative. Returns the nontrivial components.
std::vector<std::vector<nt_t>> cyclic_components(const Slp& g) {
    struct Frame {
        nt_t node;
        std::size_t next;
    };
    std::unordered_map<nt_t, std::size_t> index, low;
    std::unordered_map<nt_t, bool> on_stack;
    std::vector<nt_t> stack;
    std::vector<std::vector<nt_t>> result;
    std::size_t counter = 0;

    for (const auto& [root, unused] : g.rules()) {
        if (index.count(root)) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& f = frames.back();
            const auto& rhs = g.rules().at(f.node);
            bool descended = false;
            while (f.next < rhs.size()) {
                Token t = rhs[f.next++];
                if (!t.is_nonterminal() || !g.has_rule(t.id())) continue;
                nt_t w = t.id();
                if (!index.count(w)) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[f.node] = std::min(low[f.node], index[w]);
            }
            if (descended) continue;
            nt_t v = f.node;
            frames.pop_back();
            if (!frames.empty()) {
                nt_t parent = frames.back().node;
                low[parent] = std::min(low[parent], low[v]);
            }
            if (low[v] == index[v]) {
                std::vector<nt_t> comp;
                nt_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                bool self_loop = false;
                if (comp.size() == 1) {
                    for (auto t : g.rules().at(v)) {
                        if (t.is_nonterminal() && t.id() == v) self_loop = true;
                    }
                }
                if (comp.size() > 1 || self_loop) {
                    std::sort(comp.begin(), comp.end());
                    result.push_back(std::move(comp));
                }
            }
        }
    }
    return result;
}

std::string nt_list(const std::vector<nt_t>& ids) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ",";
        s += "n:" + std::to_string(ids[i]);
    }
    return s;
}

} // namespace

ValidationResult validate(const Slp& g) {
    ValidationResult result;
    if (!g.has_rule(g.start())) {
        result.violations.push_back({Violation::Kind::missing_start, {g.start()},
                                     "start n:" + std::to_string(g.start()) + " has no production"});
    }
    for (const auto& [lhs, rhs] : g.rules()) {
        if (rhs.empty()) {
            result.violations.push_back({Violation::Kind::empty_rhs, {lhs},
                                         "n:" + std::to_string(lhs) + " has an empty right-hand side"});
        }
        std::set<nt_t> reported;
        for (auto t : rhs) {
            if (t.is_separator()) {
                result.violations.push_back({Violation::Kind::dangling_reference, {lhs},
                                             "separator token in n:" + std::to_string(lhs)});
            } else if (t.is_nonterminal() && !g.has_rule(t.id()) && reported.insert(t.id()).second) {
                result.violations.push_back(
                    {Violation::Kind::dangling_reference, {t.id()},
                     "n:" + std::to_string(lhs) + " references n:" + std::to_string(t.id()) +
                         " which has no production"});
            }
        }
    }
    for (auto& comp : cyclic_components(g)) {
        std::string msg = "cycle through {" + nt_list(comp) + "}";
        result.violations.push_back({Violation::Kind::cycle, std::move(comp), std::move(msg)});
    }
    return result;
}

void require_valid(const Slp& g) {
    auto r = validate(g);
    if (r.ok()) return;
    std::string msg = "invalid SLP:";
    for (const auto& v : r.violations) msg += " " + v.message + ";";
    throw GrammarError(Errc::invalid_slp, msg);
}

std::vector<nt_t> topological_order(const Slp& g) {
    std::vector<nt_t> order;
    std::unordered_map<nt_t, std::uint8_t> state; // 1 = on path, 2 = done
    struct Frame {
        nt_t node;
        std::size_t next;
    };
    if (!g.has_rule(g.start())) {
        throw GrammarError(Errc::invalid_slp, "start has no production");
    }
    std::vector<Frame> frames{{g.start(), 0}};
    state[g.start()] = 1;
    while (!frames.empty()) {
        auto& f = frames.back();
        const auto& rhs = g.rhs(f.node);
        bool descended = false;
        while (f.next < rhs.size()) {
            Token t = rhs[f.next++];
            if (!t.is_nonterminal()) continue;
            auto& st = state[t.id()];
            if (st == 2) continue;
            if (st == 1) throw GrammarError(Errc::invalid_slp, "cycle through n:" + std::to_string(t.id()));
            if (!g.has_rule(t.id())) {
                throw GrammarError(Errc::invalid_slp, "dangling n:" + std::to_string(t.id()));
            }
            st = 1;
            frames.push_back({t.id(), 0});
            descended = true;
            break;
        }
        if (descended) continue;
        state[f.node] = 2;
        order.push_back(f.node);
        frames.pop_back();
    }
    return order;
}

// ---------------------------------------------------------------------------
// evaluation

std::map<nt_t, length_t> expansion_lengths(const Slp& g) {
    std::map<nt_t, length_t> len;
    for (nt_t a : topological_order(g)) {
        length_t total = 0;
        for (auto t : g.rhs(a)) {
            length_t part = t.is_nonterminal() ? len.at(t.id()) : 1;
            if (__builtin_add_overflow(total, part, &total)) {
                throw GrammarError(Errc::length_overflow,
                                   "expansion of n:" + std::to_string(a) + " exceeds 128 bits");
            }
        }
        len[a] = total;
    }
    return len;
}

length_t expansion_length(const Slp& g, nt_t nt) {
    auto lens = expansion_lengths(g);
    auto it = lens.find(nt);
    if (it == lens.end()) {
        // Not reachable from the start: evaluate with nt as the start.
        Slp sub = g;
        sub.set_start(nt);
        return expansion_lengths(sub).at(nt);
    }
    return it->second;
}

length_t expansion_length(const Slp& g) { return expansion_length(g, g.start()); }

namespace {

void expand_into(const Slp& g, nt_t root, std::vector<symbol_t>& out) {
    struct Frame {
        const Rhs* rhs;
        std::size_t next;
    };
    std::vector<Frame> stack{{&g.rhs(root), 0}};
    while (!stack.empty()) {
        auto& f = stack.back();
        if (f.next == f.rhs->size()) {
            stack.pop_back();
            continue;
        }
        Token t = (*f.rhs)[f.next++];
        if (t.is_terminal()) {
            out.push_back(t.id());
        } else {
            stack.push_back({&g.rhs(t.id()), 0});
        }
    }
}

Word expand_from(const Slp& g, nt_t root, std::size_t length_cap) {
    require_valid(g);
    Slp rooted = g;
    rooted.set_start(root);
    length_t n = expansion_length(rooted, root);
    if (n > length_cap) {
        throw GrammarError(Errc::cap_exceeded, "expansion length " + to_string(n) +
                                                   " exceeds cap " + std::to_string(length_cap));
    }
    std::vector<symbol_t> out;
    out.reserve(static_cast<std::size_t>(n));
    expand_into(g, root, out);
    return Word::from(std::move(out));
}

} // namespace

Word expand(const Slp& g, std::size_t length_cap) { return expand_from(g, g.start(), length_cap); }

Word expand_nonterminal(const Slp& g, nt_t nt, std::size_t length_cap) {
    return expand_from(g, nt, length_cap);
}

// ---------------------------------------------------------------------------
// constructions

Slp trivial(const Word& w) {
    if (w.empty()) throw GrammarError(Errc::empty_word, "trivial SLP of the empty word");
    Rhs rhs;
    rhs.reserve(w.size());
    for (auto s : w.symbols) rhs.push_back(T(s));
    return Slp(0, {{0, std::move(rhs)}});
}

namespace {

/// Smallest b with sigma^b >= n.
std::size_t ceil_log(std::size_t sigma, std::size_t n) {
    std::size_t b = 0;
    length_t p = 1;
    while (p < n) {
        p *= sigma;
        ++b;
    }
    return b;
}

/// Largest b with sigma^(2b) <= n, i.e. floor(log_sigma(n) / 2).
std::size_t half_floor_log(std::size_t sigma, std::size_t n) {
    std::size_t b = 0;
    length_t p = static_cast<length_t>(sigma) * sigma;
    while (p <= n) {
        ++b;
        p *= static_cast<length_t>(sigma) * sigma;
    }
    return b;
}

/// If the start rule has a single token, returns it and drops the rule.
Token detach_start(Slp& g) {
    const auto& rhs = g.rhs(g.start());
    if (rhs.size() == 1) {
        Token t = rhs.front();
        g.erase_rule(g.start());
        return t;
    }
    return N(g.start());
}

void collapse_unit_start(Slp& g) {
    while (true) {
        const auto& rhs = g.rhs(g.start());
        if (rhs.size() != 1 || !rhs.front().is_nonterminal()) return;
        nt_t next = rhs.front().id();
        g.erase_rule(g.start());
        g.set_start(next);
    }
}

} // namespace

Slp build_block(const Word& w) {
    if (w.empty()) throw GrammarError(Errc::empty_word, "build_block of the empty word");
    const std::size_t n = w.size();
    const std::size_t sigma = std::max<std::size_t>(w.alphabet_size, 1);
    if (sigma == 1) return power(trivial(Word::from({w[0]})), n);

    std::size_t b = std::max<std::size_t>(1, half_floor_log(sigma, n));
    b = std::min<std::size_t>(b, 20);
    b = std::min(b, std::max<std::size_t>(1, ceil_log(sigma, n)));
    if (b == 1) return trivial(w);

    // One nonterminal per block prefix of length >= 2, each extending its prefix by one symbol.
    std::map<std::pair<std::uint32_t, symbol_t>, nt_t> extension;
    std::map<nt_t, Rhs> rules;
    nt_t next = 1;
    Rhs start;
    const std::size_t full = n / b;
    for (std::size_t blk = 0; blk < full; ++blk) {
        Token cur = T(w[blk * b]);
        for (std::size_t j = 1; j < b; ++j) {
            symbol_t s = w[blk * b + j];
            auto [it, inserted] = extension.try_emplace({cur.raw(), s}, next);
            if (inserted) {
                rules[next] = Rhs{cur, T(s)};
                ++next;
            }
            cur = N(it->second);
        }
        start.push_back(cur);
    }
    for (std::size_t i = full * b; i < n; ++i) start.push_back(T(w[i]));
    rules[0] = std::move(start);
    Slp g(0, std::move(rules));
    if (g.size() > n) return trivial(w);
    return g;
}

Slp power(const Slp& g, std::uint64_t n) {
    if (n == 0) throw GrammarError(Errc::precondition, "power exponent must be positive");
    require_valid(g);
    if (n == 1) return g;
    Slp out = prune(g);
    nt_t fresh = out.fresh_id();
    Token base = detach_start(out);

    const int top = std::bit_width(n) - 1;
    std::vector<Token> squares{base};
    for (int i = 1; i <= top; ++i) {
        nt_t id = fresh++;
        out.set_rule(id, Rhs{squares.back(), squares.back()});
        squares.push_back(N(id));
    }
    if (std::popcount(n) == 1) {
        out.set_start(squares.back().id());
        return out;
    }
    Rhs start{squares[top]};
    for (int i = top - 1; i >= 0; --i) {
        if ((n >> i) & 1u) start.push_back(squares[i]);
    }
    nt_t s = fresh++;
    out.set_rule(s, std::move(start));
    out.set_start(s);
    return out;
}

Slp concat(const Slp& a, const Slp& b) {
    require_valid(a);
    require_valid(b);
    Slp left = prune(a);
    Slp right = shift_nonterminals(prune(b), left.fresh_id());
    Rhs start = left.rhs(left.start());
    const auto& tail = right.rhs(right.start());
    start.insert(start.end(), tail.begin(), tail.end());
    nt_t s = right.fresh_id();
    left.erase_rule(left.start());
    right.erase_rule(right.start());
    for (auto& [lhs, rhs] : right.rules()) left.set_rule(lhs, rhs);
    left.set_rule(s, std::move(start));
    left.set_start(s);
    return left;
}

Slp substitute(const Slp& pattern, const Slp& replacement, symbol_t x) {
    require_valid(pattern);
    require_valid(replacement);
    auto rterms = terminals_used(replacement);
    if (std::binary_search(rterms.begin(), rterms.end(), x)) {
        throw GrammarError(Errc::precondition,
                           "substituted symbol " + std::to_string(x) + " occurs in the replacement");
    }
    Slp out = prune(pattern);
    auto pterms = terminals_used(out);
    if (!std::binary_search(pterms.begin(), pterms.end(), x)) return out;

    Slp repl = shift_nonterminals(prune(replacement), out.fresh_id());
    Token with = detach_start(repl);
    for (const auto& [lhs, rhs] : out.rules()) {
        Rhs next = rhs;
        for (auto& t : next) {
            if (t == T(x)) t = with;
        }
        out.set_rule(lhs, std::move(next));
    }
    for (const auto& [lhs, rhs] : repl.rules()) out.set_rule(lhs, rhs);
    collapse_unit_start(out);
    return out;
}

Slp apply_morphism(const Slp& g, const std::vector<std::vector<symbol_t>>& image) {
    Slp out(g.start(), {});
    for (const auto& [lhs, rhs] : g.rules()) {
        Rhs next;
        next.reserve(rhs.size());
        for (auto t : rhs) {
            if (!t.is_terminal()) {
                next.push_back(t);
                continue;
            }
            if (t.id() >= image.size() || image[t.id()].empty()) {
                throw GrammarError(Errc::out_of_range,
                                   "morphism has no nonempty image for symbol " + std::to_string(t.id()));
            }
            for (auto s : image[t.id()]) next.push_back(T(s));
        }
        out.set_rule(lhs, std::move(next));
    }
    return out;
}

Slp rename_terminals(const Slp& g, const std::vector<symbol_t>& rename) {
    std::vector<std::vector<symbol_t>> image(rename.size());
    for (std::size_t i = 0; i < rename.size(); ++i) image[i] = {rename[i]};
    return apply_morphism(g, image);
}

Slp shift_nonterminals(const Slp& g, nt_t offset) {
    std::map<nt_t, Rhs> rules;
    for (const auto& [lhs, rhs] : g.rules()) {
        Rhs next = rhs;
        for (auto& t : next) {
            if (t.is_nonterminal()) t = N(t.id() + offset);
        }
        rules.emplace_hint(rules.end(), lhs + offset, std::move(next));
    }
    return Slp(g.start() + offset, std::move(rules));
}

Slp prune(const Slp& g) {
    Slp out(g.start(), {});
    for (nt_t a : topological_order(g)) out.set_rule(a, g.rhs(a));
    return out;
}

Slp canonicalize(const Slp& g) {
    std::unordered_map<nt_t, nt_t> rename;
    std::vector<nt_t> visit_order;
    struct Frame {
        nt_t node;
        std::size_t next;
    };
    rename[g.start()] = 0;
    visit_order.push_back(g.start());
    std::vector<Frame> stack{{g.start(), 0}};
    while (!stack.empty()) {
        auto& f = stack.back();
        const auto& rhs = g.rhs(f.node);
        if (f.next == rhs.size()) {
            stack.pop_back();
            continue;
        }
        Token t = rhs[f.next++];
        if (!t.is_nonterminal() || rename.count(t.id())) continue;
        rename[t.id()] = static_cast<nt_t>(visit_order.size());
        visit_order.push_back(t.id());
        stack.push_back({t.id(), 0});
    }
    std::map<nt_t, Rhs> rules;
    for (nt_t old : visit_order) {
        Rhs next = g.rhs(old);
        for (auto& t : next) {
            if (t.is_nonterminal()) t = N(rename.at(t.id()));
        }
        rules[rename.at(old)] = std::move(next);
    }
    return Slp(0, std::move(rules));
}

std::vector<symbol_t> terminals_used(const Slp& g) {
    std::set<symbol_t> seen;
    for (nt_t a : topological_order(g)) {
        for (auto t : g.rhs(a)) {
            if (t.is_terminal()) seen.insert(t.id());
        }
    }
    return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// lower bounds

std::size_t distinct_factor_lower_bound(const Word& w, std::size_t max_k) {
    if (w.empty()) throw GrammarError(Errc::empty_word, "factor bound of the empty word");
    auto counts = kernels::distinct_factor_counts(w.view(), max_k);
    std::size_t best = 1;
    for (std::size_t k = 1; k <= counts.size(); ++k) {
        best = std::max(best, (counts[k - 1] + k - 1) / k);
    }
    return best;
}

} // namespace gramlab
