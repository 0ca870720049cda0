#include <algorithm>
#include <limits>
#include <ostream>
#include <unordered_map>

#include "gramlab/compressors.hpp"

namespace gramlab {

const char* to_string(RepairVariant v) noexcept {
    return v == RepairVariant::digram ? "digram" : "maximal";
}

RepairVariant parse_repair_variant(const std::string& name) {
    if (name == "maximal" || name == "maximal-string") return RepairVariant::maximal_string;
    if (name == "digram") return RepairVariant::digram;
    throw GrammarError(Errc::parse, "unknown RePair variant '" + name + "' (expected maximal or digram)");
}

namespace detail {

std::vector<Token> flatten_rules(const Slp& g, std::vector<nt_t>* rule_order) {
    std::vector<Token> seq;
    auto order = topological_order(g);
    std::uint32_t sep = 0;
    for (nt_t a : order) {
        const auto& rhs = g.rhs(a);
        seq.insert(seq.end(), rhs.begin(), rhs.end());
        seq.push_back(Token::separator(sep++));
    }
    if (rule_order) *rule_order = std::move(order);
    return seq;
}

namespace {

std::uint64_t pair_key(Token a, Token b) { return (std::uint64_t{a.raw()} << 32) | b.raw(); }

std::size_t greedy_count(const std::vector<std::uint32_t>& positions, std::size_t len) {
    std::size_t count = 0;
    std::size_t next_free = 0;
    for (auto p : positions) {
        if (p >= next_free) {
            ++count;
            next_free = p + len;
        }
    }
    return count;
}

} // namespace

std::vector<std::vector<RepeatedFactor>> repeated_factors(const std::vector<Token>& seq,
                                                          std::size_t threshold) {
    std::vector<std::vector<RepeatedFactor>> levels;
    if (seq.size() < 2) return levels;
    threshold = std::max<std::size_t>(threshold, 1);

    struct PairState {
        std::size_t count = 0;
        std::size_t next_free = 0;
        std::size_t slot = std::numeric_limits<std::size_t>::max();
    };
    std::unordered_map<std::uint64_t, PairState> pairs;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (seq[i].is_separator() || seq[i + 1].is_separator()) continue;
        auto& st = pairs[pair_key(seq[i], seq[i + 1])];
        if (i >= st.next_free) {
            ++st.count;
            st.next_free = i + 2;
        }
    }

    std::vector<RepeatedFactor> level;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (seq[i].is_separator() || seq[i + 1].is_separator()) continue;
        auto& st = pairs[pair_key(seq[i], seq[i + 1])];
        if (st.count < threshold) continue;
        if (st.slot == std::numeric_limits<std::size_t>::max()) {
            st.slot = level.size();
            level.push_back({{seq[i], seq[i + 1]}, st.count, {}});
        }
        level[st.slot].positions.push_back(static_cast<std::uint32_t>(i));
    }

    std::size_t len = 2;
    while (!level.empty()) {
        std::vector<RepeatedFactor> next;
        for (const auto& f : level) {
            // Extend by one token to the right; positions stay sorted within each group.
            std::map<std::uint32_t, std::vector<std::uint32_t>> groups;
            for (auto p : f.positions) {
                std::size_t q = p + len;
                if (q >= seq.size() || seq[q].is_separator()) continue;
                groups[seq[q].raw()].push_back(p);
            }
            for (auto& [raw, pos] : groups) {
                if (pos.size() < threshold) continue;
                std::size_t c = greedy_count(pos, len + 1);
                if (c < threshold) continue;
                RepeatedFactor ext;
                ext.tokens = f.tokens;
                ext.tokens.push_back(seq[pos.front() + len]);
                ext.count = c;
                ext.positions = std::move(pos);
                next.push_back(std::move(ext));
            }
        }
        levels.push_back(std::move(level));
        level = std::move(next);
        ++len;
    }
    return levels;
}

} // namespace detail

namespace {

/// Working grammar: rules children-first, the start rule last.
struct WorkingGrammar {
    std::vector<nt_t> ids;
    std::vector<Rhs> rhs;

    std::size_t size() const {
        std::size_t s = 0;
        for (const auto& r : rhs) s += r.size();
        return s;
    }

    std::vector<Token> flatten() const {
        std::vector<Token> seq;
        seq.reserve(size() + rhs.size());
        for (std::size_t i = 0; i < rhs.size(); ++i) {
            seq.insert(seq.end(), rhs[i].begin(), rhs[i].end());
            seq.push_back(Token::separator(static_cast<std::uint32_t>(i)));
        }
        return seq;
    }

    void unflatten(const std::vector<Token>& seq) {
        std::size_t r = 0;
        rhs.assign(ids.size(), {});
        for (auto t : seq) {
            if (t.is_separator()) {
                ++r;
            } else {
                rhs[r].push_back(t);
            }
        }
    }
};

struct Selection {
    std::vector<Token> tokens;
    std::vector<std::uint32_t> positions;
};

bool select_digram(const std::vector<Token>& seq, Selection& out) {
    struct State {
        std::size_t count = 0;
        std::size_t next_free = 0;
        std::size_t first = 0;
    };
    std::unordered_map<std::uint64_t, State> pairs;
    pairs.reserve(1024);
    std::size_t best_count = 0;
    std::size_t best_first = 0;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (seq[i].is_separator() || seq[i + 1].is_separator()) continue;
        const std::uint64_t key = (std::uint64_t{seq[i].raw()} << 32) | seq[i + 1].raw();
        auto [it, inserted] = pairs.try_emplace(key);
        auto& st = it->second;
        if (inserted) st.first = i;
        if (i >= st.next_free) {
            ++st.count;
            st.next_free = i + 2;
            if (st.count > best_count || (st.count == best_count && st.first < best_first)) {
                best_count = st.count;
                best_first = st.first;
            }
        }
    }
    if (best_count < 2) return false;
    const Token a = seq[best_first];
    const Token b = seq[best_first + 1];
    out.tokens = {a, b};
    out.positions.clear();
    for (std::size_t i = best_first; i + 1 < seq.size(); ++i) {
        if (seq[i] == a && seq[i + 1] == b) out.positions.push_back(static_cast<std::uint32_t>(i));
    }
    return true;
}

bool select_maximal(const std::vector<Token>& seq, Selection& out) {
    // Non-overlapping counts can only drop when a string is extended, so the most
    // frequent maximal strings are the longest strings attaining the top digram count.
    std::size_t top = 0;
    {
        std::unordered_map<std::uint64_t, std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            if (seq[i].is_separator() || seq[i + 1].is_separator()) continue;
            auto& [count, next_free] = pairs[(std::uint64_t{seq[i].raw()} << 32) | seq[i + 1].raw()];
            if (i >= next_free) {
                ++count;
                next_free = i + 2;
                top = std::max(top, count);
            }
        }
    }
    if (top < 2) return false;
    auto levels = detail::repeated_factors(seq, top);
    auto& last = levels.back();
    auto best = std::min_element(last.begin(), last.end(), [](const auto& x, const auto& y) {
        return x.positions.front() < y.positions.front();
    });
    out.tokens = std::move(best->tokens);
    out.positions = std::move(best->positions);
    return true;
}

} // namespace

RepairResult repair(const Word& w, RepairVariant variant) {
    if (w.empty()) throw GrammarError(Errc::empty_word, "RePair of the empty word");
    RepairResult result;
    WorkingGrammar g;
    g.ids.push_back(0);
    g.rhs.push_back({});
    g.rhs[0].reserve(w.size());
    for (auto s : w.symbols) g.rhs[0].push_back(T(s));
    result.trace.initial_size = w.size();

    std::size_t current_size = w.size();
    nt_t next_id = 1;
    Selection sel;
    while (true) {
        std::vector<Token> seq = g.flatten();
        bool found = variant == RepairVariant::digram ? select_digram(seq, sel) : select_maximal(seq, sel);
        if (!found) break;

        const std::size_t len = sel.tokens.size();
        const Token x = N(next_id);
        std::vector<Token> rewritten;
        rewritten.reserve(seq.size());
        std::size_t replaced = 0;
        std::size_t i = 0;
        auto pos = sel.positions.begin();
        while (i < seq.size()) {
            while (pos != sel.positions.end() && *pos < i) ++pos;
            if (pos != sel.positions.end() && *pos == i) {
                rewritten.push_back(x);
                ++replaced;
                i += len;
            } else {
                rewritten.push_back(seq[i]);
                ++i;
            }
        }
        g.unflatten(rewritten);
        // New rule goes right before the start rule, keeping children-first order.
        g.ids.insert(g.ids.end() - 1, next_id);
        g.rhs.insert(g.rhs.end() - 1, Rhs(sel.tokens.begin(), sel.tokens.end()));

        current_size = current_size + replaced + len - replaced * len;
        result.trace.rounds.push_back({sel.tokens, replaced, next_id, current_size});
        ++next_id;
    }

    std::map<nt_t, Rhs> rules;
    for (std::size_t r = 0; r < g.ids.size(); ++r) rules[g.ids[r]] = std::move(g.rhs[r]);
    result.grammar = Slp(0, std::move(rules));
    return result;
}

std::vector<MaximalString> maximal_strings(const Slp& g) {
    require_valid(g);
    auto seq = detail::flatten_rules(g);
    auto levels = detail::repeated_factors(seq, 2);
    struct Ranked {
        MaximalString m;
        std::uint32_t first;
    };
    std::vector<Ranked> found;
    for (std::size_t L = 0; L < levels.size(); ++L) {
        std::size_t longer_max = 0;
        if (L + 1 < levels.size()) {
            for (const auto& f : levels[L + 1]) longer_max = std::max(longer_max, f.count);
        }
        for (const auto& f : levels[L]) {
            if (f.count > longer_max) found.push_back({{f.tokens, f.count}, f.positions.front()});
        }
    }
    std::sort(found.begin(), found.end(), [](const Ranked& a, const Ranked& b) {
        if (a.m.count != b.m.count) return a.m.count > b.m.count;
        if (a.m.tokens.size() != b.m.tokens.size()) return a.m.tokens.size() > b.m.tokens.size();
        return a.first < b.first;
    });
    std::vector<MaximalString> out;
    out.reserve(found.size());
    for (auto& r : found) out.push_back(std::move(r.m));
    return out;
}

void write_trace_csv(std::ostream& out, const RepairTrace& trace) {
    out << "round,string,count,size\n";
    for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
        const auto& round = trace.rounds[r];
        out << (r + 1) << ',';
        for (std::size_t i = 0; i < round.selected.size(); ++i) {
            if (i) out << ' ';
            out << (round.selected[i].is_terminal() ? "t:" : "n:") << round.selected[i].id();
        }
        out << ',' << round.count << ',' << round.size_after << '\n';
    }
}

} // namespace gramlab
