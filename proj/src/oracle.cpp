#include <algorithm>
#include <set>

#include "gramlab/factors.hpp"
#include "gramlab/oracle.hpp"

namespace gramlab::oracle {

namespace {

using Seq = std::vector<symbol_t>;

class ExactSearch {
public:
    ExactSearch(const Word& w, std::uint64_t budget) : m_w(w.symbols), m_budget(budget) {
        const std::size_t n = m_w.size();
        std::set<Seq> seen;
        for (std::size_t len = 2; len <= n / 2; ++len) {
            for (std::size_t i = 0; i + len <= n; ++i) {
                Seq f(m_w.begin() + static_cast<std::ptrdiff_t>(i), m_w.begin() + static_cast<std::ptrdiff_t>(i + len));
                if (!seen.insert(f).second) continue;
                if (kernels::nonoverlapping_count(m_w, f) >= 2) m_candidates.push_back(std::move(f));
            }
        }
        std::size_t lb = distinct_factor_lower_bound(w, std::min<std::size_t>(8, n));
        m_lower = std::max(lb, w.distinct_symbols());
        m_best = n;
    }

    void run() {
        std::vector<std::size_t> chosen;
        search(0, chosen);
    }

    std::size_t best() const { return m_best; }
    std::uint64_t evaluated() const { return m_evaluated; }

    Slp witness() const {
        std::vector<const Seq*> members;
        for (auto i : m_best_set) members.push_back(&m_candidates[i]);
        std::map<nt_t, Rhs> rules;
        for (std::size_t x = 0; x < members.size(); ++x) {
            rules[static_cast<nt_t>(x + 1)] = parse_rhs(*members[x], members, members[x]->size());
        }
        rules[0] = parse_rhs(m_w, members, m_w.size());
        return prune(Slp(0, std::move(rules)));
    }

private:
    // Candidates are generated by increasing length, so chosen index order is length order.
    void search(std::size_t from, std::vector<std::size_t>& chosen) {
        if (m_best == m_lower) return;
        if (!chosen.empty()) {
            if (++m_evaluated > m_budget) {
                throw GrammarError(Errc::budget_exceeded,
                                   "exact search exceeded its budget of " + std::to_string(m_budget) + " rule sets");
            }
            const std::size_t c = cost(chosen);
            if (c < m_best) {
                m_best = c;
                m_best_set = chosen;
            }
        }
        // Each rule costs at least 2 and the start rule at least 2.
        if (2 * (chosen.size() + 1) + 2 >= m_best) return;
        for (std::size_t i = from; i < m_candidates.size(); ++i) {
            chosen.push_back(i);
            search(i + 1, chosen);
            chosen.pop_back();
            if (m_best == m_lower) return;
        }
    }

    /// Shortest parse of t into symbols and members strictly shorter than `limit`.
    static std::vector<std::size_t> parse_table(const Seq& t, const std::vector<const Seq*>& members,
                                                std::size_t limit, std::vector<std::size_t>* choice) {
        const std::size_t n = t.size();
        constexpr std::size_t inf = std::size_t(-1);
        std::vector<std::size_t> dp(n + 1, inf);
        if (choice) choice->assign(n + 1, inf);
        dp[0] = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            dp[i] = dp[i - 1] + 1;
            if (choice) (*choice)[i] = inf;
            for (std::size_t x = 0; x < members.size(); ++x) {
                const Seq& m = *members[x];
                const std::size_t len = m.size();
                if (len >= limit || len > i || dp[i - len] == inf || dp[i - len] + 1 >= dp[i]) continue;
                if (std::equal(m.begin(), m.end(), t.begin() + static_cast<std::ptrdiff_t>(i - len))) {
                    dp[i] = dp[i - len] + 1;
                    if (choice) (*choice)[i] = x;
                }
            }
        }
        return dp;
    }

    static Rhs parse_rhs(const Seq& t, const std::vector<const Seq*>& members, std::size_t limit) {
        std::vector<std::size_t> choice;
        parse_table(t, members, limit, &choice);
        Rhs rhs;
        std::size_t i = t.size();
        while (i > 0) {
            if (choice[i] == std::size_t(-1)) {
                rhs.push_back(T(t[i - 1]));
                --i;
            } else {
                rhs.push_back(N(static_cast<nt_t>(choice[i] + 1)));
                i -= members[choice[i]]->size();
            }
        }
        std::reverse(rhs.begin(), rhs.end());
        return rhs;
    }

    std::size_t cost(const std::vector<std::size_t>& chosen) const {
        std::vector<const Seq*> members;
        members.reserve(chosen.size());
        for (auto i : chosen) members.push_back(&m_candidates[i]);
        std::size_t total = 0;
        for (const Seq* m : members) {
            total += parse_table(*m, members, m->size(), nullptr).back();
            if (total >= m_best) return total;
        }
        return total + parse_table(m_w, members, m_w.size(), nullptr).back();
    }

    const Seq& m_w;
    std::uint64_t m_budget;
    std::vector<Seq> m_candidates;
    std::size_t m_lower = 0;
    std::size_t m_best = 0;
    std::vector<std::size_t> m_best_set;
    std::uint64_t m_evaluated = 0;
};

} // namespace

ExactResult smallest_slp_exact(const Word& w, std::uint64_t budget, std::size_t max_length) {
    if (w.empty()) throw GrammarError(Errc::empty_word, "exact search on the empty word");
    max_length = std::min(max_length, max_exact_length);
    if (w.size() > max_length) {
        throw GrammarError(Errc::length_limit, "exact search is limited to length " + std::to_string(max_length) +
                                                   ", got " + std::to_string(w.size()));
    }
    ExactSearch search(w, budget);
    search.run();
    ExactResult r;
    r.size = search.best();
    r.witness = search.witness();
    r.evaluated = search.evaluated();
    return r;
}

GBounds g_bounds(const Word& w, const std::vector<Algorithm>& compressors, const Slp* witness,
                 std::optional<std::uint64_t> exact_budget) {
    if (w.empty()) throw GrammarError(Errc::empty_word, "g_bounds on the empty word");
    GBounds b;
    b.lower = std::max(distinct_factor_lower_bound(w, std::min<std::size_t>(8, w.size())), w.distinct_symbols());
    b.upper_witness = trivial(w);
    b.upper = w.size();
    b.upper_source = "trivial";
    auto offer = [&](Slp g, const std::string& source) {
        if (g.size() < b.upper) {
            b.upper = g.size();
            b.upper_witness = std::move(g);
            b.upper_source = source;
        }
    };
    for (auto a : compressors) offer(run_compressor(a, w), to_string(a));
    if (witness) offer(*witness, "witness");
    if (exact_budget && w.size() <= max_exact_length) {
        auto r = smallest_slp_exact(w, *exact_budget);
        b.exact = r.size;
        offer(std::move(r.witness), "exact");
    }
    return b;
}

Prop2Report verify_prop2(std::size_t k, std::size_t n_max) {
    if (k < 1 || k > 2) throw GrammarError(Errc::precondition, "verify_prop2 supports k in {1, 2}");
    if (n_max < 1 || n_max > prop2_max_length) {
        throw GrammarError(Errc::precondition,
                           "verify_prop2: n_max must lie in [1, " + std::to_string(prop2_max_length) + "]");
    }
    Prop2Report rep;
    rep.k = k;
    rep.n_k = 2 * k * k + 2 * k + 1;
    rep.boundary_holds = true;
    for (std::size_t n = 1; n <= n_max; ++n) {
        auto s = kernels::incompressible_sweep(static_cast<std::uint32_t>(k), n);
        Prop2Row row{n, s.words, s.incompressible, s.example};
        const bool expect_some = n <= rep.n_k;
        if (expect_some != (row.incompressible > 0)) rep.boundary_holds = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

PredicateCheck cross_validate_predicate(std::size_t k, std::size_t max_len) {
    if (max_len > max_exact_length) {
        throw GrammarError(Errc::length_limit, "cross validation is limited to the exact search length");
    }
    PredicateCheck check;
    std::vector<symbol_t> syms;
    for (std::size_t n = 1; n <= max_len; ++n) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= k;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            kernels::word_from_index(idx, static_cast<std::uint32_t>(k), n, syms);
            Word w(syms, k);
            const bool exact = smallest_slp_exact(w).size < n;
            const bool predicate = kernels::is_compressible(syms);
            ++check.words;
            if (exact != predicate) {
                if (check.mismatches++ == 0) check.first_mismatch = syms;
            }
        }
    }
    return check;
}

} // namespace gramlab::oracle
