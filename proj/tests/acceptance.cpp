// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "gramlab/bridge.hpp"
#include "gramlab/compressors.hpp"
#include "gramlab/factors.hpp"
#include "gramlab/families.hpp"
#include "gramlab/oracle.hpp"
#include "gramlab/reference.hpp"

using namespace gramlab;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Word random_word(std::mt19937_64& rng, std::size_t n, std::size_t sigma) {
    std::vector<symbol_t> w(n);
    for (auto& s : w) s = static_cast<symbol_t>(rng() % sigma);
    return Word(std::move(w), sigma);
}

// Random word with copied stretches, so compressors find structure.
Word repetitive_word(std::mt19937_64& rng, std::size_t n, std::size_t sigma) {
    std::vector<symbol_t> w;
    while (w.size() < n) {
        if (w.size() > 4 && rng() % 3 == 0) {
            const std::size_t a = rng() % (w.size() - 1);
            const std::size_t len = std::min<std::size_t>(w.size() - a, 1 + rng() % 40);
            for (std::size_t i = 0; i < len && w.size() < n; ++i) w.push_back(w[a + i]);
        } else {
            w.push_back(static_cast<symbol_t>(rng() % sigma));
        }
    }
    return Word(std::move(w), sigma);
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

Outcome criterion1() {
    Outcome o;
    for (const char* name : {"bisection-sample", "lz78-sample", "repair-unary", "abcabc", "decode-production"}) {
        for (const auto& r : reference::run_checks(name)) o.require(r.passed, r.name + ": " + r.detail);
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    for (auto [m, k] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 4}, {2, 8}, {4, 8}, {4, 16}}) {
        auto inst = families::lz78_hard(m, k);
        const std::size_t got = lz78_factorize(inst.word).nonempty_count();
        const std::size_t want = k + 2 * m + k * (2 * m + 2) + k * k * m;
        o.require(got == want, "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + "): " + std::to_string(got) +
                                   " factors, expected " + std::to_string(want));
    }
    for (const auto& r : reference::run_checks("lz78-listing")) o.require(r.passed, "listing: " + r.detail);
    return o;
}

Outcome bisection_checks(bool binary) {
    Outcome o;
    double prev = 0;
    for (std::size_t k : {4, 6, 8}) {
        auto inst = binary ? families::bisection_hard_binary(k) : families::bisection_hard(k);
        const std::size_t c = bisection(inst.word).size();
        const std::size_t w = inst.witness.size();
        const std::size_t floor = (families::bisection_m(k) + 1) * k;
        const double ratio = static_cast<double>(c) / static_cast<double>(w);
        const std::string tag = (binary ? "f(s_" : "s_") + std::to_string(k) + (binary ? ")" : "");
        o.require(expand(inst.witness) == inst.word, tag + ": witness does not expand to the word");
        o.require(c >= floor, tag + ": size " + std::to_string(c) + " < " + std::to_string(floor));
        o.require(w <= 40 * k, tag + ": witness size " + std::to_string(w) + " > 40k");
        o.require(ratio > prev, tag + ": ratio " + num(ratio) + " not above " + num(prev));
        prev = ratio;
        o.detail += o.ok ? tag + " ratio " + num(ratio) + "; " : "";
    }
    return o;
}

Outcome criterion3() {
    Outcome t = bisection_checks(false);
    Outcome b = bisection_checks(true);
    Outcome o;
    o.require(t.ok, t.detail);
    o.require(b.ok, b.detail);
    if (o.ok) o.detail = t.detail + b.detail;
    return o;
}

// Instances longer than this are out of reach; the grid {8, 12, 16} is cut to what fits.
constexpr std::uint64_t repair_length_cap = 100'000'000;
constexpr double repair_lb_constant = 8;

Outcome criterion4() {
    Outcome o;
    double prev = 0;
    std::string realized;
    std::string skipped;
    for (std::size_t k : {8, 12, 16}) {
        const std::uint64_t n = families::repair_word_length(k);
        if (n > repair_length_cap) {
            skipped += " k=" + std::to_string(k) + " (|s_k|=" + std::to_string(n) + ")";
            continue;
        }
        realized += " " + std::to_string(k);
        auto inst = families::repair_hard(k);
        auto r = repair(inst.word);
        const auto& rounds = r.trace.rounds;
        const std::string tag = "k=" + std::to_string(k);
        o.require(rounds.size() >= k - 1, tag + ": fewer than k-1 rounds");
        for (std::size_t i = 0; o.ok && i + 1 < k; ++i) {
            const std::vector<Token> want = i == 0 ? std::vector<Token>{T(0), T(0)}
                                                   : std::vector<Token>{N(static_cast<nt_t>(i)), N(static_cast<nt_t>(i))};
            o.require(rounds[i].selected == want && rounds[i].nonterminal == i + 1,
                      tag + ": round " + std::to_string(i + 1) + " selects an unexpected string");
        }
        const std::size_t c = r.grammar.size();
        const std::size_t w = inst.witness.size();
        const double lb = double(k * k) / (repair_lb_constant * std::log2(double(k)));
        const double ratio = double(c) / double(w);
        o.require(expand(inst.witness) == inst.word, tag + ": witness does not expand to the word");
        o.require(w <= 20 * k, tag + ": witness size " + std::to_string(w) + " > 20k");
        o.require(double(c) >= lb, tag + ": size " + std::to_string(c) + " < " + num(lb));
        o.require(ratio > prev, tag + ": ratio " + num(ratio) + " not above " + num(prev));
        prev = ratio;
        o.detail += tag + " size " + std::to_string(c) + " witness " + std::to_string(w) + " ratio " + num(ratio) + "; ";
    }
    if (o.ok) o.detail += "grid {" + realized + " }, skipped" + skipped;
    return o;
}

Outcome criterion5() {
    Outcome o;
    auto p = oracle::verify_prop2(2, 14);
    o.require(p.boundary_holds, "boundary sweep failed");
    o.require(p.rows.size() == 14 && p.rows[12].incompressible > 0, "no incompressible word of length 13");
    o.require(p.rows.size() == 14 && p.rows[13].words == 16384 && p.rows[13].incompressible == 0,
              "some word of length 14 is incompressible");
    auto c = oracle::cross_validate_predicate(2, 8);
    o.require(c.mismatches == 0, std::to_string(c.mismatches) + " predicate mismatches");
    if (o.ok) o.detail = std::to_string(p.rows[12].incompressible) + " incompressible words of length 13; " +
                         std::to_string(c.words) + " words cross-validated";
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::mt19937_64 rng(6);
    const bridge::BinaryCompressor rp = [](const Word& v) { return repair(v).grammar; };
    for (int i = 0; i < 200 && o.ok; ++i) {
        const std::size_t k = 2 + rng() % 7;
        Word w = repetitive_word(rng, 1 + rng() % 300, k);
        std::vector<symbol_t> remap;
        Word dense = bridge::dense_remap(w, remap);
        const std::size_t kd = remap.size();
        Slp g = repair(dense).grammar;
        Slp e = bridge::encode_slp(g, kd);
        o.require(e.size() == g.size() + 2 * kd - 1, "encode size mismatch on word " + std::to_string(i));
        o.require(expand(bridge::decode_slp(e, kd)) == dense, "decode round trip failed on word " + std::to_string(i));
        auto d = bridge::compressor_D(w, rp);
        o.require(expand(d.grammar) == w, "D does not reproduce word " + std::to_string(i));
        o.require(d.grammar.size() <= 2 * d.binary_size, "size(D(w)) > 2 size(C(phi(w))) on word " + std::to_string(i));
    }
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::mt19937_64 rng(7);
    auto factor_bound = [&](const Slp& g, const Word& w, const char* who) {
        auto counts = kernels::distinct_factor_counts(w.symbols, 8);
        for (std::size_t k = 1; k <= counts.size(); ++k) {
            o.require(counts[k - 1] <= g.size() * k, std::string(who) + ": factor-count bound fails at k=" + std::to_string(k));
        }
    };
    for (int i = 0; i < 1000 && o.ok; ++i) {
        const std::size_t sigma = 1 + rng() % 5;
        const std::size_t n = 1 + rng() % 2000;
        Word w = i % 2 ? random_word(rng, n, sigma) : repetitive_word(rng, n, sigma);
        Slp b = bisection(w);
        Slp l = lz78(w);
        auto r = repair(w);
        o.require(expand(b) == w, "bisection round trip");
        o.require(expand(l) == w, "lz78 round trip");
        o.require(expand(r.grammar) == w, "repair round trip");
        factor_bound(b, w, "bisection");
        factor_bound(l, w, "lz78");
        factor_bound(r.grammar, w, "repair");
        std::size_t prev = r.trace.initial_size;
        for (const auto& round : r.trace.rounds) {
            o.require(round.size_after <= prev, "repair trace size increased");
            prev = round.size_after;
        }
        if (i % 10 == 0) {
            auto d = repair(w, RepairVariant::digram);
            o.require(expand(d.grammar) == w, "repair digram round trip");
            factor_bound(d.grammar, w, "repair digram");
        }
    }
    for (int i = 0; i < 300 && o.ok; ++i) {
        Word x = repetitive_word(rng, 1 + rng() % 100, 1 + rng() % 4);
        Word y = repetitive_word(rng, 1 + rng() % 100, 1 + rng() % 4);
        Slp gx = repair(x).grammar;
        Slp gy = lz78(y);
        const std::uint64_t n = 1 + rng() % 50;
        Slp p = power(gx, n);
        o.require(expand(p) == power(x, n), "power value");
        o.require(p.size() <= gx.size() + 4 * static_cast<std::size_t>(std::floor(std::log2(double(n)))) + 2, "power size");
        Slp c = concat(gx, gy);
        o.require(expand(c) == concat(x, y), "concat value");
        o.require(c.size() <= gx.size() + gy.size(), "concat size");
        // x is pattern over {0..3} plus the fresh symbol 7; y's grammar over {0..3} replaces 7.
        Word pat = x;
        for (auto& s : pat.symbols) {
            if (rng() % 3 == 0) s = 7;
        }
        Slp gp = bisection(pat);
        Slp sub = substitute(gp, gy, 7);
        std::vector<symbol_t> want;
        for (auto s : pat.symbols) {
            if (s == 7) {
                want.insert(want.end(), y.symbols.begin(), y.symbols.end());
            } else {
                want.push_back(s);
            }
        }
        o.require(expand(sub).symbols == want, "substitute value");
        o.require(sub.size() <= gp.size() + gy.size(), "substitute size");
    }
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all{
        {1, "worked examples", 1, criterion1},
        {2, "lz78 factor count formula", 10, criterion2},
        {3, "bisection family", 30, criterion3},
        {4, "repair family", 300, criterion4},
        {5, "incompressibility boundary", 300, criterion5},
        {6, "binary bridge bounds", 60, criterion6},
        {7, "property suites", 120, criterion7},
    };
    int failures = 0;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("threw: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && secs > c.limit_s) {
            o.ok = false;
            o.detail = "took " + num(secs) + " s, limit " + num(c.limit_s) + " s";
        }
        failures += o.ok ? 0 : 1;
        std::printf("%s criterion %d (%s) [%.2f s]%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                    o.detail.empty() ? "" : ": ", o.detail.c_str());
        std::fflush(stdout);
    }
    return failures;
}
