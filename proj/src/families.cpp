#include <bit>

#include "gramlab/factors.hpp"
#include "gramlab/families.hpp"

namespace gramlab::families {

namespace {

constexpr symbol_t A = 0;
constexpr symbol_t B = 1;

void append_run(std::vector<symbol_t>& out, symbol_t s, std::uint64_t n) { out.insert(out.end(), n, s); }

Slp run(symbol_t s, std::uint64_t n) { return power(trivial(Word::from({s})), n); }

Slp literal(std::vector<symbol_t> syms) { return trivial(Word::from(std::move(syms))); }

void require_k(std::size_t k, std::size_t min, const char* what) {
    if (k < min) {
        throw GrammarError(Errc::precondition,
                           std::string(what) + " requires k >= " + std::to_string(min) + ", got " + std::to_string(k));
    }
}

} // namespace

const char* to_string(Family f) noexcept {
    switch (f) {
    case Family::bisection: return "bisection";
    case Family::bisection_binary: return "bisection-binary";
    case Family::lz78: return "lz78";
    case Family::repair: return "repair";
    case Family::incompressible: return "incompressible";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    if (name == "bisection") return Family::bisection;
    if (name == "bisection-binary" || name == "bisection_binary") return Family::bisection_binary;
    if (name == "lz78") return Family::lz78;
    if (name == "repair") return Family::repair;
    if (name == "incompressible") return Family::incompressible;
    throw GrammarError(Errc::parse, "unknown family '" + name + "'");
}

// ---------------------------------------------------------------------------
// BISECTION

std::size_t ceil_log2(std::uint64_t k) {
    if (k == 0) throw GrammarError(Errc::precondition, "ceil_log2(0)");
    return k == 1 ? 0 : static_cast<std::size_t>(std::bit_width(k - 1));
}

Word bin_pad(std::size_t k, std::size_t j) {
    require_k(k, 2, "bin_pad");
    if (j >= k) {
        throw GrammarError(Errc::out_of_range,
                           "bin_pad: j = " + std::to_string(j) + " outside [0, " + std::to_string(k - 1) + "]");
    }
    const std::size_t bits = ceil_log2(k);
    std::vector<symbol_t> out(bits);
    for (std::size_t i = 0; i < bits; ++i) out[bits - 1 - i] = (j >> i) & 1u;
    return Word(std::move(out), 2);
}

std::size_t bisection_m(std::size_t k) {
    require_k(k, 2, "bisection family");
    const std::size_t c = ceil_log2(k);
    if (k - c >= 63) throw GrammarError(Errc::length_limit, "bisection family: k too large");
    const std::size_t block = std::size_t{1} << (k - c);
    if (block <= c) {
        throw GrammarError(Errc::precondition,
                           "bisection family: m_k = 2^(k - ceil log2 k) - ceil log2 k < 1 for k = " +
                               std::to_string(k));
    }
    return block - c;
}

Word bisection_u(std::size_t k) {
    const std::size_t m = bisection_m(k);
    std::vector<symbol_t> out;
    for (std::size_t j = 0; j < k; ++j) {
        if (j) append_run(out, 2, m);
        auto b = bin_pad(k, j);
        out.insert(out.end(), b.symbols.begin(), b.symbols.end());
    }
    return Word(std::move(out), 3);
}

std::vector<Word> bisection_factor_set(std::size_t k) {
    const std::size_t m = bisection_m(k);
    std::vector<Word> out;
    out.reserve((m + 1) * k);
    for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<symbol_t> f;
            append_run(f, 2, i);
            auto b = bin_pad(k, j);
            f.insert(f.end(), b.symbols.begin(), b.symbols.end());
            append_run(f, 2, m - i);
            out.emplace_back(std::move(f), 3);
        }
    }
    return out;
}

FamilyInstance bisection_hard(std::size_t k) {
    const std::size_t m = bisection_m(k);
    const std::size_t c = ceil_log2(k);
    const Word u = bisection_u(k);

    std::vector<symbol_t> s;
    s.reserve((m + 1) * k * (m + c));
    for (std::size_t r = 0; r < m; ++r) {
        s.insert(s.end(), u.symbols.begin(), u.symbols.end());
        append_run(s, 2, m + 1);
    }
    s.insert(s.end(), u.symbols.begin(), u.symbols.end());

    // Pattern (z x a)^m z with z = u_k and x = a^m; u_k itself is bin(0) x bin(1) x ... bin(k-1).
    constexpr symbol_t z = 3, x = 4;
    Slp q = concat(power(literal({z, x, 2}), m), literal({z}));
    std::vector<symbol_t> u_pattern;
    for (std::size_t j = 0; j < k; ++j) {
        if (j) u_pattern.push_back(x);
        auto b = bin_pad(k, j);
        u_pattern.insert(u_pattern.end(), b.symbols.begin(), b.symbols.end());
    }
    q = substitute(q, build_block(Word(std::move(u_pattern), 5)), z);
    q = substitute(q, run(2, m), x);

    FamilyInstance inst{Family::bisection, k, std::nullopt, Word(std::move(s), 3), Alphabet::bits_and_a(),
                        std::move(q), {}};
    inst.predicted.factor_set = bisection_factor_set(k);
    inst.predicted.factor_count = (m + 1) * k;
    inst.predicted.block_length = m + c;
    return inst;
}

Word binary_image(const Word& ternary) {
    std::vector<symbol_t> out;
    out.reserve(2 * ternary.size());
    for (auto s : ternary.symbols) {
        if (s > 2) throw GrammarError(Errc::out_of_range, "binary_image: symbol outside {0, 1, a}");
        out.push_back(s == 2 ? 1 : 0);
        out.push_back(s == 1 ? 1 : 0);
    }
    return Word(std::move(out), 2);
}

FamilyInstance bisection_hard_binary(std::size_t k) {
    auto inst = bisection_hard(k);
    inst.family = Family::bisection_binary;
    inst.word = binary_image(inst.word);
    inst.alphabet = Alphabet::bits();
    inst.witness = apply_morphism(inst.witness, {{0, 0}, {0, 1}, {1, 0}});
    for (auto& f : inst.predicted.factor_set) f = binary_image(f);
    inst.predicted.block_length *= 2;
    return inst;
}

// ---------------------------------------------------------------------------
// LZ78

Word lz78_u(std::size_t m, std::size_t k) {
    std::vector<symbol_t> out;
    for (std::size_t t = 0; t < k; ++t) {
        for (std::size_t r = 0; r < m; ++r) {
            append_run(out, A, k);
            append_run(out, B, 2 * m + 1);
            out.push_back(A);
        }
        for (int r = 0; r < 2; ++r) {
            append_run(out, A, k);
            append_run(out, B, m + 1);
        }
    }
    append_run(out, A, k);
    return Word(std::move(out), 2);
}

Word lz78_v(std::size_t m, std::size_t k) {
    std::vector<symbol_t> period;
    for (std::size_t i = 1; i <= m; ++i) {
        append_run(period, B, i);
        append_run(period, A, k);
    }
    return power(Word(std::move(period), 2), k * k);
}

std::size_t lz78_predicted_factors(std::size_t m, std::size_t k) {
    return k + 2 * m + k * (2 * m + 2) + k * k * m;
}

FamilyInstance lz78_hard(std::size_t m, std::size_t k) {
    if (m < 1) throw GrammarError(Errc::precondition, "lz78 family requires m >= 1");
    require_k(k, 2, "lz78 family");

    std::vector<symbol_t> s;
    append_run(s, A, k * (k + 1) / 2);
    append_run(s, B, m * (2 * m + 1));
    auto u = lz78_u(m, k);
    auto v = lz78_v(m, k);
    s.insert(s.end(), u.symbols.begin(), u.symbols.end());
    s.insert(s.end(), v.symbols.begin(), v.symbols.end());

    // Pattern symbols: x = a^k, y = b^(2m+1), z = b^(m+1), y_i = b^i.
    constexpr symbol_t x = 2, y = 3, z = 4;
    auto yi = [](std::size_t i) { return static_cast<symbol_t>(4 + i); };

    Slp u_pat = concat(power(concat(power(literal({x, y, A}), m), power(literal({x, z}), 2)), k), literal({x}));
    std::vector<symbol_t> period;
    for (std::size_t i = 1; i <= m; ++i) {
        period.push_back(yi(i));
        period.push_back(x);
    }
    Slp v_pat = power(literal(period), k * k);
    Slp q = concat(concat(concat(run(A, k * (k + 1) / 2), run(B, m * (2 * m + 1))), u_pat), v_pat);

    q = substitute(q, literal({yi(m), yi(m), B}), y);
    q = substitute(q, literal({yi(m), B}), z);
    for (std::size_t i = m; i >= 2; --i) q = substitute(q, literal({yi(i - 1), B}), yi(i));
    q = substitute(q, literal({B}), yi(1));
    q = substitute(q, run(A, k), x);

    FamilyInstance inst{Family::lz78, k, m, Word(std::move(s), 2), Alphabet::letters(), std::move(q), {}};
    inst.predicted.factor_count = lz78_predicted_factors(m, k);
    inst.predicted.count_asserted = m % 2 == 0;
    return inst;
}

// ---------------------------------------------------------------------------
// RePair

DeBruijn de_bruijn(std::size_t n) {
    if (n < 1) throw GrammarError(Errc::precondition, "de_bruijn requires n >= 1");
    if (n > 26) throw GrammarError(Errc::length_limit, "de_bruijn: order too large");
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t mask = total - 1;
    std::vector<bool> seen(total, false);
    std::vector<symbol_t> l(n, 0);
    seen[0] = true;
    std::uint64_t window = 0;
    while (true) {
        const std::uint64_t one = ((window << 1) | 1) & mask;
        const std::uint64_t zero = (window << 1) & mask;
        if (!seen[one]) {
            window = one;
            l.push_back(1);
        } else if (!seen[zero]) {
            window = zero;
            l.push_back(0);
        } else {
            break;
        }
        seen[window] = true;
    }
    std::vector<symbol_t> bits(l.begin() + static_cast<std::ptrdiff_t>(n),
                               l.begin() + static_cast<std::ptrdiff_t>(total));
    bits.insert(bits.end(), n, 0);
    return {n, Word(std::move(bits), 2)};
}

std::vector<symbol_t> repair_bits(std::size_t k) {
    require_k(k, 2, "repair family");
    const auto b = de_bruijn(ceil_log2(k));
    std::vector<symbol_t> w;
    w.reserve(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        w.push_back(b.bits[i] == 0 ? 0 : 1);
        w.push_back(b.bits[i] == 0 ? 1 : 0);
    }
    return w;
}

std::uint64_t prefix_value(const std::vector<symbol_t>& bits, std::size_t len) {
    if (len > bits.size()) throw GrammarError(Errc::out_of_range, "prefix_value: prefix longer than word");
    if (len > 63) throw GrammarError(Errc::length_limit, "prefix_value: more than 63 bits");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < len; ++i) v = (v << 1) | bits[i];
    return v;
}

std::uint64_t repair_word_length(std::size_t k) {
    auto bits = repair_bits(k);
    std::uint64_t n = k - 1;
    for (std::size_t i = 1; i <= k; ++i) n += prefix_value(bits, k + i);
    return n;
}

FamilyInstance repair_hard(std::size_t k) {
    auto bits = repair_bits(k);
    std::vector<std::uint64_t> exps;
    for (std::size_t i = 1; i <= k; ++i) exps.push_back(prefix_value(bits, k + i));

    std::uint64_t n = k - 1;
    for (auto e : exps) n += e;
    if (n > default_length_cap) throw GrammarError(Errc::length_limit, "repair family: word too long");
    std::vector<symbol_t> s;
    s.reserve(n);
    for (std::size_t i = 0; i < k; ++i) {
        if (i) s.push_back(B);
        append_run(s, A, exps[i]);
    }

    // Pattern x_1 b x_2 b ... x_k with x_i = a^(exps[i-1]); x_i = x_{i-1} x_{i-1} [a].
    auto xi = [](std::size_t i) { return static_cast<symbol_t>(1 + i); };
    std::vector<symbol_t> pattern;
    for (std::size_t i = 1; i <= k; ++i) {
        if (i > 1) pattern.push_back(B);
        pattern.push_back(xi(i));
    }
    Slp q = literal(pattern);
    for (std::size_t i = k; i >= 2; --i) {
        std::vector<symbol_t> rhs{xi(i - 1), xi(i - 1)};
        if (bits[k + i - 1]) rhs.push_back(A);
        q = substitute(q, literal(rhs), xi(i));
    }
    q = substitute(q, run(A, exps[0]), xi(1));

    FamilyInstance inst{Family::repair, k, std::nullopt, Word(std::move(s), 2), Alphabet::letters(), std::move(q),
                        {}};
    inst.predicted.block_exponents = std::move(exps);
    inst.predicted.repair_bits = std::move(bits);
    return inst;
}

// ---------------------------------------------------------------------------
// incompressible words

FamilyInstance incompressible_word(std::size_t k) {
    require_k(k, 1, "incompressible_word");
    auto a = [](std::size_t i) { return static_cast<symbol_t>(i - 1); };
    std::vector<symbol_t> w;
    w.reserve(2 * k * k + 2 * k + 1);
    for (std::size_t i = 1; i <= k; ++i) append_run(w, a(k - i + 1), 5);
    for (std::size_t i = 1; i + 1 <= k; ++i) {
        for (std::size_t j = i + 2; j <= k; ++j) {
            for (int r = 0; r < 2; ++r) {
                w.push_back(a(j));
                w.push_back(a(i));
            }
        }
        w.push_back(a(i + 1));
        w.push_back(a(i));
        w.push_back(a(i + 1));
    }
    Word word(std::move(w), k);
    Slp witness = trivial(word);
    return {Family::incompressible, k, std::nullopt, std::move(word), Alphabet::letters(), std::move(witness), {}};
}

bool in_M(const Word& w, std::size_t n, std::size_t ell) {
    if (ell == 0) throw GrammarError(Errc::precondition, "in_M requires ell >= 1");
    return kernels::has_repeated_factor(w.view(), n, ell);
}

bool is_compressible(const Word& w) { return kernels::is_compressible(w.view()); }

} // namespace gramlab::families
