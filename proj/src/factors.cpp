#include "gramlab/factors.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gramlab::kernels {

namespace {

constexpr std::uint64_t bitmap_limit = std::uint64_t{1} << 26;

std::uint64_t alphabet_bound(std::span<const symbol_t> w) {
    symbol_t top = 0;
#pragma omp parallel for reduction(max : top) schedule(static)
    for (std::size_t i = 0; i < w.size(); ++i) top = std::max(top, w[i]);
    return std::uint64_t{top} + 1;
}

/// sigma^k, or 0 if it exceeds `limit`.
std::uint64_t bounded_pow(std::uint64_t sigma, std::size_t k, std::uint64_t limit) {
    unsigned __int128 p = 1;
    for (std::size_t i = 0; i < k; ++i) {
        p *= sigma;
        if (p > limit) return 0;
    }
    return static_cast<std::uint64_t>(p);
}

std::size_t count_with_bitmap(std::span<const symbol_t> w, std::size_t k, std::uint64_t sigma,
                              std::uint64_t space) {
    const std::size_t windows = w.size() - k + 1;
    const std::size_t wordsz = static_cast<std::size_t>(space / 64 + 1);
    std::vector<std::uint64_t> seen(wordsz, 0);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(wordsz, 0);
#pragma omp for schedule(static)
        for (std::size_t i = 0; i < windows; ++i) {
            std::uint64_t code = 0;
            for (std::size_t j = 0; j < k; ++j) code = code * sigma + w[i + j];
            local[code >> 6] |= std::uint64_t{1} << (code & 63);
        }
#pragma omp critical
        for (std::size_t i = 0; i < wordsz; ++i) seen[i] |= local[i];
    }
    std::size_t total = 0;
    for (auto x : seen) total += static_cast<std::size_t>(std::popcount(x));
    return total;
}

std::size_t count_with_codes(std::span<const symbol_t> w, std::size_t k, unsigned bits) {
    const std::size_t windows = w.size() - k + 1;
    std::vector<std::uint64_t> codes(windows);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < windows; ++i) {
        std::uint64_t code = 0;
        for (std::size_t j = 0; j < k; ++j) code = (code << bits) | w[i + j];
        codes[i] = code;
    }
    std::sort(codes.begin(), codes.end());
    return static_cast<std::size_t>(std::unique(codes.begin(), codes.end()) - codes.begin());
}

std::size_t count_with_windows(std::span<const symbol_t> w, std::size_t k) {
    const std::size_t windows = w.size() - k + 1;
    std::vector<std::size_t> idx(windows);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    auto less = [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(w.begin() + a, w.begin() + a + k, w.begin() + b,
                                            w.begin() + b + k);
    };
    std::sort(idx.begin(), idx.end(), less);
    std::size_t distinct = windows ? 1 : 0;
    for (std::size_t i = 1; i < windows; ++i) {
        if (less(idx[i - 1], idx[i])) ++distinct;
    }
    return distinct;
}

bool has_repeated_factor_small(std::span<const symbol_t> w, std::size_t n, std::size_t ell) {
    if (ell == 0 || w.size() < ell * n) return false;
    for (std::size_t i = 0; i + ell * n <= w.size(); ++i) {
        if (nonoverlapping_count(w.subspan(i), w.subspan(i, ell)) >= n) return true;
    }
    return false;
}

} // namespace

std::vector<std::size_t> distinct_factor_counts(std::span<const symbol_t> w, std::size_t max_k) {
    std::vector<std::size_t> counts(max_k, 0);
    if (w.empty()) return counts;
    const std::uint64_t sigma = alphabet_bound(w);
    const unsigned bits = std::max(1, static_cast<int>(std::bit_width(sigma - 1)));
    for (std::size_t k = 1; k <= max_k && k <= w.size(); ++k) {
        if (std::uint64_t space = bounded_pow(sigma, k, bitmap_limit); space != 0) {
            counts[k - 1] = count_with_bitmap(w, k, sigma, space);
        } else if (k * bits <= 64) {
            counts[k - 1] = count_with_codes(w, k, bits);
        } else {
            counts[k - 1] = count_with_windows(w, k);
        }
    }
    return counts;
}

std::size_t nonoverlapping_count(std::span<const symbol_t> text, std::span<const symbol_t> pattern) {
    const std::size_t L = pattern.size();
    if (L == 0 || text.size() < L) return 0;
    std::size_t count = 0;
    std::size_t i = 0;
    while (i + L <= text.size()) {
        if (std::equal(pattern.begin(), pattern.end(), text.begin() + i)) {
            ++count;
            i += L;
        } else {
            ++i;
        }
    }
    return count;
}

bool has_repeated_factor(std::span<const symbol_t> w, std::size_t n, std::size_t ell) {
    if (ell == 0 || n == 0) return n == 0;
    if (w.size() < ell * n) return false;
    if (w.size() <= 64) return has_repeated_factor_small(w, n, ell);

    const std::uint64_t sigma = alphabet_bound(w);
    const unsigned bits = std::max(1, static_cast<int>(std::bit_width(sigma - 1)));
    if (ell * bits > 64) return serial::has_repeated_factor(w, n, ell);

    // Greedy non-overlapping count per distinct factor in one pass: an occurrence is
    // taken iff it starts at or after the end of the previously taken one.
    struct State {
        std::size_t count = 0;
        std::size_t next_free = 0;
    };
    std::unordered_map<std::uint64_t, State> state;
    for (std::size_t i = 0; i + ell <= w.size(); ++i) {
        std::uint64_t code = 0;
        for (std::size_t j = 0; j < ell; ++j) code = (code << bits) | w[i + j];
        auto& st = state[code];
        if (i >= st.next_free) {
            if (++st.count >= n) return true;
            st.next_free = i + ell;
        }
    }
    return false;
}

bool is_compressible(std::span<const symbol_t> w) {
    return has_repeated_factor(w, 3, 2) || has_repeated_factor(w, 2, 3);
}

void word_from_index(std::uint64_t idx, std::uint32_t k, std::size_t n, std::vector<symbol_t>& out) {
    out.resize(n);
    for (std::size_t i = n; i-- > 0;) {
        out[i] = static_cast<symbol_t>(k > 1 ? idx % k : 0);
        if (k > 1) idx /= k;
    }
}

namespace {

std::uint64_t word_count(std::uint32_t k, std::size_t n) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / std::max<std::uint32_t>(k, 1)) {
            throw std::overflow_error("word space too large to enumerate");
        }
        total *= k;
    }
    return total;
}

} // namespace

SweepResult incompressible_sweep(std::uint32_t k, std::size_t n) {
    SweepResult r;
    r.words = word_count(k, n);
    std::uint64_t count = 0;
    std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
    const auto total = static_cast<std::int64_t>(r.words);
#pragma omp parallel
    {
        std::vector<symbol_t> buf;
#pragma omp for reduction(+ : count) reduction(min : first) schedule(static)
        for (std::int64_t idx = 0; idx < total; ++idx) {
            word_from_index(static_cast<std::uint64_t>(idx), k, n, buf);
            if (!is_compressible(buf)) {
                ++count;
                first = std::min(first, static_cast<std::uint64_t>(idx));
            }
        }
    }
    r.incompressible = count;
    if (count > 0) {
        r.has_example = true;
        word_from_index(first, k, n, r.example);
    }
    return r;
}

namespace serial {

std::vector<std::size_t> distinct_factor_counts(std::span<const symbol_t> w, std::size_t max_k) {
    std::vector<std::size_t> counts(max_k, 0);
    for (std::size_t k = 1; k <= max_k && k <= w.size(); ++k) {
        std::set<std::vector<symbol_t>> seen;
        for (std::size_t i = 0; i + k <= w.size(); ++i) {
            seen.emplace(w.begin() + i, w.begin() + i + k);
        }
        counts[k - 1] = seen.size();
    }
    return counts;
}

bool has_repeated_factor(std::span<const symbol_t> w, std::size_t n, std::size_t ell) {
    if (ell == 0 || n == 0) return n == 0;
    std::set<std::vector<symbol_t>> tried;
    for (std::size_t i = 0; i + ell <= w.size(); ++i) {
        std::vector<symbol_t> f(w.begin() + i, w.begin() + i + ell);
        if (!tried.insert(f).second) continue;
        if (nonoverlapping_count(w, f) >= n) return true;
    }
    return false;
}

SweepResult incompressible_sweep(std::uint32_t k, std::size_t n) {
    SweepResult r;
    r.words = word_count(k, n);
    std::vector<symbol_t> buf;
    for (std::uint64_t idx = 0; idx < r.words; ++idx) {
        word_from_index(idx, k, n, buf);
        if (!(has_repeated_factor(buf, 3, 2) || has_repeated_factor(buf, 2, 3))) {
            if (!r.has_example) {
                r.has_example = true;
                r.example = buf;
            }
            ++r.incompressible;
        }
    }
    return r;
}

} // namespace serial

} // namespace gramlab::kernels
